use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand};
use mindeg::cache::Cache;
use mindeg::commands::{self, CmdError, Options};
use mindeg::expr::{parse_expr, GroupExpr};
use mindeg::record::{Check, Output, ResultRecord, Source, OUTPUT_VERSION};
use mindeg::roots_json::export_roots;
use mindeg_core::coxeter::CoxeterType;
use mindeg_core::subgroups::DEFAULT_MAX_GROUP_ORDER;
use serde::Serialize;

/// Minimal faithful permutation degrees of finite groups.
///
/// Expressions: W(A,3), W(I2,5), Sym(4), Alt(5), C(6), D(10), Q8, BinT, BinO,
/// BinI, BinD(m), G(m,p,n), and the operators `x` (direct product), `circ`
/// (central product over prime-order centers), rot(..) and csym(..).
#[derive(Parser)]
#[command(name = "mindeg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Emit JSON instead of a table.
    #[arg(long, global = true)]
    json: bool,
    /// Lattice cache directory (falls back to $MINDEG_CACHE, then ./.mindeg-cache).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Do not read or write the lattice cache.
    #[arg(long, global = true)]
    no_cache: bool,
    /// Largest group order whose subgroup lattice is enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_GROUP_ORDER)]
    max_order: usize,
    /// Raise the lattice guard to the hard ceiling and run the expensive rows.
    #[arg(long, global = true)]
    allow_heavy: bool,
    /// Worker threads for paper-table.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Per-computation time limit in seconds.
    #[arg(long, global = true)]
    timeout_secs: Option<u64>,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal faithful degree with a certificate.
    Mu { expr: String },
    /// Group order from a stabilizer chain.
    Order { expr: String },
    /// Degree, order, orbits, center and minimal normal subgroups.
    Info { expr: String },
    /// Conjugacy classes of subgroups.
    Subgroups { expr: String },
    /// Minimal degrees of the Coxeter families against the expected values.
    PaperTable,
    /// Checks a group and its centralizer witness strict subadditivity.
    WitnessStrict { expr: String },
    /// Re-verifies the certificates in a `mu --json` output file.
    VerifyCert { file: PathBuf },
    /// Exports a root system (e.g. F4, H4, E8) as exact coordinates.
    Roots { kind: String },
}

fn emit<T: Serialize>(command: &str, input: Option<&str>, records: &[T]) {
    let out = Output {
        command: command.into(),
        input: input.map(String::from),
        records: records.iter().map(|r| serde_json::to_value(r).expect("records serialize")).collect(),
        version: OUTPUT_VERSION,
    };
    println!("{}", serde_json::to_string_pretty(&out).expect("output serializes"));
}

fn parse(text: &str) -> Result<GroupExpr, CmdError> {
    parse_expr(text).map_err(|e| {
        if let mindeg::expr::ExprError::Syntax { column, .. } = &e {
            eprintln!("{}\n{}^", text, " ".repeat(column.saturating_sub(1)));
        }
        e.into()
    })
}

fn source_label(s: &Source) -> String {
    match s {
        Source::Computed => "computed".into(),
        Source::Recorded { citation } => format!("recorded: {}", citation),
        Source::Unavailable { reason } => format!("unavailable: {}", reason),
    }
}

fn print_checks(checks: &[Check]) {
    for c in checks {
        println!("    [{}] {}: {}", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
    }
}

fn print_records(records: &[ResultRecord]) {
    println!("{:<20} {:>8} {:>20} {:>6} {:>8}  {:<6} source", "group", "degree", "order", "mu", "expected", "status");
    for r in records {
        let mu = r.mu.map_or("-".into(), |m| m.to_string());
        let ex = r.expected.map_or("-".into(), |m| m.to_string());
        println!(
            "{:<20} {:>8} {:>20} {:>6} {:>8}  {:<6} {}",
            r.expression,
            r.degree,
            r.order,
            mu,
            ex,
            if r.ok() { "ok" } else { "FAIL" },
            source_label(&r.source)
        );
        print_checks(&r.checks);
    }
}

fn run(cli: &Cli) -> Result<bool, CmdError> {
    let opts = Options {
        max_order: cli.max_order,
        allow_heavy: cli.allow_heavy,
        timeout: cli.timeout_secs.map(Duration::from_secs),
        cache: if cli.no_cache { None } else { Some(Cache::resolve(cli.cache_dir.as_deref())) },
        threads: cli.threads.max(1),
    };
    match &cli.command {
        Command::Mu { expr } => {
            let r = commands::cmd_mu(&parse(expr)?, &opts)?;
            if cli.json {
                emit("mu", Some(expr), std::slice::from_ref(&r));
            } else {
                print_records(std::slice::from_ref(&r));
                if let Some(c) = &r.certificate {
                    println!("witness: {} subgroup(s) of indices {:?}", c.witness.len(), c.witness.iter().map(|w| r.order.parse::<usize>().unwrap_or(0) / w.len().max(1)).collect::<Vec<_>>());
                }
            }
            Ok(r.ok())
        }
        Command::Order { expr } => {
            let (degree, order) = commands::cmd_order(&parse(expr)?)?;
            if cli.json {
                #[derive(Serialize)]
                struct O<'a> {
                    expression: &'a str,
                    degree: usize,
                    order: String,
                }
                emit("order", Some(expr), &[O { expression: expr, degree, order }]);
            } else {
                println!("{} (degree {}): order {}", expr, degree, order);
            }
            Ok(true)
        }
        Command::Info { expr } => {
            let info = commands::cmd_info(&parse(expr)?)?;
            if cli.json {
                emit("info", Some(expr), &[&info]);
            } else {
                println!("group:     {}", info.expression);
                println!("degree:    {}", info.degree);
                println!("order:     {}", info.order);
                println!("orbits:    {:?}{}", info.orbit_sizes, if info.transitive { " (transitive)" } else { "" });
                println!("center:    {}", info.center_order.map_or("too large to tabulate".into(), |z| format!("order {}", z)));
                if let Some(m) = &info.minimal_normal_orders {
                    println!("minimal normal subgroups: orders {:?}", m);
                }
                if info.degree <= 32 {
                    for g in &info.generators {
                        println!("generator: {}", g);
                    }
                } else {
                    println!("generators: {} (use --json to list them)", info.generators.len());
                }
            }
            Ok(true)
        }
        Command::Subgroups { expr } => {
            let s = commands::cmd_subgroups(&parse(expr)?, &opts)?;
            if cli.json {
                emit("subgroups", Some(expr), &[&s]);
            } else {
                println!("{}: order {}, {} subgroups in {} classes", s.expression, s.order, s.subgroups, s.classes.len());
                println!("{:>6} {:>8} {:>7} {:>6}", "order", "index", "length", "core");
                for c in &s.classes {
                    println!("{:>6} {:>8} {:>7} {:>6}", c.order, c.index, c.length, c.core_order);
                }
            }
            Ok(true)
        }
        Command::PaperTable => {
            let rows = commands::cmd_paper_table(&opts)?;
            if cli.json {
                emit("paper-table", None, &rows);
            } else {
                print_records(&rows);
            }
            Ok(rows.iter().all(|r| r.ok()))
        }
        Command::WitnessStrict { expr } => {
            let w = commands::cmd_witness_strict(&parse(expr)?, &opts)?;
            if cli.json {
                emit("witness-strict", Some(expr), &[&w]);
            } else {
                println!("G = {} on {} points, |G| = {}, |C| = {}", w.expression, w.degree, w.group_order, w.centralizer_order);
                println!("mu(G) = {}, mu(C) = {}, mu(G x C) = {}", w.mu_group, w.mu_centralizer, w.mu_product);
                print_checks(&w.checks);
                println!("strict: {}", w.strict);
            }
            Ok(w.strict && w.checks.iter().all(|c| c.passed))
        }
        Command::VerifyCert { file } => {
            let text = std::fs::read_to_string(file).map_err(|e| CmdError::Other(format!("{}: {}", file.display(), e)))?;
            let checks = commands::cmd_verify_cert(&text)?;
            if cli.json {
                emit("verify-cert", Some(&file.display().to_string()), &checks);
            } else {
                print_checks(&checks);
            }
            Ok(checks.iter().all(|c| c.passed))
        }
        Command::Roots { kind } => {
            let kind: CoxeterType = kind.parse().map_err(|e: mindeg_core::Error| CmdError::Core(e))?;
            let roots = export_roots(kind)?;
            // Roots are data, so they are always JSON.
            println!("{}", serde_json::to_string(&roots).expect("roots serialize"));
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}
