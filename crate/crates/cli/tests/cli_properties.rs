use std::fs;
use std::process::Command;

use mindeg::cache::Cache;
use mindeg::commands::{cmd_paper_table, solve, Options};
use mindeg::eval::evaluate;
use mindeg::expr::{parse_expr, Family, GroupExpr};
use mindeg::record::CertificateRecord;
use mindeg_core::coxeter::CoxeterType;
use mindeg_core::GroupTable;
use proptest::prelude::*;

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        (1usize..8).prop_map(|n| Family::W(CoxeterType::A(n))),
        (2usize..8).prop_map(|n| Family::W(CoxeterType::D(n))),
        (1usize..40).prop_map(|m| Family::W(CoxeterType::I2(m))),
        Just(Family::W(CoxeterType::H3)),
        Just(Family::W(CoxeterType::E7)),
        (1usize..9).prop_map(Family::Sym),
        (1usize..9).prop_map(Family::Alt),
        (1usize..30).prop_map(Family::Cyclic),
        (1usize..30).prop_map(|k| Family::Dihedral(2 * k)),
        Just(Family::Q8),
        Just(Family::BinT),
        Just(Family::BinI),
        (2usize..9).prop_map(Family::BinD),
        (1usize..6, 1usize..4).prop_map(|(m, n)| Family::Monomial(m, m, n)),
    ]
}

fn expr() -> impl Strategy<Value = GroupExpr> {
    family().prop_map(GroupExpr::Named).prop_recursive(4, 24, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(l, r)| GroupExpr::Product(Box::new(l), Box::new(r))),
            (inner.clone(), inner.clone()).prop_map(|(l, r)| GroupExpr::CentralProduct(Box::new(l), Box::new(r))),
            inner.clone().prop_map(|e| GroupExpr::Rotation(Box::new(e))),
            inner.prop_map(|e| GroupExpr::CentralizerSym(Box::new(e))),
        ]
    })
}

proptest! {
    #[test]
    fn printing_round_trips(e in expr()) {
        let printed = e.to_string();
        let reparsed = parse_expr(&printed).unwrap();
        prop_assert_eq!(parse_expr(&reparsed.to_string()).unwrap(), reparsed.clone());
        prop_assert_eq!(reparsed, e);
    }

    #[test]
    fn parser_never_panics(s in "[a-zA-Z0-9(), x*]{0,30}") {
        let _ = parse_expr(&s);
    }
}

#[test]
fn cache_round_trip_and_corruption() {
    let dir = tempfile::tempdir().unwrap();
    let opts = Options { cache: Some(Cache::new(dir.path())), ..Options::default() };
    let g = evaluate(&parse_expr("W(B,3)").unwrap()).unwrap();
    let first = solve(&g, &opts).unwrap();
    let files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|f| f.unwrap().path()).collect();
    assert_eq!(files.len(), 1);

    let t = GroupTable::new(&g).unwrap();
    let hit = Cache::new(dir.path()).load(&g, &t).expect("cache hit");
    assert_eq!(hit.lattice.all.len(), first.lattice.all.len());
    assert_eq!(hit.certificate, Some(CertificateRecord::from_certificate(&first.certificate)));
    let second = solve(&g, &opts).unwrap();
    assert_eq!(second.certificate, first.certificate);

    // A damaged entry is a miss, and the next solve rewrites it.
    fs::write(&files[0], "{\"format_version\": 1, \"key\": \"x\"").unwrap();
    assert!(Cache::new(dir.path()).load(&g, &t).is_none());
    assert_eq!(solve(&g, &opts).unwrap().certificate, first.certificate);
    assert!(Cache::new(dir.path()).load(&g, &t).is_some());

    // So is an entry from another format version.
    let text = fs::read_to_string(&files[0]).unwrap().replacen("\"format_version\":1", "\"format_version\":99", 1);
    fs::write(&files[0], text).unwrap();
    assert!(Cache::new(dir.path()).load(&g, &t).is_none());
}

#[test]
fn paper_table_is_deterministic_across_threads() {
    let strip = |rows: Vec<mindeg::record::ResultRecord>| {
        rows.into_iter()
            .map(|mut r| {
                r.wall_time_ms = 0;
                serde_json::to_string(&r).unwrap()
            })
            .collect::<Vec<_>>()
    };
    let one = strip(cmd_paper_table(&Options::default()).unwrap());
    let four = strip(cmd_paper_table(&Options { threads: 4, ..Options::default() }).unwrap());
    assert_eq!(one, four);
    assert_eq!(one, strip(cmd_paper_table(&Options::default()).unwrap()));
}

fn mindeg(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_mindeg")).args(args).output().unwrap()
}

#[test]
fn binary_certificates_verify_and_tampering_is_caught() {
    let dir = tempfile::tempdir().unwrap();
    let out = mindeg(&["--no-cache", "--json", "mu", "BinT circ BinT"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["command"], "mu");
    assert_eq!(doc["records"][0]["mu"], 24);
    assert_eq!(doc["records"][0]["source"]["kind"], "computed");

    let good = dir.path().join("good.json");
    fs::write(&good, &out.stdout).unwrap();
    assert!(mindeg(&["verify-cert", good.to_str().unwrap()]).status.success());

    let mut bad = doc.clone();
    let w = bad["records"][0]["certificate"]["witness"][0].as_array_mut().unwrap();
    w.truncate(w.len() / 2);
    let bad_path = dir.path().join("bad.json");
    fs::write(&bad_path, serde_json::to_vec(&bad).unwrap()).unwrap();
    assert!(!mindeg(&["verify-cert", bad_path.to_str().unwrap()]).status.success());
}

#[test]
fn binary_reports_recorded_values_and_guards() {
    let out = mindeg(&["--no-cache", "--json", "mu", "W(E,8)"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["records"][0]["mu"], 240);
    assert_eq!(doc["records"][0]["source"]["kind"], "recorded");
    assert!(doc["records"][0]["certificate"].is_null());

    // No recorded value and over the guard: an error, not a guess.
    let out = mindeg(&["--no-cache", "--max-order", "100", "mu", "Sym(5)"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("lattice guard"));

    let out = mindeg(&["mu", "Sym(4 Alt(5)"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("column 7"));
}

#[test]
fn roots_export_is_exact() {
    let out = mindeg(&["roots", "H4"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["type"], "H4");
    assert_eq!(doc["rank"], 4);
    assert_eq!(doc["roots"].as_array().unwrap().len(), 120);
}
