//! Group expressions.
//!
//! ```text
//! expr  := term ('x' term)*
//! term  := 'rot' '(' expr ')' | 'csym' '(' expr ')' | atom ('circ' atom)?
//! atom  := NAME '(' params ')' | NAME | '(' expr ')'
//! ```
//!
//! Names are case-insensitive. `×` and `*` are accepted for `x`, `∘` for
//! `circ`.

use std::fmt;

use mindeg_core::coxeter::CoxeterType;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    W(CoxeterType),
    Sym(usize),
    Alt(usize),
    Cyclic(usize),
    /// Dihedral group of the given order.
    Dihedral(usize),
    Q8,
    BinT,
    BinO,
    BinI,
    BinD(usize),
    Monomial(usize, usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupExpr {
    Named(Family),
    Product(Box<GroupExpr>, Box<GroupExpr>),
    CentralProduct(Box<GroupExpr>, Box<GroupExpr>),
    Rotation(Box<GroupExpr>),
    CentralizerSym(Box<GroupExpr>),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("invalid {family}: {message}")]
    Invalid { family: String, message: String },
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Num(usize),
    Open,
    Close,
    Comma,
    Times,
    Circ,
    End,
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ExprError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let single = match c {
            '(' => Some(Tok::Open),
            ')' => Some(Tok::Close),
            ',' => Some(Tok::Comma),
            '×' | '*' => Some(Tok::Times),
            '∘' => Some(Tok::Circ),
            _ => None,
        };
        if let Some(t) = single {
            out.push((t, col));
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            let n = s.parse().map_err(|_| ExprError::Syntax { column: col, message: format!("number '{}' is too large", s) })?;
            out.push((Tok::Num(n), col));
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect::<String>().to_ascii_lowercase();
            let t = match s.as_str() {
                "x" => Tok::Times,
                "circ" => Tok::Circ,
                _ => Tok::Name(s),
            };
            out.push((t, col));
        } else {
            return Err(ExprError::Syntax { column: col, message: format!("unexpected character '{}'", c) });
        }
    }
    out.push((Tok::End, chars.len() + 1));
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn column(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if t != Tok::End {
            self.pos += 1;
        }
        t
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax { column: self.column(), message: message.into() })
    }

    fn expect(&mut self, t: Tok, what: &str) -> Result<(), ExprError> {
        if *self.peek() == t {
            self.bump();
            Ok(())
        } else {
            self.fail(format!("expected {}, found {}", what, describe(self.peek())))
        }
    }

    fn expr(&mut self) -> Result<GroupExpr, ExprError> {
        let mut e = self.term()?;
        while *self.peek() == Tok::Times {
            self.bump();
            let r = self.term()?;
            e = GroupExpr::Product(Box::new(e), Box::new(r));
        }
        Ok(e)
    }

    fn term(&mut self) -> Result<GroupExpr, ExprError> {
        if let Tok::Name(n) = self.peek() {
            let wrap: Option<fn(Box<GroupExpr>) -> GroupExpr> = match n.as_str() {
                "rot" => Some(GroupExpr::Rotation),
                "csym" => Some(GroupExpr::CentralizerSym),
                _ => None,
            };
            if let Some(wrap) = wrap {
                self.bump();
                self.expect(Tok::Open, "'('")?;
                let inner = self.expr()?;
                self.expect(Tok::Close, "')'")?;
                return Ok(wrap(Box::new(inner)));
            }
        }
        let a = self.atom()?;
        if *self.peek() == Tok::Circ {
            self.bump();
            let b = self.atom()?;
            return Ok(GroupExpr::CentralProduct(Box::new(a), Box::new(b)));
        }
        Ok(a)
    }

    fn atom(&mut self) -> Result<GroupExpr, ExprError> {
        let col = self.column();
        match self.bump() {
            Tok::Open => {
                let e = self.expr()?;
                self.expect(Tok::Close, "')'")?;
                Ok(e)
            }
            Tok::Name(name) => {
                let mut params = Vec::new();
                if *self.peek() == Tok::Open {
                    self.bump();
                    loop {
                        match self.bump() {
                            Tok::Num(n) => params.push(Param::Num(n)),
                            Tok::Name(s) => params.push(Param::Name(s)),
                            t => {
                                self.pos -= usize::from(t != Tok::End);
                                return self.fail(format!("expected a parameter, found {}", describe(&t)));
                            }
                        }
                        match self.bump() {
                            Tok::Comma => continue,
                            Tok::Close => break,
                            t => {
                                self.pos -= usize::from(t != Tok::End);
                                return self.fail(format!("expected ',' or ')', found {}", describe(&t)));
                            }
                        }
                    }
                }
                named(&name, &params, col).map(GroupExpr::Named)
            }
            t => {
                self.pos -= usize::from(t != Tok::End);
                self.fail(format!("expected a group name, found {}", describe(&t)))
            }
        }
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Name(s) => format!("'{}'", s),
        Tok::Num(n) => format!("'{}'", n),
        Tok::Open => "'('".into(),
        Tok::Close => "')'".into(),
        Tok::Comma => "','".into(),
        Tok::Times => "'x'".into(),
        Tok::Circ => "'circ'".into(),
        Tok::End => "end of input".into(),
    }
}

#[derive(Debug)]
enum Param {
    Num(usize),
    Name(String),
}

fn named(name: &str, params: &[Param], column: usize) -> Result<Family, ExprError> {
    let invalid = |family: &str, message: String| ExprError::Invalid { family: family.into(), message };
    let nums = |family: &str, k: usize| -> Result<Vec<usize>, ExprError> {
        if params.len() != k {
            return Err(invalid(family, format!("expected {} parameter(s), got {}", k, params.len())));
        }
        params
            .iter()
            .map(|p| match p {
                Param::Num(n) => Ok(*n),
                Param::Name(s) => Err(invalid(family, format!("expected a number, got '{}'", s))),
            })
            .collect()
    };
    let positive = |family: &str, n: usize| {
        if n >= 1 {
            Ok(n)
        } else {
            Err(invalid(family, "parameter must be at least 1".into()))
        }
    };
    Ok(match name {
        "w" => {
            let (letter, n) = match params {
                [Param::Name(l), Param::Num(n)] => (l.as_str(), *n),
                _ => return Err(invalid("W", "expected W(type, rank), e.g. W(D,4) or W(I2,5)".into())),
            };
            let text = if letter == "i2" { format!("I2({})", n) } else { format!("{}{}", letter, n) };
            let t: CoxeterType = text.parse().map_err(|e: mindeg_core::Error| invalid("W", e.to_string()))?;
            Family::W(t)
        }
        "sym" => Family::Sym(positive("Sym", nums("Sym", 1)?[0])?),
        "alt" => Family::Alt(positive("Alt", nums("Alt", 1)?[0])?),
        "c" => Family::Cyclic(positive("C", nums("C", 1)?[0])?),
        "dihedral" => {
            let o = nums("Dihedral", 1)?[0];
            if o < 2 || o % 2 == 1 {
                return Err(invalid("Dihedral", format!("order {} must be even and at least 2", o)));
            }
            Family::Dihedral(o)
        }
        "q8" => {
            nums("Q8", 0)?;
            Family::Q8
        }
        "bint" => {
            nums("BinT", 0)?;
            Family::BinT
        }
        "bino" => {
            nums("BinO", 0)?;
            Family::BinO
        }
        "bini" => {
            nums("BinI", 0)?;
            Family::BinI
        }
        "bind" => Family::BinD(positive("BinD", nums("BinD", 1)?[0])?),
        "g" => {
            let v = nums("G", 3)?;
            let (m, p, n) = (v[0], v[1], v[2]);
            if m == 0 || p == 0 || n == 0 || m % p != 0 {
                return Err(invalid("G", format!("G({},{},{}) needs p | m and n >= 1", m, p, n)));
            }
            Family::Monomial(m, p, n)
        }
        _ => return Err(ExprError::Syntax { column, message: format!("unknown group name '{}'", name) }),
    })
}

pub fn parse_expr(text: &str) -> Result<GroupExpr, ExprError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(format!("unexpected {}", describe(p.peek())));
    }
    Ok(e)
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CoxeterType::*;
        match *self {
            Family::W(t) => match t {
                A(n) => write!(f, "W(A,{})", n),
                B(n) => write!(f, "W(B,{})", n),
                D(n) => write!(f, "W(D,{})", n),
                E6 => f.write_str("W(E,6)"),
                E7 => f.write_str("W(E,7)"),
                E8 => f.write_str("W(E,8)"),
                F4 => f.write_str("W(F,4)"),
                H3 => f.write_str("W(H,3)"),
                H4 => f.write_str("W(H,4)"),
                I2(m) => write!(f, "W(I2,{})", m),
            },
            Family::Sym(n) => write!(f, "Sym({})", n),
            Family::Alt(n) => write!(f, "Alt({})", n),
            Family::Cyclic(n) => write!(f, "C({})", n),
            Family::Dihedral(n) => write!(f, "Dihedral({})", n),
            Family::Q8 => f.write_str("Q8"),
            Family::BinT => f.write_str("BinT"),
            Family::BinO => f.write_str("BinO"),
            Family::BinI => f.write_str("BinI"),
            Family::BinD(m) => write!(f, "BinD({})", m),
            Family::Monomial(m, p, n) => write!(f, "G({},{},{})", m, p, n),
        }
    }
}

impl GroupExpr {
    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Named(n) => write!(f, "{}", n),
            e => write!(f, "({})", e),
        }
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Product(..) => write!(f, "({})", self),
            e => write!(f, "{}", e),
        }
    }
}

impl fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupExpr::Named(n) => write!(f, "{}", n),
            GroupExpr::Product(l, r) => {
                write!(f, "{} x ", l)?;
                r.fmt_term(f)
            }
            GroupExpr::CentralProduct(l, r) => {
                l.fmt_atom(f)?;
                f.write_str(" circ ")?;
                r.fmt_atom(f)
            }
            GroupExpr::Rotation(e) => write!(f, "rot({})", e),
            GroupExpr::CentralizerSym(e) => write!(f, "csym({})", e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(f: Family) -> Box<GroupExpr> {
        Box::new(GroupExpr::Named(f))
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(parse_expr("W(D,4)").unwrap(), GroupExpr::Named(Family::W(CoxeterType::D(4))));
        assert_eq!(parse_expr("BinT circ BinT").unwrap(), GroupExpr::CentralProduct(named(Family::BinT), named(Family::BinT)));
        assert_eq!(
            parse_expr("W(D,5) x csym(W(D,5))").unwrap(),
            GroupExpr::Product(
                named(Family::W(CoxeterType::D(5))),
                Box::new(GroupExpr::CentralizerSym(named(Family::W(CoxeterType::D(5)))))
            )
        );
        assert_eq!(parse_expr("  w( i2 , 7 )").unwrap(), GroupExpr::Named(Family::W(CoxeterType::I2(7))));
        assert_eq!(parse_expr("bini∘bini").unwrap(), GroupExpr::CentralProduct(named(Family::BinI), named(Family::BinI)));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_expr("Sym(4) x ") {
            Err(ExprError::Syntax { column, .. }) => assert_eq!(column, 10),
            e => panic!("{:?}", e),
        }
        match parse_expr("Sym(4 Alt(5)") {
            Err(ExprError::Syntax { column, .. }) => assert_eq!(column, 7),
            e => panic!("{:?}", e),
        }
        assert!(matches!(parse_expr("Foo(3)"), Err(ExprError::Syntax { column: 1, .. })));
        assert!(matches!(parse_expr("G(4,3,2)"), Err(ExprError::Invalid { ref family, .. }) if family == "G"));
        assert!(matches!(parse_expr("Dihedral(7)"), Err(ExprError::Invalid { .. })));
        assert!(matches!(parse_expr("W(E,9)"), Err(ExprError::Invalid { .. })));
        assert!(matches!(parse_expr("Q8(2)"), Err(ExprError::Invalid { .. })));
    }

    #[test]
    fn printing_round_trips() {
        for s in ["W(D,5) x csym(W(D,5))", "BinT circ BinT", "rot(W(E,7)) x C(2)", "G(5,5,3)", "(Sym(3) x Q8) circ BinI", "Sym(3) x (Alt(4) x C(2))"] {
            let e = parse_expr(s).unwrap();
            assert_eq!(parse_expr(&e.to_string()).unwrap(), e, "{}", s);
        }
    }
}
