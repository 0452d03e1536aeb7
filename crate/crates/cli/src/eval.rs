//! Turning expressions into permutation groups.

use mindeg_core::coxeter::{binary_polyhedral, coxeter_group, monomial_group, natural_classical, q8_signed, rotation_subgroup, BinaryKind, CoxeterType};
use mindeg_core::group_ops::{center, central_product, centralizer_in_sym, direct_product};
use mindeg_core::{Error, GroupTable, PermGroup, Permutation};
use thiserror::Error;

use crate::expr::{Family, GroupExpr};

#[derive(Debug, Error)]
#[error("in '{expr}': {source}")]
pub struct EvalError {
    pub expr: String,
    #[source]
    pub source: Error,
}

fn at(e: &GroupExpr) -> impl FnOnce(Error) -> EvalError + '_ {
    move |source| EvalError { expr: e.to_string(), source }
}

/// Which action a named Coxeter group gets: the natural one for `A`, `B`,
/// `D`, `I2`, the root action otherwise.
pub fn named_group(f: Family) -> Result<PermGroup, Error> {
    use CoxeterType::*;
    match f {
        Family::W(t @ (A(_) | B(_) | D(_) | I2(_))) => natural_classical(t),
        Family::W(t) => coxeter_group(t),
        Family::Sym(n) => Ok(PermGroup::symmetric(n)),
        Family::Alt(n) => Ok(PermGroup::alternating(n)),
        Family::Cyclic(n) => Ok(PermGroup::cyclic(n)),
        Family::Dihedral(o) => natural_classical(I2(o / 2)),
        Family::Q8 => q8_signed(),
        Family::BinT => binary_polyhedral(BinaryKind::Tetrahedral),
        Family::BinO => binary_polyhedral(BinaryKind::Octahedral),
        Family::BinI => binary_polyhedral(BinaryKind::Icosahedral),
        Family::BinD(m) => binary_polyhedral(BinaryKind::Dihedral(m)),
        Family::Monomial(m, p, n) => monomial_group(m, p, n),
    }
}

/// A generator of the center, which must have prime order.
fn central_generator(g: &PermGroup) -> Result<Permutation, Error> {
    let t = GroupTable::new(g)?;
    let z = center(&t);
    let p = z.order();
    if p < 2 || (2..p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::CentralProduct(format!("center has order {}, not a prime", p)));
    }
    Ok(t.element(z.indices()[1]))
}

pub fn evaluate(e: &GroupExpr) -> Result<PermGroup, EvalError> {
    match e {
        GroupExpr::Named(f) => named_group(*f).map_err(at(e)),
        GroupExpr::Product(l, r) => Ok(direct_product(&evaluate(l)?, &evaluate(r)?)),
        GroupExpr::CentralProduct(l, r) => {
            let (g, h) = (evaluate(l)?, evaluate(r)?);
            let zg = central_generator(&g).map_err(at(l))?;
            let zh = central_generator(&h).map_err(at(r))?;
            if zg.order() != zh.order() {
                return Err(at(e)(Error::CentralProduct(format!("centers have orders {} and {}", zg.order(), zh.order()))));
            }
            central_product(&g, &h, &zg, &zh).map_err(at(e))
        }
        GroupExpr::Rotation(inner) => {
            let w = evaluate(inner)?;
            let gens = w.generators().to_vec();
            rotation_subgroup(&w, &gens).map_err(at(e))
        }
        GroupExpr::CentralizerSym(inner) => centralizer_in_sym(&evaluate(inner)?).map_err(at(e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_expr;

    fn eval(s: &str) -> PermGroup {
        evaluate(&parse_expr(s).unwrap()).unwrap()
    }

    #[test]
    fn examples() {
        let b3 = eval("W(B,3)");
        assert_eq!((b3.degree(), b3.order_u64()), (6, Some(48)));
        assert_eq!(eval("BinT circ BinT").order_u64(), Some(288));
        let c = eval("csym(G(5,5,3))");
        assert_eq!(c.degree(), 15);
        assert!(c.order_u64().unwrap() > 1);
        assert_eq!(eval("rot(W(A,4))").order_u64(), Some(60));
        assert_eq!(eval("Q8 circ Q8").order_u64(), Some(32));
    }

    #[test]
    fn errors_name_the_subexpression() {
        let err = evaluate(&parse_expr("Sym(3) circ Q8").unwrap()).unwrap_err();
        assert_eq!(err.expr, "Sym(3)");
        let err = evaluate(&parse_expr("csym(C(2) x C(3))").unwrap()).unwrap_err();
        assert_eq!(err.source, Error::NotTransitive);
    }
}
