//! Exact root-system export.
//!
//! Each coordinate `a + b√5` is written as `[a_num, a_den, b_num, b_den]`
//! with both fractions in lowest terms and positive denominators.

use mindeg_core::coxeter::{root_system, CoxeterType};
use mindeg_core::Error;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootsJson {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub roots: Vec<Vec<[i64; 4]>>,
}

fn small(b: &BigInt) -> Result<i64, Error> {
    i64::try_from(b).map_err(|_| Error::Internal("root coordinate does not fit in 64 bits".into()))
}

pub fn export_roots(kind: CoxeterType) -> Result<RootsJson, Error> {
    let rs = root_system(kind)?;
    let roots = rs
        .roots
        .iter()
        .map(|v| {
            v.iter()
                .map(|x| {
                    let [a, b, c, d] = x.parts();
                    Ok([small(&a)?, small(&b)?, small(&c)?, small(&d)?])
                })
                .collect::<Result<Vec<_>, Error>>()
        })
        .collect::<Result<Vec<_>, Error>>()?;
    Ok(RootsJson { kind: kind.to_string(), rank: rs.rank, roots })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h3_roots_use_golden_ratio() {
        let j = export_roots(CoxeterType::H3).unwrap();
        assert_eq!((j.kind.as_str(), j.rank, j.roots.len()), ("H3", 3, 30));
        assert!(j.roots.iter().flatten().any(|c| c[2] != 0));
        assert!(j.roots.iter().flatten().all(|c| c[1] > 0 && c[3] > 0));
    }
}
