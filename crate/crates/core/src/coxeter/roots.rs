//! Root systems from simple roots, closed under simple reflections.
//!
//! Simple roots (`e_i` the standard basis, `τ = (1+√5)/2`):
//!
//! | type | ambient | simple roots |
//! |------|---------|--------------|
//! | A_n  | ℝ^(n+1) | `e_i − e_(i+1)`, i = 1..n |
//! | B_n  | ℝ^n     | `e_i − e_(i+1)`, i < n; `e_n` |
//! | D_n  | ℝ^n     | `e_i − e_(i+1)`, i < n; `e_(n−1) + e_n` |
//! | E8   | ℝ^8     | `α1 = ½(e1 + e8 − e2 − … − e7)`, `α2 = e1 + e2`, `α3 = e2 − e1`, `α(k) = e(k−1) − e(k−2)` for k = 4..8 |
//! | E7   | ℝ^8     | `α1 .. α7` of E8 |
//! | E6   | ℝ^8     | `α1 .. α6` of E8 |
//! | F4   | ℝ^4     | `e2 − e3`, `e3 − e4`, `e4`, `½(e1 − e2 − e3 − e4)` |
//! | H3   | ℝ^3     | `(2,0,0)`, `(−τ, τ−1, −1)`, `(0,0,2)` |
//! | H4   | ℝ^4     | `(2,0,0,0)`, `(−τ, τ−1, −1, 0)`, `(0,0,2,0)`, `(0,−τ,−1,τ−1)` |
//!
//! The E-series labels follow Bourbaki, so E6 ⊂ E7 ⊂ E8 share their first
//! simple roots. Roots are ordered by squared length (ascending), then by
//! coordinate tuple, each coordinate compared as the pair `(a, b)` of
//! `a + b√5`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::quadnum::QuadNum;
use super::CoxeterType;
use crate::error::{Error, Result};
use crate::perm::Permutation;

pub type Vector = Vec<QuadNum>;

pub fn dot(u: &[QuadNum], v: &[QuadNum]) -> QuadNum {
    u.iter().zip(v).fold(QuadNum::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// `v − 2 (v·α)/(α·α) α`.
pub fn reflect(v: &[QuadNum], alpha: &[QuadNum]) -> Vector {
    let c = &(&dot(v, alpha) * &QuadNum::from_int(2)) / &dot(alpha, alpha);
    v.iter().zip(alpha).map(|(x, a)| x - &(&c * a)).collect()
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    pub kind: CoxeterType,
    pub rank: usize,
    pub simple_roots: Vec<Vector>,
    /// All roots in canonical order.
    pub roots: Vec<Vector>,
    /// `gram[i][j] = α_i · α_j`.
    pub gram: Vec<Vec<QuadNum>>,
    /// Squared lengths present, in ascending real order.
    pub lengths: Vec<QuadNum>,
    /// `length_class[r]` indexes `lengths` for root `r`.
    pub length_class: Vec<usize>,
}

impl RootSystem {
    pub fn dimension(&self) -> usize {
        self.simple_roots.first().map_or(0, |r| r.len())
    }

    pub fn index_of(&self, v: &[QuadNum]) -> Option<usize> {
        let key = self.sort_key(v);
        self.roots.binary_search_by(|r| self.sort_key(r).cmp(&key)).ok()
    }

    fn sort_key(&self, v: &[QuadNum]) -> (usize, Vector) {
        let n = dot(v, v);
        let class = self.lengths.iter().position(|l| *l == n).unwrap_or(usize::MAX);
        (class, v.to_vec())
    }

    /// The permutation of the roots induced by reflection in `alpha`.
    pub fn reflection_permutation(&self, alpha: &[QuadNum]) -> Result<Permutation> {
        let images = self
            .roots
            .iter()
            .map(|r| {
                self.index_of(&reflect(r, alpha))
                    .map(|i| i as u32)
                    .ok_or_else(|| Error::Internal(format!("root system of {} not closed under reflection", self.kind)))
            })
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    }

    /// Simple reflections as permutations of the roots, in simple-root order.
    pub fn simple_reflections(&self) -> Result<Vec<Permutation>> {
        self.simple_roots.iter().map(|a| self.reflection_permutation(a)).collect()
    }

    /// Roots in each length class.
    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.lengths.len()];
        for &c in &self.length_class {
            sizes[c] += 1;
        }
        sizes
    }
}

fn unit(dim: usize, i: usize, s: i64) -> Vector {
    let mut v = vec![QuadNum::zero(); dim];
    v[i] = QuadNum::from_int(s);
    v
}

fn add(u: &[QuadNum], v: &[QuadNum]) -> Vector {
    u.iter().zip(v).map(|(a, b)| a + b).collect()
}

fn ints(v: &[i64]) -> Vector {
    v.iter().map(|&x| QuadNum::from_int(x)).collect()
}

fn halves(v: &[i64]) -> Vector {
    v.iter().map(|&x| QuadNum::from_parts(x, 2, 0, 1)).collect()
}

fn e8_simple() -> Vec<Vector> {
    let dim = 8;
    let mut out = vec![halves(&[1, -1, -1, -1, -1, -1, -1, 1]), add(&unit(dim, 0, 1), &unit(dim, 1, 1)), add(&unit(dim, 1, 1), &unit(dim, 0, -1))];
    for k in 4..=8 {
        out.push(add(&unit(dim, k - 2, 1), &unit(dim, k - 3, -1)));
    }
    out
}

/// Simple roots of a type, in the table above.
pub fn simple_roots(kind: CoxeterType) -> Result<Vec<Vector>> {
    use CoxeterType::*;
    let chain = |dim: usize, count: usize| -> Vec<Vector> { (0..count).map(|i| add(&unit(dim, i, 1), &unit(dim, i + 1, -1))).collect() };
    let tau = QuadNum::golden();
    let t1 = &tau - &QuadNum::one();
    let z = QuadNum::zero;
    Ok(match kind {
        A(n) if n >= 1 => chain(n + 1, n),
        B(n) if n >= 1 => {
            let mut s = chain(n, n - 1);
            s.push(unit(n, n - 1, 1));
            s
        }
        D(n) if n >= 2 => {
            let mut s = chain(n, n - 1);
            s.push(add(&unit(n, n - 2, 1), &unit(n, n - 1, 1)));
            s
        }
        E6 => e8_simple().into_iter().take(6).collect(),
        E7 => e8_simple().into_iter().take(7).collect(),
        E8 => e8_simple(),
        F4 => vec![ints(&[0, 1, -1, 0]), ints(&[0, 0, 1, -1]), ints(&[0, 0, 0, 1]), halves(&[1, -1, -1, -1])],
        H3 => vec![ints(&[2, 0, 0]), vec![-&tau, t1.clone(), QuadNum::from_int(-1)], ints(&[0, 0, 2])],
        H4 => vec![
            ints(&[2, 0, 0, 0]),
            vec![-&tau, t1.clone(), QuadNum::from_int(-1), z()],
            ints(&[0, 0, 2, 0]),
            vec![z(), -&tau, QuadNum::from_int(-1), t1],
        ],
        _ => return Err(Error::InvalidParameter(format!("no root system for {}", kind))),
    })
}

/// Closes the simple roots under the simple reflections.
pub fn root_system(kind: CoxeterType) -> Result<RootSystem> {
    let simple = simple_roots(kind)?;
    let mut seen: BTreeSet<Vector> = simple.iter().cloned().collect();
    let mut queue: Vec<Vector> = simple.clone();
    let mut k = 0;
    while k < queue.len() {
        let v = queue[k].clone();
        k += 1;
        for a in &simple {
            let w = reflect(&v, a);
            if seen.insert(w.clone()) {
                queue.push(w);
            }
        }
    }
    let mut norms: Vec<QuadNum> = Vec::new();
    for v in &queue {
        let n = dot(v, v);
        if !norms.contains(&n) {
            norms.push(n);
        }
    }
    norms.sort_by(|a, b| a.real_cmp(b));
    let class_of = |v: &Vector| norms.iter().position(|l| *l == dot(v, v)).unwrap();
    let mut keyed: BTreeMap<(usize, Vector), ()> = BTreeMap::new();
    for v in queue {
        keyed.insert((class_of(&v), v), ());
    }
    let (length_class, roots): (Vec<usize>, Vec<Vector>) = keyed.into_keys().unzip();
    let gram = simple.iter().map(|a| simple.iter().map(|b| dot(a, b)).collect()).collect();
    Ok(RootSystem { kind, rank: simple.len(), simple_roots: simple, roots, gram, lengths: norms, length_class })
}

/// Known root counts for the supported types.
pub fn expected_root_count(kind: CoxeterType) -> Option<usize> {
    use CoxeterType::*;
    Some(match kind {
        A(n) => n * (n + 1),
        B(n) => 2 * n * n,
        D(n) => 2 * n * (n - 1),
        E6 => 72,
        E7 => 126,
        E8 => 240,
        F4 => 48,
        H3 => 30,
        H4 => 120,
        I2(_) => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use CoxeterType::*;

    #[test]
    fn root_counts() {
        for kind in [A(1), A(4), B(2), B(4), D(2), D(4), D(5), E6, E7, E8, F4, H3, H4] {
            let rs = root_system(kind).unwrap();
            assert_eq!(Some(rs.roots.len()), expected_root_count(kind), "{}", kind);
            for r in &rs.roots {
                let neg: Vector = r.iter().map(|x| -x).collect();
                assert!(rs.index_of(&neg).is_some());
            }
        }
    }

    #[test]
    fn length_classes() {
        let f4 = root_system(F4).unwrap();
        assert_eq!(f4.class_sizes(), vec![24, 24]);
        assert_eq!(root_system(B(3)).unwrap().class_sizes(), vec![6, 12]);
        assert_eq!(root_system(H4).unwrap().class_sizes(), vec![120]);
        assert_eq!(root_system(E8).unwrap().class_sizes(), vec![240]);
    }

    #[test]
    fn h4_gram_matrix() {
        // Coxeter diagram 5-3-3: angles π/5, π/3, π/3 between consecutive roots.
        let rs = root_system(H4).unwrap();
        let g = &rs.gram;
        let four = QuadNum::from_int(4);
        for i in 0..4 {
            assert_eq!(g[i][i], four);
        }
        assert_eq!(g[0][1], -&(&QuadNum::from_int(2) * &QuadNum::golden()));
        assert_eq!(g[1][2], QuadNum::from_int(-2));
        assert_eq!(g[2][3], QuadNum::from_int(-2));
        assert!(g[0][2].is_zero() && g[0][3].is_zero() && g[1][3].is_zero());
    }

    #[test]
    fn simple_reflections_preserve_lengths() {
        let rs = root_system(F4).unwrap();
        for s in rs.simple_reflections().unwrap() {
            for r in 0..rs.roots.len() {
                assert_eq!(rs.length_class[r], rs.length_class[s.apply(r)]);
            }
        }
    }
}
