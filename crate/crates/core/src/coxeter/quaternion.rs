//! Quaternions over ℚ(√5) and the binary polyhedral groups.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::ops::Mul;

use num_bigint::BigUint;

use super::quadnum::QuadNum;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

/// `w + x·i + y·j + z·k` with `i² = j² = k² = ijk = −1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Quaternion {
    pub c: [QuadNum; 4],
}

impl Quaternion {
    pub fn new(w: QuadNum, x: QuadNum, y: QuadNum, z: QuadNum) -> Self {
        Quaternion { c: [w, x, y, z] }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        Quaternion::new(QuadNum::from_int(w), QuadNum::from_int(x), QuadNum::from_int(y), QuadNum::from_int(z))
    }

    pub fn one() -> Self {
        Self::from_ints(1, 0, 0, 0)
    }

    /// `N(h) = w² + x² + y² + z²`.
    pub fn norm(&self) -> QuadNum {
        self.c.iter().fold(QuadNum::zero(), |acc, v| &acc + &(v * v))
    }

    pub fn conjugate(&self) -> Self {
        let [w, x, y, z] = &self.c;
        Quaternion::new(w.clone(), -x, -y, -z)
    }

    pub fn scale(&self, s: &QuadNum) -> Self {
        let [w, x, y, z] = &self.c;
        Quaternion::new(w * s, x * s, y * s, z * s)
    }

    pub fn neg(&self) -> Self {
        self.scale(&QuadNum::from_int(-1))
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = &self.c;
        let [a2, b2, c2, d2] = &o.c;
        let m = |x: &QuadNum, y: &QuadNum| x * y;
        Quaternion::new(
            &(&(&m(a1, a2) - &m(b1, b2)) - &m(c1, c2)) - &m(d1, d2),
            &(&(&m(a1, b2) + &m(b1, a2)) + &m(c1, d2)) - &m(d1, c2),
            &(&(&m(a1, c2) - &m(b1, d2)) + &m(c1, a2)) + &m(d1, b2),
            &(&(&m(a1, d2) + &m(b1, c2)) - &m(c1, b2)) + &m(d1, a2),
        )
    }
}

/// A unit quaternion `q / √2^s` with `s ∈ {0, 1}`. The binary octahedral
/// group needs `1/√2`, which is outside ℚ(√5); carrying the power of `√2`
/// separately keeps everything exact.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ScaledUnit {
    pub q: Quaternion,
    pub sqrt2_denominator: bool,
}

impl ScaledUnit {
    pub fn plain(q: Quaternion) -> Self {
        ScaledUnit { q, sqrt2_denominator: false }
    }

    /// Real norm, `N(q)` or `N(q)/2`.
    pub fn norm(&self) -> QuadNum {
        let n = self.q.norm();
        if self.sqrt2_denominator {
            &n / &QuadNum::from_int(2)
        } else {
            n
        }
    }
}

impl Mul for &ScaledUnit {
    type Output = ScaledUnit;
    fn mul(self, o: &ScaledUnit) -> ScaledUnit {
        let q = &self.q * &o.q;
        match (self.sqrt2_denominator, o.sqrt2_denominator) {
            (true, true) => ScaledUnit { q: q.scale(&QuadNum::from_parts(1, 2, 0, 1)), sqrt2_denominator: false },
            (a, b) => ScaledUnit { q, sqrt2_denominator: a || b },
        }
    }
}

/// Finite subgroups of the unit quaternions, up to conjugacy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BinaryKind {
    /// Binary tetrahedral, order 24.
    Tetrahedral,
    /// Binary octahedral, order 48.
    Octahedral,
    /// Binary icosahedral, order 120.
    Icosahedral,
    /// Binary dihedral (dicyclic) of order `4m`.
    Dihedral(usize),
    /// Cyclic of order `m`.
    Cyclic(usize),
}

impl BinaryKind {
    pub fn order(&self) -> usize {
        match *self {
            BinaryKind::Tetrahedral => 24,
            BinaryKind::Octahedral => 48,
            BinaryKind::Icosahedral => 120,
            BinaryKind::Dihedral(m) => 4 * m,
            BinaryKind::Cyclic(m) => m,
        }
    }
}

fn signs<const N: usize>() -> impl Iterator<Item = [i64; N]> {
    (0..1u32 << N).map(|mask| core::array::from_fn(|i| if mask >> i & 1 == 1 { -1 } else { 1 }))
}

/// The 24 Hurwitz units `±1, ±i, ±j, ±k, (±1 ± i ± j ± k)/2`.
pub fn hurwitz_units() -> Vec<Quaternion> {
    let mut out = Vec::new();
    for axis in 0..4 {
        for s in [1i64, -1] {
            let mut c = [0i64; 4];
            c[axis] = s;
            out.push(Quaternion::from_ints(c[0], c[1], c[2], c[3]));
        }
    }
    let half = QuadNum::from_parts(1, 2, 0, 1);
    for s in signs::<4>() {
        out.push(Quaternion::from_ints(s[0], s[1], s[2], s[3]).scale(&half));
    }
    out
}

/// The 120 icosians: the Hurwitz units together with the even permutations
/// of `(0, ±1, ±τ⁻¹, ±τ)/2`.
pub fn icosians() -> Vec<Quaternion> {
    let mut out = hurwitz_units();
    let tau = QuadNum::golden();
    let vals = [QuadNum::zero(), QuadNum::one(), tau.inverse().unwrap(), tau];
    let half = QuadNum::from_parts(1, 2, 0, 1);
    let even_perms: Vec<[usize; 4]> = permutations4().into_iter().filter(|p| parity(p) == 0).collect();
    for p in even_perms {
        for s in signs::<3>() {
            // p[pos] is which value sits at coordinate `pos`
            let mut c: [QuadNum; 4] = core::array::from_fn(|_| QuadNum::zero());
            for pos in 0..4 {
                let v = p[pos];
                c[pos] = if v == 0 { QuadNum::zero() } else { &vals[v] * &QuadNum::from_int(s[v - 1]) };
            }
            let [w, x, y, z] = c;
            out.push(Quaternion::new(w, x, y, z).scale(&half));
        }
    }
    out
}

fn permutations4() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn parity(p: &[usize; 4]) -> usize {
    let mut inv = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    inv % 2
}

/// The 48 elements of the binary octahedral group: the Hurwitz units and the
/// 24 elements `(±u ± v)/√2` for distinct units `u, v ∈ {1, i, j, k}`.
pub fn binary_octahedral_units() -> Vec<ScaledUnit> {
    let mut out: Vec<ScaledUnit> = hurwitz_units().into_iter().map(ScaledUnit::plain).collect();
    for a in 0..4 {
        for b in a + 1..4 {
            for s in signs::<2>() {
                let mut c = [0i64; 4];
                c[a] = s[0];
                c[b] = s[1];
                out.push(ScaledUnit { q: Quaternion::from_ints(c[0], c[1], c[2], c[3]), sqrt2_denominator: true });
            }
        }
    }
    out
}

/// Regular representation of a finite group given by an element list and a
/// multiplication. Generators are chosen greedily in list order.
pub fn regular_representation<T: Ord + Clone>(elements: &[T], mul: impl Fn(&T, &T) -> T) -> Result<PermGroup> {
    let n = elements.len();
    let index: BTreeMap<T, usize> = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    if index.len() != n {
        return Err(Error::Internal("element list has duplicates".into()));
    }
    let mut table = vec![0usize; n * n];
    for (i, a) in elements.iter().enumerate() {
        for (j, b) in elements.iter().enumerate() {
            table[i * n + j] = *index
                .get(&mul(a, b))
                .ok_or_else(|| Error::Internal(format!("element list not closed under multiplication ({}, {})", i, j)))?;
        }
    }
    let right = |g: usize| Permutation::from_images((0..n).map(|x| table[x * n + g] as u32).collect());
    let mut gens: Vec<usize> = Vec::new();
    let mut reached = vec![false; n];
    for g in 0..n {
        if reached[g] {
            continue;
        }
        gens.push(g);
        // recompute closure from the identity-independent start: all products of gens
        reached = vec![false; n];
        let start = (0..n).find(|&e| (0..n).all(|x| table[e * n + x] == x)).unwrap();
        reached[start] = true;
        let mut list = vec![start];
        let mut k = 0;
        while k < list.len() {
            let x = list[k];
            k += 1;
            for &s in &gens {
                let y = table[x * n + s];
                if !reached[y] {
                    reached[y] = true;
                    list.push(y);
                }
            }
        }
    }
    let perms = gens.into_iter().map(right).collect::<Result<Vec<_>>>()?;
    PermGroup::with_known_order(n, perms, &BigUint::from(n))
}

/// Regular permutation representation of a binary polyhedral group, built
/// from its explicit unit-quaternion elements (or, for the dihedral and
/// cyclic families, from their defining relations).
pub fn binary_polyhedral(kind: BinaryKind) -> Result<PermGroup> {
    match kind {
        BinaryKind::Tetrahedral => regular_representation(&hurwitz_units(), |a, b| a * b),
        BinaryKind::Icosahedral => regular_representation(&icosians(), |a, b| a * b),
        BinaryKind::Octahedral => regular_representation(&binary_octahedral_units(), |a, b| a * b),
        BinaryKind::Dihedral(m) => {
            if m < 1 {
                return Err(Error::InvalidParameter("binary dihedral group needs m >= 1".into()));
            }
            // a^k x^e with a^(2m) = 1, x^2 = a^m, x a x^-1 = a^-1
            let n = 2 * m;
            let els: Vec<(usize, usize)> = (0..2).flat_map(|e| (0..n).map(move |k| (k, e))).collect();
            regular_representation(&els, |&(k1, e1), &(k2, e2)| match (e1, e2) {
                (0, e) => ((k1 + k2) % n, e),
                (_, 0) => ((k1 + n - k2) % n, 1),
                _ => ((k1 + n - k2 + m) % n, 0),
            })
        }
        BinaryKind::Cyclic(m) => {
            if m < 1 {
                return Err(Error::InvalidParameter("cyclic group needs m >= 1".into()));
            }
            Ok(PermGroup::cyclic(m))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_lists_have_norm_one() {
        assert_eq!(hurwitz_units().len(), 24);
        assert_eq!(icosians().len(), 120);
        assert_eq!(binary_octahedral_units().len(), 48);
        for q in icosians() {
            assert_eq!(q.norm(), QuadNum::one());
        }
        for q in binary_octahedral_units() {
            assert_eq!(q.norm(), QuadNum::one());
        }
    }

    #[test]
    fn quaternion_relations() {
        let i = Quaternion::from_ints(0, 1, 0, 0);
        let j = Quaternion::from_ints(0, 0, 1, 0);
        let k = Quaternion::from_ints(0, 0, 0, 1);
        let m1 = Quaternion::from_ints(-1, 0, 0, 0);
        assert_eq!(&i * &i, m1);
        assert_eq!(&j * &j, m1);
        assert_eq!(&k * &k, m1);
        assert_eq!(&(&i * &j) * &k, m1);
        assert_eq!(&i * &j, k);
    }

    #[test]
    fn binary_orders() {
        for kind in [
            BinaryKind::Tetrahedral,
            BinaryKind::Octahedral,
            BinaryKind::Icosahedral,
            BinaryKind::Dihedral(3),
            BinaryKind::Dihedral(1),
            BinaryKind::Cyclic(5),
        ] {
            let g = binary_polyhedral(kind).unwrap();
            assert_eq!(g.order_u64().unwrap() as usize, kind.order(), "{:?}", kind);
            assert_eq!(g.degree(), kind.order());
        }
        assert!(binary_polyhedral(BinaryKind::Dihedral(0)).is_err());
    }
}
