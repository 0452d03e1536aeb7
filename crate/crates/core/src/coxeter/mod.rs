//! Coxeter groups, their natural actions, and related constructions.

pub mod quadnum;
pub mod quaternion;
pub mod roots;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation};

pub use quadnum::QuadNum;
pub use quaternion::{binary_polyhedral, BinaryKind, Quaternion};
pub use roots::{root_system, RootSystem};

/// Irreducible finite Coxeter types.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(usize),
    B(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    I2(usize),
}

impl CoxeterType {
    pub fn rank(&self) -> usize {
        use CoxeterType::*;
        match *self {
            A(n) | B(n) | D(n) => n,
            E6 => 6,
            E7 => 7,
            E8 => 8,
            F4 | H4 => 4,
            H3 => 3,
            I2(_) => 2,
        }
    }

    /// `|W|` from the standard formulas.
    pub fn group_order(&self) -> BigUint {
        use CoxeterType::*;
        let fact = |n: usize| (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k));
        match *self {
            A(n) => fact(n + 1),
            B(n) => fact(n) << n,
            D(n) => fact(n) << (n - 1),
            E6 => BigUint::from(51_840u32),
            E7 => BigUint::from(2_903_040u32),
            E8 => BigUint::from(696_729_600u32),
            F4 => BigUint::from(1152u32),
            H3 => BigUint::from(120u32),
            H4 => BigUint::from(14_400u32),
            I2(m) => BigUint::from(2 * m),
        }
    }

    fn validate(&self) -> Result<()> {
        use CoxeterType::*;
        let ok = match *self {
            A(n) | B(n) => n >= 1,
            D(n) => n >= 2,
            I2(m) => m >= 1,
            _ => true,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("invalid rank for {}", self)))
        }
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use CoxeterType::*;
        match *self {
            A(n) => write!(f, "A{}", n),
            B(n) => write!(f, "B{}", n),
            D(n) => write!(f, "D{}", n),
            E6 => f.write_str("E6"),
            E7 => f.write_str("E7"),
            E8 => f.write_str("E8"),
            F4 => f.write_str("F4"),
            H3 => f.write_str("H3"),
            H4 => f.write_str("H4"),
            I2(m) => write!(f, "I2({})", m),
        }
    }
}

impl FromStr for CoxeterType {
    type Err = Error;

    /// Accepts `A3`, `b4`, `E8`, `I2(5)` and the like.
    fn from_str(s: &str) -> Result<Self> {
        use CoxeterType::*;
        let s = s.trim();
        let bad = || Error::InvalidParameter(format!("unknown Coxeter type '{}'", s));
        let upper: String = s.chars().map(|c| c.to_ascii_uppercase()).collect();
        if let Some(rest) = upper.strip_prefix("I2(") {
            let m = rest.strip_suffix(')').ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
            let t = I2(m);
            t.validate()?;
            return Ok(t);
        }
        let (head, tail) = upper.split_at(upper.char_indices().nth(1).map_or(upper.len(), |(i, _)| i));
        let n: usize = tail.parse().map_err(|_| bad())?;
        let t = match (head, n) {
            ("A", n) => A(n),
            ("B", n) => B(n),
            ("D", n) => D(n),
            ("E", 6) => E6,
            ("E", 7) => E7,
            ("E", 8) => E8,
            ("F", 4) => F4,
            ("H", 3) => H3,
            ("H", 4) => H4,
            _ => return Err(bad()),
        };
        t.validate()?;
        Ok(t)
    }
}

/// `W` acting on its canonically ordered roots, generated by the simple
/// reflections in simple-root order.
pub fn coxeter_group(kind: CoxeterType) -> Result<PermGroup> {
    let rs = root_system(kind)?;
    let gens = rs.simple_reflections()?;
    PermGroup::new(rs.roots.len(), gens)
}

/// A signed permutation on points `2i = +e_i`, `2i + 1 = −e_i`, given as
/// the image `(j, negative)` of each `e_i`.
pub fn signed_permutation(images: &[(usize, bool)]) -> Result<Permutation> {
    let mut out = vec![0u32; 2 * images.len()];
    for (i, &(j, neg)) in images.iter().enumerate() {
        if j >= images.len() {
            return Err(Error::PointOutOfRange { point: j, degree: images.len() });
        }
        let (p, m) = (2 * j as u32, 2 * j as u32 + 1);
        out[2 * i] = if neg { m } else { p };
        out[2 * i + 1] = if neg { p } else { m };
    }
    Permutation::from_images(out)
}

fn swap_coords(n: usize, i: usize, j: usize, neg: bool) -> Result<Permutation> {
    let mut im: Vec<(usize, bool)> = (0..n).map(|k| (k, false)).collect();
    im[i] = (j, neg);
    im[j] = (i, neg);
    signed_permutation(&im)
}

/// The natural action of a classical Coxeter group:
/// `A_n` as `Sym(n+1)`, `B_n` and `D_n` as (even) signed permutations on
/// `2n` points, `I2(m)` as the dihedral group on `m` points (with `I2(1)` the
/// cyclic group on 2 points and `I2(2)` the Klein four group on 4 points).
/// Generators are the simple reflections.
pub fn natural_classical(kind: CoxeterType) -> Result<PermGroup> {
    use CoxeterType::*;
    kind.validate()?;
    let mut gens = Vec::new();
    let degree = match kind {
        A(n) => {
            for i in 0..n {
                gens.push(Permutation::from_cycles(n + 1, &[vec![i, i + 1]])?);
            }
            n + 1
        }
        B(n) | D(n) => {
            for i in 0..n - 1 {
                gens.push(swap_coords(n, i, i + 1, false)?);
            }
            if matches!(kind, B(_)) {
                let mut im: Vec<(usize, bool)> = (0..n).map(|k| (k, false)).collect();
                im[n - 1] = (n - 1, true);
                gens.push(signed_permutation(&im)?);
            } else {
                gens.push(swap_coords(n, n - 2, n - 1, true)?);
            }
            2 * n
        }
        I2(1) => {
            gens.push(Permutation::from_cycles(2, &[vec![0, 1]])?);
            2
        }
        I2(2) => {
            gens.push(Permutation::from_cycles(4, &[vec![0, 1]])?);
            gens.push(Permutation::from_cycles(4, &[vec![2, 3]])?);
            4
        }
        I2(m) => {
            // x ↦ −x and x ↦ 1 − x; their product is the rotation x ↦ x + 1.
            let s1 = (0..m).map(|x| ((m - x) % m) as u32).collect();
            let s2 = (0..m).map(|x| ((m + 1 - x) % m) as u32).collect();
            gens.push(Permutation::from_images(s1)?);
            gens.push(Permutation::from_images(s2)?);
            m
        }
        _ => return Err(Error::InvalidParameter(format!("{} has no natural classical action", kind))),
    };
    PermGroup::new(degree, gens)
}

/// The subgroup generated by `s_1 s_i` (`i ≥ 2`), which is the kernel of the
/// sign character when the `s_i` are simple reflections generating `W`.
pub fn rotation_subgroup(w: &PermGroup, simple_gens: &[Permutation]) -> Result<PermGroup> {
    let first = simple_gens.first().ok_or_else(|| Error::InvalidParameter("no generators".into()))?;
    for s in simple_gens {
        if !w.contains(s)? {
            return Err(Error::NotInGroup);
        }
    }
    let generated = PermGroup::new(w.degree(), simple_gens.to_vec())?;
    if generated.order() != w.order() {
        return Err(Error::InvalidParameter("generators do not generate the group".into()));
    }
    let gens: Vec<Permutation> = if simple_gens.len() == 1 {
        vec![first.then(first)?]
    } else {
        simple_gens[1..].iter().map(|s| first.then(s)).collect::<Result<_>>()?
    };
    let r = PermGroup::new(w.degree(), gens)?;
    if r.order() * 2u32 != w.order() {
        return Err(Error::InvalidParameter("rotation subgroup does not have index 2".into()));
    }
    Ok(r)
}

/// `Q8` acting on `±1, ±i, ±j, ±k` by left multiplication, as signed
/// permutations of degree 8 (points as in [`signed_permutation`], basis
/// order `1, i, j, k`). Checked to lie in the even signed permutations.
pub fn q8_signed() -> Result<PermGroup> {
    let i = signed_permutation(&[(1, false), (0, true), (3, false), (2, true)])?;
    let j = signed_permutation(&[(2, false), (3, true), (0, true), (1, false)])?;
    let k = signed_permutation(&[(3, false), (2, false), (1, true), (0, true)])?;
    let q = PermGroup::new(8, vec![i, j, k])?;
    let d4 = natural_classical(CoxeterType::D(4))?;
    if !d4.contains_group(&q)? {
        return Err(Error::Internal("quaternion matrices are not even signed permutations".into()));
    }
    Ok(q)
}

/// `G(m, p, n)` on `m·n` points, point `i·m + a` standing for `ζ^a e_i`.
/// Generators: adjacent coordinate swaps, `ζ^p` on the first coordinate
/// (when `p < m`), and `(ζ, ζ⁻¹)` on the first two coordinates (when
/// `n ≥ 2`). `G(2, 2, n)` coincides with `natural_classical(D_n)`.
pub fn monomial_group(m: usize, p: usize, n: usize) -> Result<PermGroup> {
    if m == 0 || p == 0 || n == 0 || !m.is_multiple_of(p) {
        return Err(Error::InvalidParameter(format!("G({}, {}, {}) needs p | m and n >= 1", m, p, n)));
    }
    let degree = m * n;
    let diag = |shift: &dyn Fn(usize) -> usize| -> Result<Permutation> {
        let mut im = vec![0u32; degree];
        for i in 0..n {
            for a in 0..m {
                im[i * m + a] = (i * m + (a + shift(i)) % m) as u32;
            }
        }
        Permutation::from_images(im)
    };
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        let mut im: Vec<u32> = (0..degree as u32).collect();
        for a in 0..m {
            im.swap(i * m + a, (i + 1) * m + a);
        }
        gens.push(Permutation::from_images(im)?);
    }
    if p < m {
        gens.push(diag(&|i| if i == 0 { p } else { 0 })?);
    }
    if n >= 2 && m > 1 {
        gens.push(diag(&|i| match i {
            0 => 1,
            1 => m - 1,
            _ => 0,
        })?);
    }
    let fact = (1..=n).fold(BigUint::from(1u32), |acc, k| acc * BigUint::from(k));
    let order = BigUint::from(m).pow(n as u32) * fact / BigUint::from(p);
    let g = PermGroup::new(degree, gens)?;
    if g.order() != order {
        return Err(Error::Internal(format!("G({}, {}, {}) has order {}, expected {}", m, p, n, g.order(), order)));
    }
    Ok(g)
}

/// `W(E6)` acting on the 27 antipodal pairs of `E7` roots outside the `E6`
/// subsystem (simple roots 1..6 of the Bourbaki labeling). Pairs are
/// numbered by their canonically smaller member.
pub fn e6_on_27() -> Result<PermGroup> {
    let e7 = root_system(CoxeterType::E7)?;
    let e6 = root_system(CoxeterType::E6)?;
    let outside: Vec<usize> = (0..e7.roots.len()).filter(|&r| e6.index_of(&e7.roots[r]).is_none()).collect();
    if outside.len() != 54 {
        return Err(Error::Internal(format!("expected 54 roots outside E6, found {}", outside.len())));
    }
    let mut block = vec![usize::MAX; e7.roots.len()];
    let mut reps = 0;
    for &r in &outside {
        if block[r] != usize::MAX {
            continue;
        }
        let neg: Vec<QuadNum> = e7.roots[r].iter().map(|x| -x).collect();
        let s = e7.index_of(&neg).ok_or_else(|| Error::Internal("root system not closed under negation".into()))?;
        block[r] = reps;
        block[s] = reps;
        reps += 1;
    }
    let mut rep_of = vec![0usize; reps];
    for &r in outside.iter().rev() {
        rep_of[block[r]] = r;
    }
    let gens = e6
        .simple_roots
        .iter()
        .map(|a| {
            let s = e7.reflection_permutation(a)?;
            let im = (0..reps).map(|b| block[s.apply(rep_of[b])] as u32).collect();
            Permutation::from_images(im)
        })
        .collect::<Result<Vec<_>>>()?;
    let g = PermGroup::new(reps, gens)?;
    if g.order() != CoxeterType::E6.group_order() {
        return Err(Error::Internal(format!("27-point action has order {}", g.order())));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use CoxeterType::*;

    #[test]
    fn parse_types() {
        assert_eq!("F4".parse::<CoxeterType>().unwrap(), F4);
        assert_eq!("b4".parse::<CoxeterType>().unwrap(), B(4));
        assert_eq!("I2(7)".parse::<CoxeterType>().unwrap(), I2(7));
        assert!("D1".parse::<CoxeterType>().is_err());
        assert!("E9".parse::<CoxeterType>().is_err());
        for t in [A(3), E8, I2(12), H3] {
            assert_eq!(t.to_string().parse::<CoxeterType>().unwrap(), t);
        }
    }

    #[test]
    fn small_coxeter_orders() {
        for t in [A(1), A(3), B(3), D(4), F4, H3] {
            assert_eq!(coxeter_group(t).unwrap().order(), t.group_order(), "{}", t);
        }
    }

    #[test]
    fn natural_actions() {
        let b4 = natural_classical(B(4)).unwrap();
        assert_eq!((b4.degree(), b4.order_u64()), (8, Some(384)));
        assert_eq!(natural_classical(D(3)).unwrap().order_u64(), Some(24));
        assert_eq!(natural_classical(D(2)).unwrap().order_u64(), Some(4));
        assert_eq!(natural_classical(I2(1)).unwrap().order_u64(), Some(2));
        assert_eq!(natural_classical(I2(2)).unwrap().order_u64(), Some(4));
        assert_eq!(natural_classical(I2(5)).unwrap().order_u64(), Some(10));
        assert!(natural_classical(F4).is_err());
    }

    #[test]
    fn monomial_matches_d_n() {
        for n in 2..=5 {
            let g = monomial_group(2, 2, n).unwrap();
            let d = natural_classical(D(n)).unwrap();
            assert!(g.contains_group(&d).unwrap() && d.contains_group(&g).unwrap());
        }
        let g = monomial_group(5, 5, 3).unwrap();
        assert_eq!((g.degree(), g.order_u64(), g.is_transitive()), (15, Some(150), true));
        assert_eq!(monomial_group(4, 4, 3).unwrap().order_u64(), Some(96));
        assert!(monomial_group(4, 3, 2).is_err());
    }

    #[test]
    fn q8_in_d4() {
        let q = q8_signed().unwrap();
        assert_eq!(q.order_u64(), Some(8));
        assert_eq!(q.generators()[0].to_cycle_string(), "(1,3,2,4)(5,7,6,8)");
    }

    #[test]
    fn rotation_subgroups() {
        let w = natural_classical(A(4)).unwrap();
        let r = rotation_subgroup(&w, w.generators()).unwrap();
        assert!(r.contains_group(&PermGroup::alternating(5)).unwrap());
        assert_eq!(r.order_u64(), Some(60));
        for s in w.generators() {
            assert!(!r.contains(s).unwrap());
        }
        let c2 = natural_classical(A(1)).unwrap();
        assert_eq!(rotation_subgroup(&c2, c2.generators()).unwrap().order_u64(), Some(1));
    }
}
