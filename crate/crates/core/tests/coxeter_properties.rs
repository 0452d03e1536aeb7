use mindeg_core::coxeter::quaternion::{binary_octahedral_units, icosians, Quaternion};
use mindeg_core::coxeter::roots::{dot, root_system, RootSystem};
use mindeg_core::coxeter::{binary_polyhedral, coxeter_group, rotation_subgroup, BinaryKind, CoxeterType, QuadNum};
use mindeg_core::{GroupTable, Permutation};
use proptest::prelude::*;
use std::sync::OnceLock;

fn systems() -> &'static [(RootSystem, Vec<Permutation>)] {
    static CELL: OnceLock<Vec<(RootSystem, Vec<Permutation>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        [CoxeterType::F4, CoxeterType::H4]
            .into_iter()
            .map(|k| {
                let rs = root_system(k).unwrap();
                let s = rs.simple_reflections().unwrap();
                (rs, s)
            })
            .collect()
    })
}

fn quadnum() -> impl Strategy<Value = QuadNum> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6).prop_map(|(a, b, c, d)| QuadNum::from_parts(a, b, c, d))
}

fn quaternion() -> impl Strategy<Value = Quaternion> {
    (quadnum(), quadnum(), quadnum(), quadnum()).prop_map(|(w, x, y, z)| Quaternion::new(w, x, y, z))
}

proptest! {
    #[test]
    fn norm_is_multiplicative(g in quaternion(), h in quaternion()) {
        prop_assert_eq!((&g * &h).norm(), &g.norm() * &h.norm());
    }

    #[test]
    fn quadnum_field_laws(a in quadnum(), b in quadnum(), c in quadnum()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if !b.is_zero() {
            prop_assert_eq!(&(&a / &b) * &b, a.clone());
        }
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn weyl_group_preserves_gram(word in proptest::collection::vec(0usize..4, 0..30)) {
        for (rs, s) in systems() {
            let mut w = Permutation::identity(rs.roots.len());
            for &i in &word {
                w = w.then(&s[i % s.len()]).unwrap();
            }
            let simple: Vec<usize> = rs.simple_roots.iter().map(|r| rs.index_of(r).unwrap()).collect();
            for (i, &a) in simple.iter().enumerate() {
                for (j, &b) in simple.iter().enumerate() {
                    let ip = dot(&rs.roots[w.apply(a)], &rs.roots[w.apply(b)]);
                    prop_assert_eq!(&ip, &rs.gram[i][j]);
                }
            }
        }
    }
}

#[test]
fn binary_units_are_unit_norm() {
    for q in icosians() {
        assert_eq!(q.norm(), QuadNum::one());
    }
    for u in binary_octahedral_units() {
        assert_eq!(u.norm(), QuadNum::one());
    }
}

#[test]
fn binary_groups_have_one_involution() {
    for kind in [BinaryKind::Tetrahedral, BinaryKind::Octahedral, BinaryKind::Icosahedral, BinaryKind::Dihedral(5)] {
        let t = GroupTable::new(&binary_polyhedral(kind).unwrap()).unwrap();
        let involutions = (0..t.len()).filter(|&x| t.order_of(x) == 2).count();
        assert_eq!(involutions, 1, "{:?}", kind);
    }
}

#[test]
fn coxeter_orders_match_formulas() {
    use CoxeterType::*;
    let fact = |n: u64| (1..=n).product::<u64>();
    for n in 1..=6u64 {
        assert_eq!(coxeter_group(A(n as usize)).unwrap().order_u64(), Some(fact(n + 1)));
        assert_eq!(coxeter_group(B(n as usize)).unwrap().order_u64(), Some((1 << n) * fact(n)));
        if n >= 2 {
            assert_eq!(coxeter_group(D(n as usize)).unwrap().order_u64(), Some((1 << (n - 1)) * fact(n)));
        }
    }
    let known = [(F4, 1152u64), (H3, 120), (H4, 14400), (E6, 51840), (E7, 2903040), (E8, 696729600)];
    for (k, o) in known {
        assert_eq!(coxeter_group(k).unwrap().order_u64(), Some(o), "{}", k);
    }
}

#[test]
fn rotation_subgroups_have_index_two() {
    use CoxeterType::*;
    for k in [A(3), B(3), D(4), F4, H3, E6] {
        let w = coxeter_group(k).unwrap();
        let gens = w.generators().to_vec();
        let r = rotation_subgroup(&w, &gens).unwrap();
        assert_eq!(r.order() * 2u32, w.order());
        for s in &gens {
            assert!(!r.contains(s).unwrap());
        }
    }
}
