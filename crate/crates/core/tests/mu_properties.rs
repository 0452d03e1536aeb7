mod common;

use common::oracle::exhaustive_mu;
use mindeg_core::coxeter::quaternion::regular_representation;
use mindeg_core::coxeter::{binary_polyhedral, monomial_group, natural_classical, BinaryKind, CoxeterType};
use mindeg_core::group_ops::{direct_product, prime_power, AbelianType};
use mindeg_core::mu::{minimal_degree, minimal_degree_in, mu_abelian, mu_dihedral, verify_representation};
use mindeg_core::subgroups::{all_subgroups, LatticeOptions};
use mindeg_core::{GroupTable, PermGroup, Permutation, Subgroup};

fn q8() -> PermGroup {
    let a = Permutation::parse("(1,2,4,6)(3,8,7,5)", 8).unwrap();
    let b = Permutation::parse("(1,3,4,7)(2,5,6,8)", 8).unwrap();
    PermGroup::new(8, vec![a, b]).unwrap()
}

fn dihedral(order: usize) -> PermGroup {
    natural_classical(CoxeterType::I2(order / 2)).unwrap()
}

fn mu(g: &PermGroup) -> usize {
    minimal_degree(g, &LatticeOptions::default()).unwrap().value
}

/// Regular representation of `C_{f1} × C_{f2} × …`.
fn abelian_regular(factors: &[u64]) -> PermGroup {
    let mut els: Vec<Vec<u64>> = vec![vec![]];
    for &f in factors {
        els = els.into_iter().flat_map(|e| (0..f).map(move |a| [e.clone(), vec![a]].concat())).collect();
    }
    regular_representation(&els, |a, b| a.iter().zip(b).zip(factors).map(|((x, y), f)| (x + y) % f).collect()).unwrap()
}

/// All multisets of prime powers with product `n`.
fn abelian_types(n: u64) -> Vec<Vec<u64>> {
    fn rec(n: u64, min: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if n == 1 {
            out.push(acc.clone());
            return;
        }
        for q in min..=n {
            if n.is_multiple_of(q) && prime_power(q).is_some() {
                acc.push(q);
                rec(n / q, q, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, 2, &mut Vec::new(), &mut out);
    out
}

fn oracle_groups() -> Vec<(&'static str, PermGroup)> {
    let t = binary_polyhedral(BinaryKind::Tetrahedral).unwrap();
    vec![
        ("S3", PermGroup::symmetric(3)),
        ("S4", PermGroup::symmetric(4)),
        ("A5", PermGroup::alternating(5)),
        ("S5", PermGroup::symmetric(5)),
        ("Q8", q8()),
        ("C12", PermGroup::cyclic(12)),
        ("C2xC2xC2", abelian_regular(&[2, 2, 2])),
        ("D8", dihedral(8)),
        ("D12", dihedral(12)),
        ("D24", dihedral(24)),
        ("C2xA5", direct_product(&PermGroup::cyclic(2), &PermGroup::alternating(5))),
        ("2T", t.clone()),
        ("2O", binary_polyhedral(BinaryKind::Octahedral).unwrap()),
        ("2I", binary_polyhedral(BinaryKind::Icosahedral).unwrap()),
        ("2D3", binary_polyhedral(BinaryKind::Dihedral(3)).unwrap()),
        ("B3", natural_classical(CoxeterType::B(3)).unwrap()),
        ("D4", natural_classical(CoxeterType::D(4)).unwrap()),
        ("G(4,4,3)", monomial_group(4, 4, 3).unwrap()),
        ("G(5,5,3)", monomial_group(5, 5, 3).unwrap()),
        ("Q8xC3", direct_product(&q8(), &PermGroup::cyclic(3))),
    ]
}

#[test]
fn solver_matches_exhaustive_search() {
    for (name, g) in oracle_groups() {
        let t = GroupTable::new(&g).unwrap();
        let l = all_subgroups(&t, &LatticeOptions::default()).unwrap();
        let cert = minimal_degree_in(&t, &l).unwrap();
        assert_eq!(cert.value, exhaustive_mu(&t, &l.all), "{}", name);
        assert_eq!(verify_representation(&t, &cert.witness).unwrap(), (cert.value, true), "{}", name);
        assert_eq!(cert.induced_degree, cert.value);
    }
}

#[test]
fn solver_is_deterministic() {
    let g = natural_classical(CoxeterType::B(3)).unwrap();
    let a = minimal_degree(&g, &LatticeOptions::default()).unwrap();
    let b = minimal_degree(&g, &LatticeOptions::default()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn abelian_formula_agrees() {
    for n in 1..=100 {
        for f in abelian_types(n) {
            let g = abelian_regular(&f);
            let expected = mu_abelian(&AbelianType::new(f.clone()).unwrap());
            assert_eq!(mu(&g) as u64, expected, "{:?}", f);
        }
    }
}

#[test]
fn dihedral_formula_agrees() {
    for order in (2..=200).step_by(2) {
        assert_eq!(mu(&dihedral(order)) as u64, mu_dihedral(order as u64).unwrap(), "order {}", order);
    }
}

/// Point stabilizers in `H` of one point per `H`-orbit on the cosets of
/// `K`, skipping fixed points; `H` and `K` are given in `t`.
fn restricted_stabilizers(t: &GroupTable, k: &Subgroup, h: &Subgroup) -> Vec<Vec<usize>> {
    let hl = h.indices();
    let mut seen = vec![false; t.len()];
    let mut out = Vec::new();
    for x in 0..t.len() {
        if seen[x] {
            continue;
        }
        // mark the H-orbit of the coset Kx, i.e. all of K·x·H
        for &a in &k.indices() {
            for &b in &hl {
                seen[t.mul(t.mul(a, x), b)] = true;
            }
        }
        let stab: Vec<usize> = hl.iter().copied().filter(|&y| k.contains(t.mul(t.mul(x, y), t.inv(x)))).collect();
        if stab.len() < hl.len() {
            out.push(stab);
        }
    }
    out
}

#[test]
fn subgroups_need_no_more_points() {
    // The optimal action of G restricted to H, minus the points H fixes, is
    // a faithful action of H, so μ(H) ≤ its degree ≤ μ(G).
    for g in [PermGroup::symmetric(4), natural_classical(CoxeterType::B(3)).unwrap(), dihedral(24), q8()] {
        let t = GroupTable::new(&g).unwrap();
        let l = all_subgroups(&t, &LatticeOptions::default()).unwrap();
        let cert = minimal_degree_in(&t, &l).unwrap();
        for c in &l.classes {
            let h = &l.all[c.representative];
            let hg = PermGroup::new(g.degree(), h.indices().into_iter().map(|i| t.element(i)).collect()).unwrap();
            let ht = GroupTable::new(&hg).unwrap();
            let to_h = |i: usize| ht.index_of(&t.element(i)).unwrap();
            let stabs: Vec<Subgroup> = cert
                .witness
                .iter()
                .flat_map(|k| restricted_stabilizers(&t, k, h))
                .map(|s| Subgroup::from_indices(&ht, &s.into_iter().map(to_h).collect::<Vec<_>>()).unwrap())
                .collect();
            let (degree, faithful) = verify_representation(&ht, &stabs).unwrap();
            assert!(faithful);
            assert!(degree <= cert.value);
            assert!(mu(&hg) <= degree, "subgroup of order {}", ht.len());
        }
    }
}

#[test]
fn nilpotent_products_add() {
    let d8 = dihedral(8);
    let c4 = PermGroup::cyclic(4);
    let c9 = PermGroup::cyclic(9);
    let v = abelian_regular(&[2, 2]);
    let pairs: Vec<(PermGroup, PermGroup)> = vec![
        (q8(), PermGroup::cyclic(3)),
        (d8.clone(), c4.clone()),
        (q8(), d8.clone()),
        (d8.clone(), c9),
        (q8(), q8()),
        (v, abelian_regular(&[3, 3])),
        (c4, PermGroup::cyclic(5)),
    ];
    for (p, q) in pairs {
        let pq = direct_product(&p, &q);
        assert_eq!(mu(&pq), mu(&p) + mu(&q));
    }
}

#[test]
fn simple_factors_add() {
    let g = direct_product(&PermGroup::cyclic(2), &PermGroup::alternating(5));
    assert_eq!(mu(&g), 7);
    assert_eq!(mu(&PermGroup::cyclic(2)) + mu(&PermGroup::alternating(5)), 7);
}

#[test]
fn central_extension_bound() {
    let bin_i = binary_polyhedral(BinaryKind::Icosahedral).unwrap();
    assert_eq!(mu(&bin_i), 24);
    assert!(24 >= 2 * mu(&PermGroup::alternating(5)));
}
