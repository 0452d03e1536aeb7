//! Minimal faithful permutation degree.
//!
//! A faithful action of `G` is a disjoint union of transitive actions on
//! coset spaces `G/H_i`, with kernel `⋂ core(H_i)`. That intersection is a
//! normal subgroup, so it is trivial exactly when it contains no minimal
//! normal subgroup. Writing `N_1..N_k` for the minimal normal subgroups, a
//! choice of subgroups is faithful iff every `N_j` escapes some core, and
//! `μ(G)` is the least total index of such a choice.
//!
//! The solver tracks the set of `N_j` still contained in the running
//! intersection of cores. Adding `H` intersects that set with the `N_j`
//! inside `core(H)`, at cost `|G:H|`. Only conjugacy class representatives
//! matter (conjugate subgroups share a core and an index), and using a
//! class twice never helps (the second copy changes nothing and costs
//! more), so each class is a 0/1 choice. The number of distinct states is
//! bounded by the number of normal subgroups, which makes an exact memoized
//! search cheap next to the lattice enumeration.
//!
//! `μ` of the trivial group is 0 (the empty collection).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigUint;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::group_ops::{factorize, minimal_normal_subgroups, AbelianType};
use crate::perm::{PermGroup, Permutation};
use crate::subgroups::{all_subgroups, min_index_core_free, LatticeOptions, Subgroup, SubgroupLattice};
use crate::table::GroupTable;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuCertificate {
    pub value: usize,
    /// Class representatives whose coset actions together are faithful.
    pub witness: Vec<Subgroup>,
    /// Positions of the witness subgroups in [`SubgroupLattice::all`], when
    /// they came from a lattice.
    pub lattice_positions: Vec<usize>,
    pub induced_degree: usize,
    pub faithful: bool,
}

/// Builds the table and lattice under `opts` and solves.
pub fn minimal_degree(g: &PermGroup, opts: &LatticeOptions<'_>) -> Result<MuCertificate> {
    let order = g.order();
    if order > BigUint::from(opts.max_group_order) {
        return Err(Error::LatticeGuard { order: usize::try_from(order).unwrap_or(usize::MAX), guard: opts.max_group_order });
    }
    let t = GroupTable::new(g)?;
    let lattice = all_subgroups(&t, opts)?;
    minimal_degree_in(&t, &lattice)
}

/// Cost of a partial solution: total index, then number of constituents.
type Cost = (usize, usize);

struct Solver {
    /// `(weight, covered-mask, class)` with the mask as the `N_j` inside the core.
    options: Vec<(usize, Bits, usize)>,
    weights: Vec<usize>,
    memo: HashMap<(Bits, usize), Option<Cost>>,
}

impl Solver {
    /// Cheapest way to empty `state` using classes whose weight is at least
    /// `weights[w]`, taken in non-decreasing weight order.
    fn best(&mut self, state: &Bits, w: usize) -> Option<Cost> {
        if state.is_empty() {
            return Some((0, 0));
        }
        if let Some(&c) = self.memo.get(&(state.clone(), w)) {
            return c;
        }
        let mut best: Option<Cost> = None;
        let mut seen: Vec<(usize, Bits)> = Vec::new();
        for i in 0..self.options.len() {
            let (weight, mask) = (self.options[i].0, self.options[i].1.clone());
            if weight < self.weights[w] {
                continue;
            }
            if let Some((c, _)) = best {
                if weight > c {
                    break;
                }
            }
            let next = state.intersection(&mask);
            if next == *state || seen.iter().any(|(sw, sm)| *sw == weight && *sm == next) {
                continue;
            }
            seen.push((weight, next.clone()));
            let wi = self.weights.binary_search(&weight).unwrap();
            if let Some((c, k)) = self.best(&next, wi) {
                let cand = (c + weight, k + 1);
                if best.is_none_or(|b| cand < b) {
                    best = Some(cand);
                }
            }
        }
        self.memo.insert((state.clone(), w), best);
        best
    }
}

/// Exact `μ(G)` from a precomputed lattice.
///
/// Ties between optimal collections are broken by fewest constituents, then
/// by the ascending list of indices (lexicographically smallest), then by
/// the lattice positions of the representatives taken in that order.
pub fn minimal_degree_in(t: &GroupTable, lattice: &SubgroupLattice) -> Result<MuCertificate> {
    if t.len() == 1 {
        return Ok(MuCertificate { value: 0, witness: Vec::new(), lattice_positions: Vec::new(), induced_degree: 0, faithful: true });
    }
    let minimal = minimal_normal_subgroups(t);
    let k = minimal.len();
    let mut options: Vec<(usize, Bits, usize)> = lattice
        .classes
        .iter()
        .enumerate()
        .map(|(ci, c)| {
            let inside = Bits::from_indices(k, (0..k).filter(|&j| minimal[j].is_subgroup_of(&c.core)));
            (c.index, inside, ci)
        })
        .filter(|(_, inside, _)| inside.count() < k)
        .collect();
    options.sort_by(|a, b| a.0.cmp(&b.0).then(lattice.classes[a.2].representative.cmp(&lattice.classes[b.2].representative)));
    let mut weights: Vec<usize> = options.iter().map(|o| o.0).collect();
    weights.dedup();
    let mut solver = Solver { options, weights, memo: HashMap::new() };
    let full = Bits::full(k);
    let (value, count) = solver.best(&full, 0).ok_or_else(|| Error::Internal("no faithful collection found".into()))?;

    // Witness: extend a frontier of optimal partial choices one constituent
    // at a time, always by the smallest admissible weight, then resolve the
    // class choice along the fixed weight sequence.
    let mut frontier: Vec<(Bits, usize, usize)> = vec![(full.clone(), 0, value)];
    let mut weight_seq = Vec::new();
    for step in 0..count {
        let remaining = count - step;
        let mut chosen: Option<usize> = None;
        let mut next: Vec<(Bits, usize, usize)> = Vec::new();
        for (state, w, budget) in &frontier {
            for i in 0..solver.options.len() {
                let (weight, mask) = (solver.options[i].0, solver.options[i].1.clone());
                if weight < solver.weights[*w] || chosen.is_some_and(|c| weight > c) {
                    continue;
                }
                if weight > *budget {
                    continue;
                }
                let after = state.intersection(&mask);
                let wi = solver.weights.binary_search(&weight).unwrap();
                if solver.best(&after, wi) == Some((budget - weight, remaining - 1)) {
                    if chosen.is_none_or(|c| weight < c) {
                        chosen = Some(weight);
                        next.clear();
                    }
                    if !next.iter().any(|(s, _, _)| *s == after) {
                        next.push((after, wi, budget - weight));
                    }
                }
            }
        }
        let weight = chosen.ok_or_else(|| Error::Internal("witness reconstruction failed".into()))?;
        weight_seq.push(weight);
        frontier = next;
    }
    let mut fits_memo: HashMap<(Bits, usize), bool> = HashMap::new();
    let mut state = full;
    let mut positions: Vec<usize> = Vec::new();
    for (step, &weight) in weight_seq.iter().enumerate() {
        let mut pick = None;
        for (ow, mask, class) in &solver.options {
            let rep = lattice.classes[*class].representative;
            if *ow != weight || positions.contains(&rep) {
                continue;
            }
            let after = state.intersection(mask);
            if after != state && fits(&solver.options, &weight_seq, step + 1, &after, &mut fits_memo) {
                pick = Some((rep, after));
                break;
            }
        }
        let (rep, after) = pick.ok_or_else(|| Error::Internal("witness reconstruction failed".into()))?;
        positions.push(rep);
        state = after;
    }
    let witness: Vec<Subgroup> = positions.iter().map(|&p| lattice.all[p].clone()).collect();
    let (degree, faithful) = verify_representation(t, &witness)?;
    if degree != value || !faithful {
        return Err(Error::Internal(format!("certificate failed verification: degree {} faithful {}", degree, faithful)));
    }
    Ok(MuCertificate { value, witness, lattice_positions: positions, induced_degree: degree, faithful })
}

/// Whether `state` can be emptied using exactly the weights `seq[from..]`.
fn fits(options: &[(usize, Bits, usize)], seq: &[usize], from: usize, state: &Bits, memo: &mut HashMap<(Bits, usize), bool>) -> bool {
    if from == seq.len() {
        return state.is_empty();
    }
    if let Some(&r) = memo.get(&(state.clone(), from)) {
        return r;
    }
    let r = options
        .iter()
        .filter(|o| o.0 == seq[from])
        .any(|(_, mask, _)| {
            let after = state.intersection(mask);
            after != *state && fits(options, seq, from + 1, &after, memo)
        });
    memo.insert((state.clone(), from), r);
    r
}

/// `μ(G)` for groups with a unique minimal normal subgroup, where some
/// minimal faithful action is transitive: the least index of a core-free
/// subgroup.
pub fn minimal_degree_transitive(t: &GroupTable, lattice: &SubgroupLattice) -> Result<MuCertificate> {
    let k = minimal_normal_subgroups(t).len();
    if k != 1 {
        return Err(Error::NotMonolithic(k));
    }
    let (index, h) = min_index_core_free(lattice).ok_or_else(|| Error::Internal("no core-free subgroup".into()))?;
    let pos = lattice.position(h).into_iter().collect();
    let witness = vec![h.clone()];
    let (degree, faithful) = verify_representation(t, &witness)?;
    if degree != index || !faithful {
        return Err(Error::Internal("transitive certificate failed verification".into()));
    }
    Ok(MuCertificate { value: index, witness, lattice_positions: pos, induced_degree: degree, faithful })
}

/// Builds the action of `G` on the disjoint union of the right coset spaces
/// of the given subgroups and reports its degree and whether it is faithful.
/// Works from the defining generators and a fresh stabilizer chain, sharing
/// nothing with the search.
pub fn verify_representation(t: &GroupTable, witness: &[Subgroup]) -> Result<(usize, bool)> {
    let n = t.len();
    let mut blocks: Vec<(Vec<u32>, usize)> = Vec::new();
    let mut degree = 0;
    for h in witness {
        if h.members().len() != n || !t.is_subgroup(h.members()) {
            return Err(Error::NotSubgroup("witness member is not a subgroup of the group".into()));
        }
        let list = h.indices();
        let mut coset = vec![u32::MAX; n];
        let mut count = 0u32;
        for x in 0..n {
            if coset[x] != u32::MAX {
                continue;
            }
            for &a in &list {
                coset[t.mul(a, x)] = count;
            }
            count += 1;
        }
        blocks.push((coset, degree));
        degree += count as usize;
    }
    if degree == 0 {
        return Ok((0, n == 1));
    }
    let mut gens = Vec::new();
    for &g in t.generators() {
        let mut images = vec![0u32; degree];
        for (coset, offset) in &blocks {
            // Hx ↦ Hxg, using any representative of each coset.
            let mut rep: BTreeMap<u32, usize> = BTreeMap::new();
            for x in 0..n {
                rep.entry(coset[x]).or_insert(x);
            }
            for (&c, &x) in &rep {
                images[offset + c as usize] = (offset + coset[t.mul(x, g as usize)] as usize) as u32;
            }
        }
        gens.push(Permutation::from_images(images)?);
    }
    let image = PermGroup::new(degree, gens)?;
    Ok((degree, image.order() == BigUint::from(n)))
}

/// Sum of the prime-power factors; 0 for the trivial group.
pub fn mu_abelian(t: &AbelianType) -> u64 {
    t.factors.iter().filter(|&&f| f > 1).sum()
}

/// Sum of the maximal prime-power divisors of `k`, with `ψ(1) = 0`.
pub fn psi(k: u64) -> u64 {
    factorize(k).into_iter().map(|(p, e)| p.pow(e)).sum()
}

/// `μ` of the dihedral group of order `2^r·n` (`n` odd, `r ≥ 1`).
pub fn mu_dihedral(order: u64) -> Result<u64> {
    if order < 2 || order % 2 == 1 {
        return Err(Error::InvalidParameter(format!("dihedral order {} must be even and at least 2", order)));
    }
    let r = order.trailing_zeros();
    let n = order >> r;
    Ok(match (n, r) {
        (1, 1..=2) => 1 << r,
        (1, _) => 1 << (r - 1),
        (_, 1) => psi(n),
        _ => (1 << (r - 1)) + psi(n),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group_ops::direct_product;

    fn q8() -> PermGroup {
        let a = Permutation::parse("(1,2,4,6)(3,8,7,5)", 8).unwrap();
        let b = Permutation::parse("(1,3,4,7)(2,5,6,8)", 8).unwrap();
        PermGroup::new(8, vec![a, b]).unwrap()
    }

    fn mu(g: &PermGroup) -> MuCertificate {
        minimal_degree(g, &LatticeOptions::default()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(mu(&q8()).value, 8);
        let v4 = PermGroup::new(4, vec![Permutation::parse("(1,2)", 4).unwrap(), Permutation::parse("(3,4)", 4).unwrap()]).unwrap();
        assert_eq!(mu(&v4).value, 4);
        assert_eq!(mu(&PermGroup::trivial(3)).value, 0);
        assert_eq!(mu(&PermGroup::symmetric(4)).value, 4);
        assert_eq!(mu(&PermGroup::cyclic(12)).value, 7);
        let c2a5 = direct_product(&PermGroup::cyclic(2), &PermGroup::alternating(5));
        assert_eq!(mu(&c2a5).value, 7);
    }

    #[test]
    fn witness_is_sound() {
        for g in [q8(), PermGroup::cyclic(12), PermGroup::symmetric(4)] {
            let c = mu(&g);
            let t = GroupTable::new(&g).unwrap();
            assert_eq!(verify_representation(&t, &c.witness).unwrap(), (c.value, true));
            assert_eq!(c.witness.iter().map(|h| h.index_in(&t)).sum::<usize>(), c.value);
        }
    }

    #[test]
    fn verify_examples() {
        let t = GroupTable::new(&q8()).unwrap();
        assert_eq!(verify_representation(&t, &[Subgroup::trivial(&t)]).unwrap(), (8, true));
        let i = t.generators()[0] as usize;
        assert_eq!(verify_representation(&t, &[Subgroup::generated(&t, &[i])]).unwrap(), (2, false));
    }

    #[test]
    fn transitive_requires_monolithic() {
        let t = GroupTable::new(&q8()).unwrap();
        let l = all_subgroups(&t, &LatticeOptions::default()).unwrap();
        assert_eq!(minimal_degree_transitive(&t, &l).unwrap().value, 8);
        let t = GroupTable::new(&PermGroup::cyclic(6)).unwrap();
        let l = all_subgroups(&t, &LatticeOptions::default()).unwrap();
        assert_eq!(minimal_degree_transitive(&t, &l), Err(Error::NotMonolithic(2)));
    }

    #[test]
    fn closed_forms() {
        assert_eq!((psi(1), psi(12), psi(15)), (0, 7, 8));
        assert_eq!(mu_dihedral(8).unwrap(), 4);
        assert_eq!(mu_dihedral(6).unwrap(), 3);
        assert_eq!(mu_dihedral(12).unwrap(), 5);
        assert_eq!(mu_dihedral(4).unwrap(), 4);
        assert!(mu_dihedral(15).is_err());
        assert_eq!(mu_abelian(&AbelianType::new(vec![4, 3]).unwrap()), 7);
        assert_eq!(mu_abelian(&AbelianType::new(vec![]).unwrap()), 0);
    }

    #[test]
    fn repeated_class_never_helps() {
        // Every optimal witness uses distinct classes.
        for g in [PermGroup::cyclic(30), PermGroup::symmetric(4), q8()] {
            let c = mu(&g);
            let mut p = c.lattice_positions.clone();
            p.sort_unstable();
            p.dedup();
            assert_eq!(p.len(), c.witness.len());
        }
    }
}
