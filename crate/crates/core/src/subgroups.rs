//! Subgroups as bitsets over an enumerated parent, and complete lattice
//! enumeration.
//!
//! The lattice is built by saturating under joins with cyclic subgroups:
//! every subgroup is generated by cyclic subgroups, so starting from the
//! trivial group and repeatedly forming `⟨H, x⟩` reaches all of them. Work is
//! done per conjugacy class: only class representatives are extended, and a
//! newly found subgroup brings its whole class along. This is complete because
//! if `K = ⟨H', x⟩` and `H'` is conjugate to the representative `H = H'^g`,
//! then `⟨H, x^g⟩ = K^g` is found, and with it the class of `K`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use hashbrown::HashMap;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::group_ops;
use crate::table::GroupTable;

/// Default cap on the group order accepted by [`all_subgroups`].
pub const DEFAULT_MAX_GROUP_ORDER: usize = 2000;
/// Hard ceiling, reachable only through an explicit override.
pub const HARD_MAX_GROUP_ORDER: usize = 8000;

/// A subgroup of an enumerated group, stored as a membership bitset over the
/// parent's element indices. The parent table is passed explicitly to every
/// operation that needs it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subgroup {
    members: Bits,
    gens: Vec<usize>,
    order: usize,
}

impl Subgroup {
    pub fn trivial(t: &GroupTable) -> Self {
        Subgroup { members: Bits::from_indices(t.len(), [0]), gens: Vec::new(), order: 1 }
    }

    pub fn whole(t: &GroupTable) -> Self {
        Subgroup::generated(t, &t.generators().iter().map(|&g| g as usize).collect::<Vec<_>>())
    }

    pub fn generated(t: &GroupTable, gens: &[usize]) -> Self {
        let members = t.closure(gens);
        let order = members.count();
        let gens = gens.iter().copied().filter(|&g| g != 0).collect();
        Subgroup { members, gens, order }
    }

    /// Wraps a bitset after checking it is a subgroup.
    pub fn from_bits(t: &GroupTable, members: Bits) -> Result<Self> {
        if !t.is_subgroup(&members) {
            return Err(Error::NotSubgroup("element set is not closed under multiplication".into()));
        }
        Ok(Self::from_bits_unchecked(t, members))
    }

    pub fn from_indices(t: &GroupTable, idx: &[usize]) -> Result<Self> {
        if idx.iter().any(|&i| i >= t.len()) {
            return Err(Error::NotSubgroup("element index out of range".into()));
        }
        Self::from_bits(t, Bits::from_indices(t.len(), idx.iter().copied()))
    }

    pub(crate) fn from_bits_unchecked(t: &GroupTable, members: Bits) -> Self {
        let gens = generating_set(t, &members);
        let order = members.count();
        Subgroup { members, gens, order }
    }

    pub(crate) fn from_parts(members: Bits, gens: Vec<usize>) -> Self {
        let order = members.count();
        Subgroup { members, gens, order }
    }

    pub fn members(&self) -> &Bits {
        &self.members
    }

    /// Small generating set (not necessarily minimal).
    pub fn generator_hints(&self) -> &[usize] {
        &self.gens
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Sorted element indices; the serialized form.
    pub fn indices(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn index_in(&self, t: &GroupTable) -> usize {
        t.len() / self.order
    }

    pub fn intersection(&self, t: &GroupTable, other: &Subgroup) -> Subgroup {
        Subgroup::from_bits_unchecked(t, self.members.intersection(&other.members))
    }

    pub fn conjugate(&self, t: &GroupTable, g: usize) -> Subgroup {
        let mut members = Bits::new(t.len());
        for x in self.members.iter() {
            members.insert(t.conj(x, g));
        }
        Subgroup { members, gens: self.gens.iter().map(|&x| t.conj(x, g)).collect(), order: self.order }
    }

    pub fn is_normal_in(&self, t: &GroupTable) -> bool {
        t.is_normal(&self.members)
    }

    /// Canonical order: by order, then by the sorted index list.
    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.order.cmp(&other.order).then_with(|| self.members.cmp_indices(&other.members))
    }
}

/// Greedy generating set: scan members in index order, keep those not yet
/// generated.
fn generating_set(t: &GroupTable, members: &Bits) -> Vec<usize> {
    let mut gens: Vec<usize> = Vec::new();
    let mut cur = Bits::from_indices(t.len(), [0]);
    let mut list = vec![0usize];
    for x in members.iter() {
        if !cur.contains(x) {
            cur = t.join(&cur, &list, &gens, &[x]);
            list = cur.to_vec();
            gens.push(x);
        }
    }
    gens
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Index into [`SubgroupLattice::all`] of the canonical representative
    /// (the least member in canonical order).
    pub representative: usize,
    /// Indices into `all` of every member of the class, ascending.
    pub members: Vec<usize>,
    pub core: Subgroup,
    /// `|G : H|` for the representative.
    pub index: usize,
}

impl SubgroupClass {
    pub fn length(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug)]
pub struct SubgroupLattice {
    /// Every subgroup exactly once, sorted canonically.
    pub all: Vec<Subgroup>,
    /// Conjugacy classes sorted by representative.
    pub classes: Vec<SubgroupClass>,
}

impl SubgroupLattice {
    pub fn representative(&self, class: usize) -> &Subgroup {
        &self.all[self.classes[class].representative]
    }

    /// Class records that are normal subgroups (class length one).
    pub fn normal_subgroups(&self) -> Vec<&Subgroup> {
        self.classes.iter().filter(|c| c.length() == 1).map(|c| &self.all[c.representative]).collect()
    }

    pub fn position(&self, s: &Subgroup) -> Option<usize> {
        self.all.binary_search_by(|x| x.canonical_cmp(s)).ok()
    }

    /// Rebuilds a lattice from per-subgroup generator lists and class
    /// membership (positions into the same list), as produced by
    /// [`Subgroup::generator_hints`] and [`SubgroupClass::members`].
    pub fn from_generators(t: &GroupTable, gens: &[Vec<usize>], classes: &[Vec<usize>]) -> Result<Self> {
        let mut seen = HashMap::new();
        let mut subs = Vec::with_capacity(gens.len());
        for (i, g) in gens.iter().enumerate() {
            if g.iter().any(|&x| x >= t.len()) {
                return Err(Error::InvalidParameter("generator index out of range".into()));
            }
            let bits = t.closure(g);
            if seen.insert(bits.clone(), i).is_some() {
                return Err(Error::InvalidParameter("duplicate subgroup".into()));
            }
            subs.push((bits, g.clone()));
        }
        let mut covered = vec![false; subs.len()];
        for m in classes.iter().flatten() {
            if *m >= subs.len() || core::mem::replace(&mut covered[*m], true) {
                return Err(Error::InvalidParameter("classes do not partition the subgroups".into()));
            }
        }
        if covered.iter().any(|c| !c) || classes.iter().any(|c| c.is_empty()) {
            return Err(Error::InvalidParameter("classes do not partition the subgroups".into()));
        }
        finish(t, subs, classes.to_vec())
    }
}

/// Limits for [`all_subgroups`].
pub struct LatticeOptions<'a> {
    pub max_group_order: usize,
    /// Polled between joins; returning true aborts with [`Error::Cancelled`].
    pub cancel: Option<&'a dyn Fn() -> bool>,
}

impl Default for LatticeOptions<'_> {
    fn default() -> Self {
        LatticeOptions { max_group_order: DEFAULT_MAX_GROUP_ORDER, cancel: None }
    }
}

/// Cyclic subgroups, one generator (the least index) per subgroup.
pub fn cyclic_subgroups(t: &GroupTable) -> Vec<(usize, Bits)> {
    let n = t.len();
    let mut seen = Bits::new(n);
    let mut out = Vec::new();
    for x in 0..n {
        if seen.contains(x) {
            continue;
        }
        let b = t.closure(&[x]);
        let ox = t.order_of(x);
        for y in b.iter() {
            if t.order_of(y) == ox {
                seen.insert(y);
            }
        }
        out.push((x, b));
    }
    out
}

struct Builder<'t> {
    t: &'t GroupTable,
    known: HashMap<Bits, usize>,
    subs: Vec<(Bits, Vec<usize>)>,
    classes: Vec<Vec<usize>>,
    queue: VecDeque<usize>,
}

impl Builder<'_> {
    /// Registers `bits` and all its conjugates as a new class; queues the
    /// first as representative for further joins.
    fn add_class(&mut self, bits: Bits, gens: Vec<usize>) {
        let t = self.t;
        let first = self.subs.len();
        self.known.insert(bits.clone(), first);
        self.subs.push((bits, gens));
        let mut members = vec![first];
        let mut k = 0;
        while k < members.len() {
            let s = members[k];
            k += 1;
            for &g in t.generators() {
                let g = g as usize;
                let (bits, gens) = &self.subs[s];
                let mut c = Bits::new(t.len());
                for x in bits.iter() {
                    c.insert(t.conj(x, g));
                }
                if self.known.contains_key(&c) {
                    continue;
                }
                let cg = gens.iter().map(|&x| t.conj(x, g)).collect();
                let id = self.subs.len();
                self.known.insert(c.clone(), id);
                self.subs.push((c, cg));
                members.push(id);
            }
        }
        self.classes.push(members);
        self.queue.push_back(first);
    }
}

/// Enumerates every subgroup of the group behind `t`.
pub fn all_subgroups(t: &GroupTable, opts: &LatticeOptions<'_>) -> Result<SubgroupLattice> {
    let n = t.len();
    if n > opts.max_group_order {
        return Err(Error::LatticeGuard { order: n, guard: opts.max_group_order });
    }
    let cyclic = cyclic_subgroups(t);
    let mut b = Builder { t, known: HashMap::new(), subs: Vec::new(), classes: Vec::new(), queue: VecDeque::new() };
    b.add_class(Bits::from_indices(n, [0]), Vec::new());
    while let Some(h) = b.queue.pop_front() {
        if let Some(cancel) = opts.cancel {
            if cancel() {
                return Err(Error::Cancelled);
            }
        }
        let (hbits, hgens) = b.subs[h].clone();
        if hbits.count() == n {
            continue;
        }
        let hlist = hbits.to_vec();
        for (x, _) in &cyclic {
            if hbits.contains(*x) {
                continue;
            }
            let j = t.join(&hbits, &hlist, &hgens, &[*x]);
            if b.known.contains_key(&j) {
                continue;
            }
            let mut gens = hgens.clone();
            gens.push(*x);
            b.add_class(j, gens);
        }
    }
    finish(t, b.subs, b.classes)
}

/// Canonical sort, representative choice, and per-class cores.
fn finish(t: &GroupTable, subs: Vec<(Bits, Vec<usize>)>, classes: Vec<Vec<usize>>) -> Result<SubgroupLattice> {
    let mut order: Vec<usize> = (0..subs.len()).collect();
    let wrapped: Vec<Subgroup> = subs.into_iter().map(|(b, g)| Subgroup::from_parts(b, g)).collect();
    order.sort_by(|&a, &b| wrapped[a].canonical_cmp(&wrapped[b]));
    let mut pos = vec![0usize; wrapped.len()];
    for (new, &old) in order.iter().enumerate() {
        pos[old] = new;
    }
    let mut slots: Vec<Option<Subgroup>> = wrapped.into_iter().map(Some).collect();
    let all: Vec<Subgroup> = order.iter().map(|&old| slots[old].take().unwrap()).collect();
    let mut out = Vec::with_capacity(classes.len());
    for members in classes {
        let mut m: Vec<usize> = members.into_iter().map(|old| pos[old]).collect();
        m.sort_unstable();
        let rep = m[0];
        let core = group_ops::core(t, &all[rep])?;
        let index = t.len() / all[rep].order();
        out.push(SubgroupClass { representative: rep, members: m, core, index });
    }
    out.sort_by_key(|c| c.representative);
    Ok(SubgroupLattice { all, classes: out })
}

/// Conjugacy classes as `(representative, length, core, index)` records.
pub fn subgroup_classes(lattice: &SubgroupLattice) -> Vec<(&Subgroup, usize, &Subgroup, usize)> {
    lattice.classes.iter().map(|c| (&lattice.all[c.representative], c.length(), &c.core, c.index)).collect()
}

/// Least index of a core-free subgroup, with the canonical representative of
/// the first class attaining it. `None` only if no subgroup is core-free,
/// which cannot happen for a finite group (the trivial subgroup always is);
/// kept as an option for lattices filtered by the caller.
pub fn min_index_core_free(lattice: &SubgroupLattice) -> Option<(usize, &Subgroup)> {
    lattice
        .classes
        .iter()
        .filter(|c| c.core.is_trivial())
        .min_by_key(|c| (c.index, c.representative))
        .map(|c| (c.index, &lattice.all[c.representative]))
}
