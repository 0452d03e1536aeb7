//! Structural constructions: products, coset actions and cores, quotients,
//! centers, normal closures, minimal normal subgroups, centralizers in the
//! symmetric group, abelian invariants, and invariant submodules of the
//! permutation module.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation, DEFAULT_ELEMENT_CAP};
use crate::subgroups::Subgroup;
use crate::table::GroupTable;

/// Direct product acting on the disjoint union of the two point sets, `G`
/// on `0..deg(G)` and `H` on the points after it.
pub fn direct_product(g: &PermGroup, h: &PermGroup) -> PermGroup {
    let d = g.degree() + h.degree();
    let mut gens: Vec<Permutation> = g.generators().iter().map(|p| p.embed(0, d)).collect();
    gens.extend(h.generators().iter().map(|p| p.embed(g.degree(), d)));
    let order = g.order() * h.order();
    PermGroup::with_known_order(d, gens, &order).expect("direct product order is multiplicative")
}

/// The action of `G` on the right cosets of `H`.
#[derive(Clone, Debug)]
pub struct CosetActionResult {
    pub action: PermGroup,
    /// Equals the core of `H`.
    pub kernel: Subgroup,
    /// Element index of the least element of each coset; coset `c` is `H·label[c]`.
    pub point_labels: Vec<usize>,
}

struct Cosets {
    coset_of: Vec<u32>,
    reps: Vec<usize>,
}

fn right_cosets(t: &GroupTable, h: &Subgroup) -> Result<Cosets> {
    if h.members().len() != t.len() || !h.contains(0) {
        return Err(Error::NotSubgroup("subgroup belongs to a different parent".into()));
    }
    let list = h.indices();
    let mut coset_of = vec![u32::MAX; t.len()];
    let mut reps = Vec::with_capacity(t.len() / h.order());
    for i in 0..t.len() {
        if coset_of[i] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(i);
        for &x in &list {
            coset_of[t.mul(x, i)] = c;
        }
    }
    Ok(Cosets { coset_of, reps })
}

/// Elements of `H` fixing every coset: `r·h·r⁻¹ ∈ H` for all representatives `r`.
fn coset_kernel(t: &GroupTable, h: &Subgroup, cosets: &Cosets) -> Subgroup {
    let mut k = Bits::new(t.len());
    for x in h.members().iter() {
        if cosets.reps.iter().enumerate().all(|(c, &r)| cosets.coset_of[t.mul(r, x)] as usize == c) {
            k.insert(x);
        }
    }
    Subgroup::from_bits_unchecked(t, k)
}

pub fn coset_action(t: &GroupTable, h: &Subgroup) -> Result<CosetActionResult> {
    let cosets = right_cosets(t, h)?;
    let m = cosets.reps.len();
    let gens: Vec<Permutation> = t
        .generators()
        .iter()
        .map(|&g| {
            let images = cosets.reps.iter().map(|&r| cosets.coset_of[t.mul(r, g as usize)]).collect();
            Permutation::from_images(images)
        })
        .collect::<Result<_>>()?;
    let kernel = coset_kernel(t, h, &cosets);
    let order = BigUint::from(t.len() / kernel.order());
    let action = PermGroup::with_known_order(m, gens, &order)?;
    Ok(CosetActionResult { action, kernel, point_labels: cosets.reps })
}

/// Largest normal subgroup of `G` inside `H`, computed as the kernel of the
/// coset action.
pub fn core(t: &GroupTable, h: &Subgroup) -> Result<Subgroup> {
    let cosets = right_cosets(t, h)?;
    Ok(coset_kernel(t, h, &cosets))
}

/// `G/N` in its regular representation on the cosets of `N`.
pub fn quotient_regular(t: &GroupTable, n: &Subgroup) -> Result<PermGroup> {
    if !n.is_normal_in(t) {
        return Err(Error::NotNormal);
    }
    let cosets = right_cosets(t, n)?;
    let gens: Vec<Permutation> = t
        .generators()
        .iter()
        .map(|&g| {
            let images = cosets.reps.iter().map(|&r| cosets.coset_of[t.mul(r, g as usize)]).collect();
            Permutation::from_images(images)
        })
        .collect::<Result<_>>()?;
    PermGroup::with_known_order(cosets.reps.len(), gens, &BigUint::from(cosets.reps.len()))
}

/// `G/N` for a normal subgroup given by its full element list, without
/// building a multiplication table (used for products too large to tabulate).
pub fn quotient_by_elements(g: &PermGroup, normal: &[Permutation], cap: usize) -> Result<PermGroup> {
    let base = g.base();
    let key = |p: &Permutation| -> Vec<u32> { base.iter().map(|&b| p.apply(b) as u32).collect() };
    let elements: Vec<Permutation> = g.elements(cap)?.collect();
    let index: HashMap<Vec<u32>, usize> = elements.iter().enumerate().map(|(i, e)| (key(e), i)).collect();
    let lookup = |p: &Permutation| index.get(&key(p)).copied().ok_or(Error::NotInGroup);
    for z in normal {
        lookup(z)?;
        for s in g.generators() {
            let c = s.inverse().then(z)?.then(s)?;
            if !normal.contains(&c) {
                return Err(Error::NotNormal);
            }
        }
    }
    let mut coset_of = vec![u32::MAX; elements.len()];
    let mut reps = Vec::new();
    for i in 0..elements.len() {
        if coset_of[i] != u32::MAX {
            continue;
        }
        let c = reps.len() as u32;
        reps.push(i);
        for z in normal {
            let j = lookup(&z.then_unchecked(&elements[i]))?;
            if coset_of[j] != u32::MAX {
                return Err(Error::NotSubgroup("normal element list is not a subgroup".into()));
            }
            coset_of[j] = c;
        }
    }
    let mut gens = Vec::new();
    for s in g.generators() {
        let mut images = Vec::with_capacity(reps.len());
        for &r in &reps {
            images.push(coset_of[lookup(&elements[r].then_unchecked(s))?]);
        }
        gens.push(Permutation::from_images(images)?);
    }
    PermGroup::with_known_order(reps.len(), gens, &BigUint::from(reps.len()))
}

pub fn center(t: &GroupTable) -> Subgroup {
    let gens = t.generators();
    let bits = Bits::from_indices(
        t.len(),
        (0..t.len()).filter(|&z| gens.iter().all(|&g| t.mul(z, g as usize) == t.mul(g as usize, z))),
    );
    Subgroup::from_bits_unchecked(t, bits)
}

/// Smallest normal subgroup containing the given element indices.
pub fn normal_closure_of(t: &GroupTable, s: &[usize]) -> Subgroup {
    let mut gens: Vec<usize> = s.iter().copied().filter(|&x| x != 0).collect();
    let mut bits = t.closure(&gens);
    loop {
        let mut grew = false;
        let mut k = 0;
        while k < gens.len() {
            let x = gens[k];
            k += 1;
            for &g in t.generators() {
                let c = t.conj(x, g as usize);
                if !bits.contains(c) {
                    let list = bits.to_vec();
                    bits = t.join(&bits, &list, &gens, &[c]);
                    gens.push(c);
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    Subgroup::from_parts(bits, gens)
}

pub fn normal_closure(t: &GroupTable, s: &[Permutation]) -> Result<Subgroup> {
    let idx = s.iter().map(|p| t.index_of(p).ok_or(Error::NotInGroup)).collect::<Result<Vec<_>>>()?;
    Ok(normal_closure_of(t, &idx))
}

/// Conjugacy class of an element, as a bitset.
pub fn conjugacy_class(t: &GroupTable, x: usize) -> Bits {
    let mut bits = Bits::from_indices(t.len(), [x]);
    let mut list = vec![x];
    let mut k = 0;
    while k < list.len() {
        let y = list[k];
        k += 1;
        for &g in t.generators() {
            let c = t.conj(y, g as usize);
            if bits.insert(c) {
                list.push(c);
            }
        }
    }
    bits
}

fn is_prime(n: usize) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Inclusion-minimal nontrivial normal subgroups, sorted canonically. Each is
/// the normal closure of any of its elements of prime order.
pub fn minimal_normal_subgroups(t: &GroupTable) -> Vec<Subgroup> {
    let mut done = Bits::new(t.len());
    let mut cands: Vec<Subgroup> = Vec::new();
    for x in 1..t.len() {
        if done.contains(x) || !is_prime(t.order_of(x)) {
            continue;
        }
        done.union_with(&conjugacy_class(t, x));
        let n = normal_closure_of(t, &[x]);
        if !cands.iter().any(|c| c.members() == n.members()) {
            cands.push(n);
        }
    }
    let mut out: Vec<Subgroup> = cands
        .iter()
        .filter(|n| !cands.iter().any(|m| m.order() < n.order() && m.is_subgroup_of(n)))
        .cloned()
        .collect();
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

/// Central product `G ∘ H` identifying `⟨zg⟩ ≤ Z(G)` with `⟨zh⟩ ≤ Z(H)` via
/// `zg ↦ zh`: the quotient of `G × H` by the anti-diagonal
/// `{(zg^k, zh^-k)}`, returned in its regular representation.
pub fn central_product(g: &PermGroup, h: &PermGroup, zg: &Permutation, zh: &Permutation) -> Result<PermGroup> {
    for (grp, z, name) in [(g, zg, "first"), (h, zh, "second")] {
        if !grp.contains(z)? {
            return Err(Error::CentralProduct(format!("{} central element is not in its group", name)));
        }
        for s in grp.generators() {
            if z.then(s)? != s.then(z)? {
                return Err(Error::CentralProduct(format!("{} element is not central", name)));
            }
        }
    }
    let (og, oh) = (zg.order(), zh.order());
    if og != oh {
        return Err(Error::CentralProduct(format!("central subgroups have orders {} and {}", og, oh)));
    }
    let prod = direct_product(g, h);
    let d = prod.degree();
    let zgi = zg.embed(0, d);
    let zhi = zh.inverse().embed(g.degree(), d);
    let gen = zgi.then(&zhi)?;
    let normal: Vec<Permutation> = (0..og).map(|k| gen.pow(k)).collect();
    let order = prod.order().to_usize().unwrap_or(usize::MAX);
    quotient_by_elements(&prod, &normal, order.max(DEFAULT_ELEMENT_CAP))
}

/// Full centralizer of a transitive group in the symmetric group on its
/// points. Every fixed point `β` of the stabilizer of point 0 gives the unique
/// centralizing element sending `0·g ↦ β·g`.
pub fn centralizer_in_sym(g: &PermGroup) -> Result<PermGroup> {
    let d = g.degree();
    if d == 0 {
        return Ok(PermGroup::trivial(0));
    }
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let stab = g.point_stabilizer(0)?;
    let fixed: Vec<usize> = (0..d).filter(|&b| stab.generators().iter().all(|s| s.apply(b) == b)).collect();
    // Schreier tree of point 0: parent[y] = (x, generator) with y = x·gen.
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; d];
    let mut order = vec![0usize];
    let mut seen = vec![false; d];
    seen[0] = true;
    let mut k = 0;
    while k < order.len() {
        let x = order[k];
        k += 1;
        for (gi, s) in g.generators().iter().enumerate() {
            let y = s.apply(x);
            if !seen[y] {
                seen[y] = true;
                parent[y] = Some((x, gi));
                order.push(y);
            }
        }
    }
    let mut gens = Vec::new();
    for &beta in &fixed {
        if beta == 0 {
            continue;
        }
        let mut images = vec![0u32; d];
        images[0] = beta as u32;
        for &y in &order[1..] {
            let (x, gi) = parent[y].unwrap();
            images[y] = g.generators()[gi].apply(images[x] as usize) as u32;
        }
        let c = Permutation::from_images(images)
            .map_err(|_| Error::Internal("centralizing map is not a bijection".into()))?;
        for s in g.generators() {
            if c.then(s)? != s.then(&c)? {
                return Err(Error::Internal("constructed element does not centralize".into()));
            }
        }
        gens.push(c);
    }
    PermGroup::with_known_order(d, gens, &BigUint::from(fixed.len()))
}

/// Primary invariants of a finite abelian group: the multiset of prime-power
/// orders of the cyclic factors, sorted by prime and then by decreasing power.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianType {
    pub factors: Vec<u64>,
}

impl AbelianType {
    pub fn new(mut factors: Vec<u64>) -> Result<Self> {
        for &f in &factors {
            if prime_power(f).is_none() {
                return Err(Error::InvalidParameter(format!("{} is not a prime power", f)));
            }
        }
        factors.sort_by_key(|&f| {
            let (p, k) = prime_power(f).unwrap();
            (p, core::cmp::Reverse(k))
        });
        Ok(AbelianType { factors })
    }

    pub fn order(&self) -> u64 {
        self.factors.iter().product()
    }
}

/// `(p, k)` with `q = p^k`, `k ≥ 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d)).unwrap();
    let mut r = q;
    let mut k = 0;
    while r.is_multiple_of(p) {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

pub fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            *out.entry(d).or_insert(0) += 1;
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

/// Abelian invariants from element-order counts: with
/// `d_k = log_p #{x : x^(p^k) = 1}`, the number of cyclic factors of order at
/// least `p^k` is `d_k - d_{k-1}`.
pub fn abelian_invariants(t: &GroupTable) -> Result<AbelianType> {
    if !t.is_abelian() {
        return Err(Error::NotAbelian);
    }
    let mut factors = Vec::new();
    for (&p, &e) in &factorize(t.len() as u64) {
        let mut d = vec![0u32];
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            let count = (0..t.len()).filter(|&x| pk.is_multiple_of(t.order_of(x) as u64)).count() as u64;
            let mut c = count;
            let mut lg = 0;
            while c > 1 {
                c /= p;
                lg += 1;
            }
            d.push(lg);
            if lg == e {
                break;
            }
        }
        let at_least: Vec<u32> = d.windows(2).map(|w| w[1] - w[0]).collect();
        for k in 0..at_least.len() {
            let exact = at_least[k] - at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..exact {
                factors.push(p.pow(k as u32 + 1));
            }
        }
    }
    AbelianType::new(factors)
}

/// Element-order histogram `order -> count`.
pub fn order_histogram(t: &GroupTable) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for x in 0..t.len() {
        *h.entry(t.order_of(x)).or_insert(0) += 1;
    }
    h
}

/// Cap on `p^n` for [`invariant_submodules`].
pub const MODULE_CAP: u64 = 1 << 20;

/// A subspace of `F_p^n`, stored by its reduced row echelon basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Submodule {
    pub n: usize,
    pub p: u32,
    basis: Vec<Vec<u32>>,
}

impl Submodule {
    fn from_vectors(n: usize, p: u32, vs: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut rows: Vec<Vec<u32>> = vs.into_iter().collect();
        rref(&mut rows, p);
        Submodule { n, p, basis: rows }
    }

    pub fn zero(n: usize, p: u32) -> Self {
        Submodule { n, p, basis: Vec::new() }
    }

    pub fn full(n: usize, p: u32) -> Self {
        Self::from_vectors(n, p, (0..n).map(|i| unit(n, i)))
    }

    /// `V = {(a, …, a)}`.
    pub fn constants(n: usize, p: u32) -> Self {
        Self::from_vectors(n, p, [vec![1; n]])
    }

    /// `U = {a : Σ aᵢ = 0}`, the deleted permutation module.
    pub fn sum_zero(n: usize, p: u32) -> Self {
        Self::from_vectors(n, p, (1..n).map(|i| {
            let mut v = vec![0; n];
            v[0] = 1;
            v[i] = p - 1;
            v
        }))
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<u32>] {
        &self.basis
    }

    pub fn join(&self, other: &Submodule) -> Submodule {
        Self::from_vectors(self.n, self.p, self.basis.iter().chain(&other.basis).cloned())
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.join(&Self::from_vectors(self.n, self.p, [v.to_vec()])).dimension() == self.dimension()
    }

    pub fn is_subspace_of(&self, other: &Submodule) -> bool {
        self.basis.iter().all(|v| other.contains(v))
    }

    pub fn intersection_dimension(&self, other: &Submodule) -> usize {
        self.dimension() + other.dimension() - self.join(other).dimension()
    }

    /// Every vector, in lexicographic order.
    pub fn vectors(&self) -> Vec<Vec<u32>> {
        let d = self.dimension();
        let total = (self.p as u64).pow(d as u32);
        let mut out = Vec::with_capacity(total as usize);
        for mut code in 0..total {
            let mut v = vec![0u32; self.n];
            for row in &self.basis {
                let c = (code % self.p as u64) as u32;
                code /= self.p as u64;
                for (x, r) in v.iter_mut().zip(row) {
                    *x = (*x + c * r) % self.p;
                }
            }
            out.push(v);
        }
        out.sort();
        out
    }

    /// Closed under the coordinate permutation `perm` (new[perm(i)] = old[i]).
    pub fn is_invariant_under(&self, perm: &Permutation) -> bool {
        self.basis.iter().all(|v| {
            let mut w = vec![0; self.n];
            for (i, &x) in v.iter().enumerate() {
                w[perm.apply(i)] = x;
            }
            self.contains(&w)
        })
    }
}

fn unit(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn inv_mod(a: u32, p: u32) -> u32 {
    (1..p).find(|&b| a * b % p == 1).unwrap()
}

fn rref(rows: &mut Vec<Vec<u32>>, p: u32) {
    let n = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for col in 0..n {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(r, piv);
        let s = inv_mod(rows[r][col], p);
        for x in rows[r].iter_mut() {
            *x = *x * s % p;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][col] != 0 {
                let f = rows[i][col];
                for c in 0..n {
                    rows[i][c] = (rows[i][c] + (p - f) * rows[r][c]) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
}

/// All submodules of the permutation module `F_p^n` invariant under `Alt(n)`
/// (or `Sym(n)` when `use_alt` is false), found by brute force: the span of
/// each vector orbit, then saturation under joins. Sorted by dimension, then
/// basis.
pub fn invariant_submodules(n: usize, p: u32, use_alt: bool) -> Result<Vec<Submodule>> {
    if !is_prime(p as usize) {
        return Err(Error::InvalidParameter(format!("{} is not prime", p)));
    }
    let size = (p as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    if size > MODULE_CAP {
        return Err(Error::ModuleCap { size, cap: MODULE_CAP });
    }
    let acting = if use_alt { PermGroup::alternating(n) } else { PermGroup::symmetric(n) };
    let gens = acting.generators().to_vec();
    let decode = |mut code: u64| -> Vec<u32> {
        let mut v = vec![0u32; n];
        for x in v.iter_mut() {
            *x = (code % p as u64) as u32;
            code /= p as u64;
        }
        v
    };
    let encode = |v: &[u32]| -> u64 { v.iter().rev().fold(0u64, |acc, &x| acc * p as u64 + x as u64) };
    let mut seen = vec![false; size as usize];
    let mut cyclic: Vec<Submodule> = Vec::new();
    for code in 1..size {
        if seen[code as usize] {
            continue;
        }
        let mut orbit = vec![decode(code)];
        seen[code as usize] = true;
        let mut k = 0;
        while k < orbit.len() {
            let v = orbit[k].clone();
            k += 1;
            for g in &gens {
                let mut w = vec![0u32; n];
                for (i, &x) in v.iter().enumerate() {
                    w[g.apply(i)] = x;
                }
                let c = encode(&w);
                if !seen[c as usize] {
                    seen[c as usize] = true;
                    orbit.push(w);
                }
            }
        }
        let m = Submodule::from_vectors(n, p, orbit);
        if !cyclic.contains(&m) {
            cyclic.push(m);
        }
    }
    let mut all: Vec<Submodule> = vec![Submodule::zero(n, p)];
    let mut k = 0;
    while k < all.len() {
        let cur = all[k].clone();
        k += 1;
        for c in &cyclic {
            let j = cur.join(c);
            if !all.contains(&j) {
                all.push(j);
            }
        }
    }
    all.sort_by(|a, b| a.dimension().cmp(&b.dimension()).then_with(|| a.basis.cmp(&b.basis)));
    Ok(all)
}

/// Names the standard members of an invariant-submodule list.
pub fn describe_submodule(m: &Submodule) -> alloc::string::String {
    let (n, p) = (m.n, m.p);
    if *m == Submodule::zero(n, p) {
        "0".to_string()
    } else if *m == Submodule::full(n, p) {
        "full".to_string()
    } else if *m == Submodule::constants(n, p) {
        "V".to_string()
    } else if *m == Submodule::sum_zero(n, p) {
        "U".to_string()
    } else {
        format!("extra(dim {}, basis {:?})", m.dimension(), m.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroups::Subgroup;

    fn perm(n: usize, s: &str) -> Permutation {
        Permutation::parse(s, n).unwrap()
    }

    fn q8() -> PermGroup {
        PermGroup::new(8, vec![perm(8, "(1,2,4,6)(3,8,7,5)"), perm(8, "(1,3,4,7)(2,5,6,8)")]).unwrap()
    }

    fn order(g: &PermGroup) -> u64 {
        g.order_u64().unwrap()
    }

    #[test]
    fn direct_products() {
        let c2 = PermGroup::cyclic(2);
        let v = direct_product(&c2, &c2);
        assert_eq!((v.degree(), order(&v)), (4, 4));
    }

    #[test]
    fn coset_action_examples() {
        let s4 = PermGroup::symmetric(4);
        let t = GroupTable::new(&s4).unwrap();
        let stab = s4.point_stabilizer(3).unwrap();
        let idx: Vec<usize> = stab.generators().iter().map(|g| t.index_of(g).unwrap()).collect();
        let h = Subgroup::generated(&t, &idx);
        let r = coset_action(&t, &h).unwrap();
        assert_eq!(r.action.degree(), 4);
        assert_eq!(order(&r.action), 24);
        assert!(r.kernel.is_trivial());

        let q = q8();
        let t = GroupTable::new(&q).unwrap();
        let i = t.index_of(&q.generators()[0]).unwrap();
        let h = Subgroup::generated(&t, &[i]);
        let r = coset_action(&t, &h).unwrap();
        assert_eq!(r.action.degree(), 2);
        assert_eq!(r.kernel, Subgroup::from_bits(&t, h.members().clone()).unwrap());
    }

    #[test]
    fn core_examples() {
        let s4 = PermGroup::symmetric(4);
        let t = GroupTable::new(&s4).unwrap();
        // dihedral Sylow 2-subgroup <(1,2,3,4), (1,3)>
        let d8 = Subgroup::generated(&t, &[t.index_of(&perm(4, "(1,2,3,4)")).unwrap(), t.index_of(&perm(4, "(1,3)")).unwrap()]);
        assert_eq!(d8.order(), 8);
        let c = core(&t, &d8).unwrap();
        assert_eq!(c.order(), 4);
        assert!(c.contains(t.index_of(&perm(4, "(1,2)(3,4)")).unwrap()));
        let whole = Subgroup::whole(&t);
        assert_eq!(core(&t, &whole).unwrap().members(), whole.members());
    }

    #[test]
    fn quotients() {
        let q = q8();
        let t = GroupTable::new(&q).unwrap();
        let z = center(&t);
        assert_eq!(z.order(), 2);
        let k = quotient_regular(&t, &z).unwrap();
        assert_eq!((k.degree(), order(&k)), (4, 4));
        let tt = GroupTable::new(&k).unwrap();
        assert!(tt.is_abelian());
        assert_eq!(abelian_invariants(&tt).unwrap().factors, vec![2, 2]);
        let reg = quotient_regular(&t, &Subgroup::trivial(&t)).unwrap();
        assert_eq!((reg.degree(), order(&reg)), (8, 8));
        let s3 = GroupTable::new(&PermGroup::symmetric(3)).unwrap();
        let c2 = Subgroup::generated(&s3, &[s3.index_of(&perm(3, "(1,2)")).unwrap()]);
        assert_eq!(quotient_regular(&s3, &c2).unwrap_err(), Error::NotNormal);
    }

    #[test]
    fn centers() {
        assert!(center(&GroupTable::new(&PermGroup::symmetric(3)).unwrap()).is_trivial());
    }

    #[test]
    fn normal_closures() {
        let s4 = PermGroup::symmetric(4);
        let t = GroupTable::new(&s4).unwrap();
        assert_eq!(normal_closure(&t, &[perm(4, "(1,2)")]).unwrap().order(), 24);
        assert_eq!(normal_closure(&t, &[perm(4, "(1,2)(3,4)")]).unwrap().order(), 4);
        assert_eq!(normal_closure(&t, &[Permutation::identity(4)]).unwrap().order(), 1);
        assert_eq!(normal_closure(&t, &[Permutation::identity(5)]).unwrap_err(), Error::NotInGroup);
    }

    #[test]
    fn minimal_normals() {
        let t = GroupTable::new(&q8()).unwrap();
        let m = minimal_normal_subgroups(&t);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 2);
        let c2 = PermGroup::cyclic(2);
        let t = GroupTable::new(&direct_product(&c2, &c2)).unwrap();
        let m = minimal_normal_subgroups(&t);
        assert_eq!(m.iter().map(|s| s.order()).collect::<Vec<_>>(), vec![2, 2, 2]);
        let t = GroupTable::new(&PermGroup::symmetric(4)).unwrap();
        let m = minimal_normal_subgroups(&t);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 4);
    }

    #[test]
    fn central_product_of_q8() {
        let q = q8();
        let z = q.generators()[0].pow(2);
        let qq = central_product(&q, &q, &z, &z).unwrap();
        assert_eq!(order(&qq), 32);
        let s3 = PermGroup::symmetric(3);
        assert!(central_product(&s3, &s3, &perm(3, "(1,2)"), &perm(3, "(1,2)")).is_err());
        let c4 = PermGroup::cyclic(4);
        let g = c4.generators()[0].clone();
        assert!(matches!(central_product(&q, &c4, &z, &g), Err(Error::CentralProduct(_))));
    }

    #[test]
    fn centralizers_in_sym() {
        let c6 = PermGroup::cyclic(6);
        assert_eq!(order(&centralizer_in_sym(&c6).unwrap()), 6);
        assert_eq!(order(&centralizer_in_sym(&PermGroup::symmetric(4)).unwrap()), 1);
        let intrans = PermGroup::new(4, vec![perm(4, "(1,2)")]).unwrap();
        assert_eq!(centralizer_in_sym(&intrans).unwrap_err(), Error::NotTransitive);
    }

    #[test]
    fn abelian_invariant_examples() {
        let t = GroupTable::new(&PermGroup::cyclic(12)).unwrap();
        assert_eq!(abelian_invariants(&t).unwrap().factors, vec![4, 3]);
        let c2 = PermGroup::cyclic(2);
        let g = direct_product(&direct_product(&c2, &c2), &c2);
        assert_eq!(abelian_invariants(&GroupTable::new(&g).unwrap()).unwrap().factors, vec![2, 2, 2]);
        let g = direct_product(&PermGroup::cyclic(4), &PermGroup::cyclic(6));
        assert_eq!(abelian_invariants(&GroupTable::new(&g).unwrap()).unwrap().factors, vec![4, 2, 3]);
        let s3 = GroupTable::new(&PermGroup::symmetric(3)).unwrap();
        assert_eq!(abelian_invariants(&s3).unwrap_err(), Error::NotAbelian);
    }

    #[test]
    fn permutation_module_small_cases() {
        let mods = invariant_submodules(5, 2, true).unwrap();
        let names: Vec<_> = mods.iter().map(describe_submodule).collect();
        assert_eq!(names, vec!["0", "V", "U", "full"]);
        assert_eq!(Submodule::constants(5, 2).intersection_dimension(&Submodule::sum_zero(5, 2)), 0);

        let mods = invariant_submodules(3, 2, false).unwrap();
        let u = Submodule::sum_zero(3, 2);
        assert_eq!(u.dimension(), 2);
        assert!(mods.contains(&u));
        assert!(mods.iter().all(|m| m.is_invariant_under(&perm(3, "(1,2)"))));

        assert!(matches!(invariant_submodules(21, 2, true), Err(Error::ModuleCap { .. })));
    }

    #[test]
    fn submodule_vectors() {
        let u = Submodule::sum_zero(3, 3);
        let vs = u.vectors();
        assert_eq!(vs.len(), 9);
        assert!(vs.iter().all(|v| v.iter().sum::<u32>() % 3 == 0));
    }
}
