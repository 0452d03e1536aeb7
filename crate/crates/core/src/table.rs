//! Enumerated groups with a full multiplication table.
//!
//! Elements are identified by their images of the chain's base points. The
//! element order is fixed: identity at index 0, then every other element in
//! lexicographic order of its base images. Subgroup bitsets and serialized
//! index lists all refer to this order.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;
use num_traits::ToPrimitive;

use crate::bits::Bits;
use crate::error::{Error, Result};
use crate::perm::{PermGroup, Permutation, DEFAULT_ELEMENT_CAP};

enum KeyIndex {
    /// Base of length one: the image of the single base point identifies the element.
    Direct(Vec<u32>),
    Packed { shift: u32, map: HashMap<u64, u32> },
    Wide(HashMap<Vec<u32>, u32>),
}

pub struct GroupTable {
    group: PermGroup,
    base: Vec<usize>,
    n: usize,
    /// `keys[i * base.len() .. (i + 1) * base.len()]` are the base images of element `i`.
    keys: Vec<u32>,
    index: KeyIndex,
    mul: Vec<u16>,
    inv: Vec<u32>,
    orders: Vec<u32>,
    gens: Vec<u32>,
}

impl GroupTable {
    pub fn new(group: &PermGroup) -> Result<Self> {
        Self::with_cap(group, DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(group: &PermGroup, cap: usize) -> Result<Self> {
        let order = group.order();
        let n = match order.to_usize() {
            Some(n) if n <= cap && n <= u16::MAX as usize + 1 => n,
            _ => return Err(Error::EnumerationCap { order: order.to_u128().unwrap_or(u128::MAX), cap }),
        };
        let base = group.base();
        let b = base.len();
        let mut raw: Vec<Vec<u32>> = Vec::with_capacity(n);
        for g in group.elements(cap)? {
            raw.push(base.iter().map(|&x| g.apply(x) as u32).collect());
        }
        let id_key: Vec<u32> = base.iter().map(|&x| x as u32).collect();
        raw.sort_unstable_by(|x, y| (x != &id_key).cmp(&(y != &id_key)).then_with(|| x.cmp(y)));
        let mut keys = Vec::with_capacity(n * b);
        for k in &raw {
            keys.extend_from_slice(k);
        }
        let index = build_index(&raw, group.degree());
        drop(raw);
        let mut t = GroupTable {
            group: group.clone(),
            base,
            n,
            keys,
            index,
            mul: vec![0; n * n],
            inv: vec![0; n],
            orders: vec![0; n],
            gens: Vec::new(),
        };
        // Column-by-column fill: the key of a*g is g applied to the key of a.
        let mut buf = vec![0u32; b];
        for g in group.elements(cap)? {
            let gi = t.lookup_key(&t.base.iter().map(|&x| g.apply(x) as u32).collect::<Vec<_>>()).unwrap();
            for a in 0..n {
                for (s, slot) in buf.iter_mut().enumerate() {
                    *slot = g.apply(t.keys[a * b + s] as usize) as u32;
                }
                let p = t.lookup_key(&buf).ok_or_else(|| Error::Internal("product left the group".into()))?;
                t.mul[a * n + gi] = p as u16;
            }
        }
        for a in 0..n {
            for c in 0..n {
                if t.mul[a * n + c] == 0 {
                    t.inv[a] = c as u32;
                    break;
                }
            }
        }
        for a in 0..n {
            let (mut x, mut k) = (a, 1);
            while x != 0 {
                x = t.mul(x, a);
                k += 1;
            }
            t.orders[a] = k;
        }
        let mut gens = Vec::new();
        for g in group.generators() {
            let i = t.index_of(g).ok_or(Error::Internal("generator not enumerated".into()))?;
            if i != 0 && !gens.contains(&(i as u32)) {
                gens.push(i as u32);
            }
        }
        t.gens = gens;
        Ok(t)
    }

    fn lookup_key(&self, key: &[u32]) -> Option<usize> {
        match &self.index {
            KeyIndex::Direct(v) => {
                let i = v[key[0] as usize];
                (i != u32::MAX).then_some(i as usize)
            }
            KeyIndex::Packed { shift, map } => map.get(&pack(key, *shift)).map(|&i| i as usize),
            KeyIndex::Wide(map) => map.get(key).map(|&i| i as usize),
        }
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `g⁻¹ x g`.
    #[inline]
    pub fn conj(&self, x: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), x), g)
    }

    #[inline]
    pub fn order_of(&self, a: usize) -> usize {
        self.orders[a] as usize
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        let mut r = 0;
        for _ in 0..e {
            r = self.mul(r, a);
        }
        r
    }

    /// Indices of the defining generators (identity and duplicates dropped).
    pub fn generators(&self) -> &[u32] {
        &self.gens
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        if p.degree() != self.group.degree() {
            return None;
        }
        let key: Vec<u32> = self.base.iter().map(|&x| p.apply(x) as u32).collect();
        let i = self.lookup_key(&key)?;
        self.group.contains(p).ok()?.then_some(i)
    }

    /// Reconstructs element `i` as a permutation by sifting its base images.
    pub fn element(&self, i: usize) -> Permutation {
        let b = self.base.len();
        let key = &self.keys[i * b..(i + 1) * b];
        // g is determined by its base images: peel transversal factors off the
        // left until every base point is fixed.
        let strong = self.group.strong_generators();
        let mut acc = Permutation::identity(self.group.degree());
        let mut cur: Vec<u32> = key.to_vec();
        for (l, &bp) in self.base.iter().enumerate() {
            let target = cur[l] as usize;
            if target == bp {
                continue;
            }
            let u = transversal_element(strong, &self.base[..l], bp, target, self.group.degree());
            let uinv = u.inverse();
            for c in cur.iter_mut() {
                *c = uinv.apply(*c as usize) as u32;
            }
            acc = u.then_unchecked(&acc);
        }
        acc
    }

    /// Smallest subgroup containing the given elements, as a bitset.
    pub fn closure(&self, gens: &[usize]) -> Bits {
        let mut bits = Bits::new(self.n);
        bits.insert(0);
        let mut elems = vec![0usize];
        let gens: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        let mut k = 0;
        while k < elems.len() {
            let x = elems[k];
            k += 1;
            for &g in &gens {
                let y = self.mul(x, g);
                if bits.insert(y) {
                    elems.push(y);
                }
            }
        }
        bits
    }

    /// Extends a subgroup (given by its members and generators) by further
    /// elements, adding whole right cosets at a time.
    pub fn join(&self, members: &Bits, member_list: &[usize], sub_gens: &[usize], extra: &[usize]) -> Bits {
        let mut bits = members.clone();
        let mut reps = vec![0usize];
        let gens: Vec<usize> = sub_gens.iter().chain(extra).copied().collect();
        let mut k = 0;
        while k < reps.len() {
            let r = reps[k];
            k += 1;
            for &s in &gens {
                let y = self.mul(r, s);
                if !bits.contains(y) {
                    for &h in member_list {
                        bits.insert(self.mul(h, y));
                    }
                    reps.push(y);
                }
            }
        }
        bits
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.gens;
        g.iter().all(|&a| g.iter().all(|&b| self.mul(a as usize, b as usize) == self.mul(b as usize, a as usize)))
    }

    /// True if `bits` is a subgroup (nonempty, closed under products).
    pub fn is_subgroup(&self, bits: &Bits) -> bool {
        if bits.len() != self.n || !bits.contains(0) {
            return false;
        }
        let list = bits.to_vec();
        list.iter().all(|&a| list.iter().all(|&b| bits.contains(self.mul(a, b))))
    }

    /// True if every conjugate of a member by a generator stays inside.
    pub fn is_normal(&self, bits: &Bits) -> bool {
        bits.iter().all(|x| self.gens.iter().all(|&g| bits.contains(self.conj(x, g as usize))))
    }
}

fn transversal_element(strong: &[Permutation], fixed: &[usize], from: usize, to: usize, degree: usize) -> Permutation {
    // BFS over the orbit of `from` under the strong generators fixing `fixed`.
    let gens: Vec<&Permutation> = strong.iter().filter(|g| fixed.iter().all(|&b| g.apply(b) == b)).collect();
    let mut tr: Vec<Option<Permutation>> = vec![None; degree];
    tr[from] = Some(Permutation::identity(degree));
    let mut queue = vec![from];
    let mut k = 0;
    while k < queue.len() {
        let x = queue[k];
        k += 1;
        if x == to {
            break;
        }
        for g in &gens {
            let y = g.apply(x);
            if tr[y].is_none() {
                tr[y] = Some(tr[x].as_ref().unwrap().then_unchecked(g));
                queue.push(y);
            }
        }
    }
    tr[to].take().expect("base image outside the basic orbit")
}

fn pack(key: &[u32], shift: u32) -> u64 {
    key.iter().fold(0u64, |acc, &k| (acc << shift) | k as u64)
}

fn build_index(raw: &[Vec<u32>], degree: usize) -> KeyIndex {
    let b = raw.first().map_or(0, |k| k.len());
    if b == 1 {
        let mut v = vec![u32::MAX; degree];
        for (i, k) in raw.iter().enumerate() {
            v[k[0] as usize] = i as u32;
        }
        return KeyIndex::Direct(v);
    }
    let shift = usize::BITS - degree.max(1).leading_zeros();
    if (shift as usize) * b <= 64 {
        let map = raw.iter().enumerate().map(|(i, k)| (pack(k, shift), i as u32)).collect();
        KeyIndex::Packed { shift, map }
    } else {
        KeyIndex::Wide(raw.iter().enumerate().map(|(i, k)| (k.clone(), i as u32)).collect())
    }
}
