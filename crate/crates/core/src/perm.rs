//! Permutations and the stabilizer-chain engine.
//!
//! Composition runs left to right everywhere in this crate: `p.then(&q)`
//! applies `p` first and `q` second, so point `i` goes to `q[p[i]]`.
//! Groups act on the right and a point `i` under `g` is `g.apply(i)`.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};

/// Default cap on the number of elements `PermGroup::elements` will produce.
pub const DEFAULT_ELEMENT_CAP: usize = 20_000;

/// A permutation of `0..degree` stored as its image table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds a permutation from an image table, checking bijectivity.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!("image table {:?} is not a bijection", images)));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation from 0-indexed disjoint (or not) cycles; cycles are
    /// applied left to right.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut p = Permutation::identity(degree);
        for c in cycles {
            let mut seen = Vec::with_capacity(c.len());
            for &x in c {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if seen.contains(&x) {
                    return Err(Error::InvalidPermutation(format!("point {} repeated in cycle", x + 1)));
                }
                seen.push(x);
            }
            let mut cyc = Permutation::identity(degree);
            for i in 0..c.len() {
                cyc.images[c[i]] = c[(i + 1) % c.len()] as u32;
            }
            p = p.then(&cyc)?;
        }
        Ok(p)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `q`.
    pub fn then(&self, q: &Permutation) -> Result<Permutation> {
        if self.degree() != q.degree() {
            return Err(Error::DegreeMismatch { expected: self.degree(), found: q.degree() });
        }
        Ok(self.then_unchecked(q))
    }

    #[inline]
    pub(crate) fn then_unchecked(&self, q: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&x| q.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, mut e: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then_unchecked(&base);
            }
            base = base.then_unchecked(&base);
            e >>= 1;
        }
        acc
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|&(i, &x)| i as u32 != x).map(|(i, _)| i)
    }

    /// Disjoint cycles of length > 1, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut c = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    /// Element order (lcm of cycle lengths).
    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| num_integer::lcm(acc, c.len() as u64))
    }

    /// Extends the permutation to a larger degree by fixing the new points,
    /// shifting the existing points by `offset`.
    pub fn embed(&self, offset: usize, degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[i + offset] = x + offset as u32;
        }
        Permutation { images }
    }

    /// 1-indexed disjoint cycle notation, `()` for the identity.
    pub fn to_cycle_string(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return String::from("()");
        }
        let mut s = String::new();
        for c in cycles {
            s.push('(');
            for (k, x) in c.iter().enumerate() {
                if k > 0 {
                    s.push(',');
                }
                s.push_str(&format!("{}", x + 1));
            }
            s.push(')');
        }
        s
    }

    /// Parses 1-indexed cycle notation (`(1,2,3)(4,5)`, commas or spaces) or an
    /// image table (`[2,3,1]`, 1-indexed).
    pub fn parse(text: &str, degree: usize) -> Result<Permutation> {
        let t = text.trim();
        if let Some(body) = t.strip_prefix('[') {
            let body = body
                .strip_suffix(']')
                .ok_or_else(|| Error::InvalidPermutation(format!("unterminated image table: {}", t)))?;
            let images = parse_numbers(body)?
                .into_iter()
                .map(|x| x.checked_sub(1).map(|v| v as u32))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::InvalidPermutation(String::from("image table entries are 1-indexed")))?;
            if images.len() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: images.len() });
            }
            return Permutation::from_images(images);
        }
        let mut cycles = Vec::new();
        let mut rest = t;
        while !rest.is_empty() {
            let r = rest.trim_start();
            if r.is_empty() {
                break;
            }
            let r = r
                .strip_prefix('(')
                .ok_or_else(|| Error::InvalidPermutation(format!("expected '(' in {}", t)))?;
            let close = r
                .find(')')
                .ok_or_else(|| Error::InvalidPermutation(format!("unterminated cycle in {}", t)))?;
            let pts = parse_numbers(&r[..close])?;
            let mut c = Vec::with_capacity(pts.len());
            for x in pts {
                if x == 0 {
                    return Err(Error::InvalidPermutation(String::from("cycle points are 1-indexed")));
                }
                c.push(x - 1);
            }
            cycles.push(c);
            rest = &r[close + 1..];
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

fn parse_numbers(s: &str) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|x| !x.is_empty())
        .map(|x| x.parse::<usize>().map_err(|_| Error::InvalidPermutation(format!("bad point '{}'", x))))
        .collect()
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    /// Indices into `Chain::strong` of the generators fixing all earlier base points.
    gens: Vec<usize>,
    /// Orbit of `base` in discovery order.
    orbit: Vec<usize>,
    /// `transversal[β]` maps `base` to `β`.
    transversal: Vec<Option<Permutation>>,
}

#[derive(Clone, Debug)]
struct Chain {
    degree: usize,
    strong: Vec<Permutation>,
    levels: Vec<Level>,
}

impl Chain {
    fn rebuild_orbit(&mut self, l: usize) {
        let degree = self.degree;
        let level = &mut self.levels[l];
        let b = level.base;
        let mut transversal: Vec<Option<Permutation>> = vec![None; degree];
        transversal[b] = Some(Permutation::identity(degree));
        let mut orbit = vec![b];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k];
            k += 1;
            for &gi in &level.gens {
                let g = &self.strong[gi];
                let y = g.apply(x);
                if transversal[y].is_none() {
                    let ux = transversal[x].as_ref().unwrap();
                    transversal[y] = Some(ux.then_unchecked(g));
                    orbit.push(y);
                }
            }
        }
        level.orbit = orbit;
        level.transversal = transversal;
    }

    /// Sifts `h` through levels `from..`; returns the residue and the level at
    /// which sifting stopped (`levels.len()` if it passed every level).
    fn sift(&self, mut h: Permutation, from: usize) -> (Permutation, usize) {
        for l in from..self.levels.len() {
            let level = &self.levels[l];
            let beta = h.apply(level.base);
            match &level.transversal[beta] {
                Some(u) => h = h.then_unchecked(&u.inverse()),
                None => return (h, l),
            }
        }
        let n = self.levels.len();
        (h, n)
    }

    fn order(&self) -> BigUint {
        self.levels.iter().fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    fn add_base_point(&mut self, b: usize) {
        self.levels.push(Level { base: b, gens: Vec::new(), orbit: vec![b], transversal: Vec::new() });
        let l = self.levels.len() - 1;
        self.rebuild_orbit(l);
    }

    fn build(degree: usize, gens: &[Permutation], prefix: &[usize], known_order: Option<&BigUint>) -> Chain {
        let mut chain = Chain { degree, strong: Vec::new(), levels: Vec::new() };
        for &b in prefix {
            chain.add_base_point(b);
        }
        for g in gens {
            if g.is_identity() || chain.strong.contains(g) {
                continue;
            }
            chain.strong.push(g.clone());
            if chain.levels.iter().all(|l| g.apply(l.base) == l.base) {
                let b = g.first_moved().unwrap();
                chain.add_base_point(b);
            }
        }
        // Assign strong generators to levels.
        for l in 0..chain.levels.len() {
            let fixed: Vec<usize> = chain.levels[..l].iter().map(|lv| lv.base).collect();
            chain.levels[l].gens = (0..chain.strong.len())
                .filter(|&i| fixed.iter().all(|&b| chain.strong[i].apply(b) == b))
                .collect();
            chain.rebuild_orbit(l);
        }
        if chain.levels.is_empty() {
            return chain;
        }
        let done = |c: &Chain| known_order.is_some_and(|o| &c.order() == o);
        if done(&chain) {
            return chain;
        }
        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let l = i as usize;
            let mut residue = None;
            'scan: for oi in 0..chain.levels[l].orbit.len() {
                let beta = chain.levels[l].orbit[oi];
                for gk in 0..chain.levels[l].gens.len() {
                    let s = &chain.strong[chain.levels[l].gens[gk]];
                    let img = s.apply(beta);
                    let u_beta = chain.levels[l].transversal[beta].as_ref().unwrap();
                    let u_img = chain.levels[l].transversal[img].as_ref().unwrap();
                    let us = u_beta.then_unchecked(s);
                    if &us == u_img {
                        continue;
                    }
                    let schreier = us.then_unchecked(&u_img.inverse());
                    let (h, j) = chain.sift(schreier, l + 1);
                    if j < chain.levels.len() || !h.is_identity() {
                        residue = Some((h, j));
                        break 'scan;
                    }
                }
            }
            match residue {
                None => i -= 1,
                Some((h, j)) => {
                    let mut j = j;
                    if j == chain.levels.len() {
                        let b = h.first_moved().unwrap();
                        chain.add_base_point(b);
                        j = chain.levels.len() - 1;
                    }
                    chain.strong.push(h);
                    let gi = chain.strong.len() - 1;
                    for m in (l + 1)..=j {
                        chain.levels[m].gens.push(gi);
                        chain.rebuild_orbit(m);
                    }
                    if done(&chain) {
                        return chain;
                    }
                    i = j as isize;
                }
            }
        }
        chain
    }
}

/// A permutation group given by generators, with its stabilizer chain built
/// at construction time. Immutable afterwards.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: Chain,
}

impl PermGroup {
    /// Builds the group generated by `gens` on `degree` points.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self> {
        Self::build(degree, gens, &[], None)
    }

    /// Like [`PermGroup::new`], but stops the chain construction as soon as the
    /// basic orbit lengths multiply to `order`. Only sound when `order` is the
    /// true group order.
    pub fn with_known_order(degree: usize, gens: Vec<Permutation>, order: &BigUint) -> Result<Self> {
        let g = Self::build(degree, gens, &[], Some(order))?;
        if &g.order() != order {
            return Err(Error::Internal(format!("chain order {} differs from the stated order {}", g.order(), order)));
        }
        Ok(g)
    }

    fn build(degree: usize, gens: Vec<Permutation>, prefix: &[usize], known: Option<&BigUint>) -> Result<Self> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        let chain = Chain::build(degree, &gens, prefix, known);
        Ok(PermGroup { degree, generators: gens, chain })
    }

    pub fn trivial(degree: usize) -> Self {
        PermGroup { degree, generators: Vec::new(), chain: Chain { degree, strong: Vec::new(), levels: Vec::new() } }
    }

    /// Symmetric group on `n` points, generated by adjacent transpositions.
    pub fn symmetric(n: usize) -> Self {
        let gens = (0..n.saturating_sub(1))
            .map(|i| Permutation::from_cycles(n, &[vec![i, i + 1]]).unwrap())
            .collect();
        PermGroup::new(n, gens).unwrap()
    }

    /// Alternating group on `n` points, generated by the 3-cycles `(0 1 k)`.
    pub fn alternating(n: usize) -> Self {
        let gens = (2..n).map(|k| Permutation::from_cycles(n, &[vec![0, 1, k]]).unwrap()).collect();
        PermGroup::new(n, gens).unwrap()
    }

    /// Cyclic group of order `n` in its regular representation.
    pub fn cyclic(n: usize) -> Self {
        if n <= 1 {
            return PermGroup::trivial(n);
        }
        let images = (0..n as u32).map(|i| (i + 1) % n as u32).collect();
        PermGroup::new(n, vec![Permutation::from_images_unchecked(images)]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Strong generating set produced by the chain.
    pub fn strong_generators(&self) -> &[Permutation] {
        &self.chain.strong
    }

    pub fn base(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.base).collect()
    }

    /// Lengths of the basic orbits; their product is the group order.
    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.chain.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> BigUint {
        self.chain.order()
    }

    /// Order as a machine integer, when it fits.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().to_u64()
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch { expected: self.degree, found: p.degree() });
        }
        let (h, j) = self.chain.sift(p.clone(), 0);
        Ok(j == self.chain.levels.len() && h.is_identity())
    }

    /// True when every generator of `other` lies in `self`.
    pub fn contains_group(&self, other: &PermGroup) -> Result<bool> {
        for g in other.generators() {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Orbit partition of the points, each block sorted, blocks ordered by
    /// their least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for start in 0..self.degree {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut orb = vec![start];
            let mut k = 0;
            while k < orb.len() {
                let x = orb[k];
                k += 1;
                for g in &self.generators {
                    let y = g.apply(x);
                    if !seen[y] {
                        seen[y] = true;
                        orb.push(y);
                    }
                }
            }
            orb.sort_unstable();
            out.push(orb);
        }
        out
    }

    pub fn orbit_of(&self, point: usize) -> Vec<usize> {
        self.orbits().into_iter().find(|o| o.contains(&point)).unwrap_or_default()
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbits().len() == 1
    }

    /// Subgroup fixing `point`.
    pub fn point_stabilizer(&self, point: usize) -> Result<PermGroup> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange { point, degree: self.degree });
        }
        if self.generators.iter().all(|g| g.apply(point) == point) {
            return Ok(self.clone());
        }
        let order = self.order();
        let chain = Chain::build(self.degree, &self.chain.strong, &[point], Some(&order));
        // With a complete chain, the strong generators fixing the first base
        // point generate its stabilizer.
        let stab_gens: Vec<Permutation> = chain.strong.iter().filter(|g| g.apply(point) == point).cloned().collect();
        let stab_order = &order / BigUint::from(chain.levels[0].orbit.len());
        PermGroup::with_known_order(self.degree, stab_gens, &stab_order)
    }

    /// All elements, each exactly once, in a deterministic order fixed by the
    /// chain. Fails if the order exceeds `cap`.
    pub fn elements(&self, cap: usize) -> Result<Elements<'_>> {
        let order = self.order();
        match order.to_usize() {
            Some(n) if n <= cap => Ok(Elements::new(self)),
            _ => Err(Error::EnumerationCap { order: order.to_u128().unwrap_or(u128::MAX), cap }),
        }
    }

    /// Random-ish word in the generators driven by `seed`, for property tests.
    pub fn word(&self, choices: &[usize]) -> Permutation {
        let mut p = self.identity();
        if self.generators.is_empty() {
            return p;
        }
        for &c in choices {
            p = p.then_unchecked(&self.generators[c % self.generators.len()]);
        }
        p
    }
}

/// Streaming enumeration of a group's elements as products of transversal
/// elements, deepest level first.
pub struct Elements<'a> {
    group: &'a PermGroup,
    /// Current position in each level's orbit list.
    idx: Vec<usize>,
    /// `partial[l]` is the product of the chosen transversal elements of levels
    /// `l..` (deepest applied first).
    partial: Vec<Permutation>,
    done: bool,
}

impl<'a> Elements<'a> {
    fn new(group: &'a PermGroup) -> Self {
        let k = group.chain.levels.len();
        let mut e = Elements { group, idx: vec![0; k], partial: vec![group.identity(); k + 1], done: false };
        if k > 0 {
            e.refresh_from(k - 1);
        }
        e
    }

    fn refresh_from(&mut self, top: usize) {
        for l in (0..=top).rev() {
            let level = &self.group.chain.levels[l];
            let beta = level.orbit[self.idx[l]];
            let u = level.transversal[beta].as_ref().unwrap();
            self.partial[l] = self.partial[l + 1].then_unchecked(u);
        }
    }
}

impl Iterator for Elements<'_> {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let k = self.idx.len();
        let out = self.partial[0].clone();
        // advance odometer, level 0 fastest
        let mut l = 0;
        loop {
            if l == k {
                self.done = true;
                break;
            }
            self.idx[l] += 1;
            if self.idx[l] < self.group.chain.levels[l].orbit.len() {
                self.refresh_from(l);
                break;
            }
            self.idx[l] = 0;
            l += 1;
        }
        Some(out)
    }
}
