//! Reference answers computed without the class reduction or the
//! minimal-normal-subgroup cover used by the library.

use std::collections::HashMap;

use mindeg_core::bits::Bits;
use mindeg_core::{GroupTable, Subgroup};

/// Intersection of all conjugates of `h`, one conjugate per group element.
pub fn brute_core(t: &GroupTable, h: &Subgroup) -> Bits {
    let mut k = h.members().clone();
    for g in 0..t.len() {
        let mut c = Bits::new(t.len());
        for x in h.members().iter() {
            c.insert(t.conj(x, g));
        }
        k.intersect_with(&c);
    }
    k
}

/// Least total index of a family of subgroups (drawn from `subs`, each at
/// most once) whose cores meet trivially. Exhaustive include/exclude over
/// every subgroup, memoized on the running kernel.
pub fn exhaustive_mu(t: &GroupTable, subs: &[Subgroup]) -> usize {
    let cores: Vec<Bits> = subs.iter().map(|h| brute_core(t, h)).collect();
    let index: Vec<usize> = subs.iter().map(|h| t.len() / h.order()).collect();
    let mut memo = HashMap::new();
    let full = Bits::full(t.len());
    go(&cores, &index, 0, &full, &mut memo)
}

fn go(cores: &[Bits], index: &[usize], i: usize, kernel: &Bits, memo: &mut HashMap<(usize, Bits), usize>) -> usize {
    if kernel.count() == 1 {
        return 0;
    }
    if i == cores.len() {
        return usize::MAX;
    }
    if let Some(&v) = memo.get(&(i, kernel.clone())) {
        return v;
    }
    let skip = go(cores, index, i + 1, kernel, memo);
    let next = kernel.intersection(&cores[i]);
    let take = go(cores, index, i + 1, &next, memo).saturating_add(index[i]);
    let v = skip.min(take);
    memo.insert((i, kernel.clone()), v);
    v
}
