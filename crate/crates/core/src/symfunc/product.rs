//! Products of monomial symmetric functions by orbit convolution.
//!
//! The coefficient of `m_ν` in `m_α m_β` is the number of pairs of
//! exponent vectors `(a, b)` of length `l(ν)`, `a` a rearrangement of `α`
//! and `b` of `β` (both padded with zeros), with `a + b = ν`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::arith::Integer;
use crate::partition::{for_each_parts, Partition};

type Multiset = Vec<(u32, u32)>;

fn multiset(parts: &[u32], zeros: usize) -> Multiset {
    let mut out: Multiset = Vec::new();
    if zeros > 0 {
        out.push((0, zeros as u32));
    }
    for &p in parts {
        match out.iter_mut().find(|(v, _)| *v == p) {
            Some((_, c)) => *c += 1,
            None => out.push((p, 1)),
        }
    }
    out
}

fn count_splits(target: &[u32], left: &mut Multiset, right: &mut Multiset) -> u64 {
    let Some((&t, rest)) = target.split_first() else {
        return 1;
    };
    let mut total = 0;
    for i in 0..right.len() {
        let (v, c) = right[i];
        if c == 0 || v > t {
            continue;
        }
        let w = t - v;
        let Some(j) = left.iter().position(|&(u, c2)| u == w && c2 > 0) else {
            continue;
        };
        right[i].1 -= 1;
        left[j].1 -= 1;
        total += count_splits(rest, left, right);
        right[i].1 += 1;
        left[j].1 += 1;
    }
    total
}

fn compute(a: &Partition, b: &Partition) -> Vec<(Partition, Integer)> {
    let n = a.weight() + b.weight();
    let lo = a.len().max(b.len());
    let hi = a.len() + b.len();
    let mut out = Vec::new();
    for_each_parts(n, |nu| {
        let l = nu.len();
        if l < lo || l > hi {
            return;
        }
        let mut left = multiset(a.parts(), l - a.len());
        let mut right = multiset(b.parts(), l - b.len());
        let c = count_splits(nu, &mut left, &mut right);
        if c > 0 {
            out.push((Partition::new(nu.to_vec()).expect("canonical parts"), Integer::from(c)));
        }
    });
    out
}

type ProductCache = RwLock<HashMap<(Partition, Partition), Arc<Vec<(Partition, Integer)>>>>;

fn cache() -> &'static ProductCache {
    static CACHE: OnceLock<ProductCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `m_a · m_b` as `(ν, coefficient)` pairs in canonical order of `ν`.
pub fn monomial_product(a: &Partition, b: &Partition) -> Arc<Vec<(Partition, Integer)>> {
    let key = if a <= b {
        (a.clone(), b.clone())
    } else {
        (b.clone(), a.clone())
    };
    if let Some(hit) = cache().read().expect("cache poisoned").get(&key) {
        return Arc::clone(hit);
    }
    let value = Arc::new(compute(&key.0, &key.1));
    // racing writers produce identical values
    cache()
        .write()
        .expect("cache poisoned")
        .entry(key)
        .or_insert(value)
        .clone()
}
