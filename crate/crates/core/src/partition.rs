//! Integer partitions, the index set for every basis and every sum.
//!
//! The canonical order is descending lexicographic on the part list:
//! `(3), (2,1), (1,1,1)`. [`Partition`]'s `Ord` is plain lexicographic, so
//! canonical order is `Ord` reversed.

use std::fmt;

use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, Integer};
use crate::error::{Error, Result};

/// A weakly decreasing tuple of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if ok {
            Ok(Partition(parts))
        } else {
            Err(Error::InvalidPartition(parts))
        }
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(k)`, or the empty partition for `k = 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition(vec![k])
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition(vec![1; k as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.0[i..]);
        parts.extend_from_slice(&other.0[j..]);
        Partition(parts)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        let parts = (1..=first)
            .map(|i| self.0.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Partition(parts)
    }

    /// `N(λ) = l(λ)! / Π m_j(λ)!`, the number of distinct rearrangements of
    /// the parts.
    pub fn permutation_count(&self) -> Integer {
        let denom: Integer = self.multiplicities().iter().map(|&(_, m)| factorial(m)).product();
        factorial(self.len() as u32) / denom
    }

    /// `(Π (λ_i+1)!, Π (λ_i+1), Π (2λ_i+1))`.
    pub fn shifted_products(&self) -> (Integer, Integer, Integer) {
        let mut fact = Integer::one();
        let mut plain = Integer::one();
        let mut odd = Integer::one();
        for &p in &self.0 {
            fact *= factorial(p + 1);
            plain *= p + 1;
            odd *= 2 * p + 1;
        }
        (fact, plain, odd)
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Iterator over the partitions of `k` in canonical order.
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        self.current = successor(&cur);
        Some(Partition(cur))
    }
}

/// Next partition in descending lexicographic order, if any.
fn successor(parts: &[u32]) -> Option<Vec<u32>> {
    // rightmost part greater than one
    let pos = parts.iter().rposition(|&p| p > 1)?;
    let mut next = parts[..pos].to_vec();
    let v = parts[pos] - 1;
    let mut rest = parts[pos] + (parts.len() - pos - 1) as u32;
    while rest > 0 {
        let take = rest.min(v);
        next.push(take);
        rest -= take;
    }
    Some(next)
}

pub fn partitions(k: u32) -> Partitions {
    Partitions {
        current: Some(if k == 0 { Vec::new() } else { vec![k] }),
    }
}

/// All partitions of `k` in canonical (descending lexicographic) order.
pub fn enumerate(k: u32) -> Vec<Partition> {
    partitions(k).collect()
}

/// Visits every partition of `k` in canonical order without allocating a
/// `Partition` per item.
pub fn for_each_parts<F: FnMut(&[u32])>(k: u32, mut visit: F) {
    fn go<F: FnMut(&[u32])>(rest: u32, max: u32, buf: &mut Vec<u32>, visit: &mut F) {
        if rest == 0 {
            visit(buf);
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            buf.push(p);
            go(rest - p, p, buf, visit);
            buf.pop();
        }
    }
    let mut buf = Vec::with_capacity(k as usize);
    go(k, k, &mut buf, &mut visit);
}
