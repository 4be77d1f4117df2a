//! Exact integers and rationals, prime machinery, and the reference
//! combinatorial numbers the rest of the crate is checked against.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Arbitrary-precision fraction. Every constructor and arithmetic operation
/// reduces to lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(Integer::from(num), Integer::from(den))
}

pub fn rat_int(v: Integer) -> Rational {
    Rational::from_integer(v)
}

pub fn factorial(n: u32) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

pub fn binomial(n: u32, k: u32) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Least common multiple of positive integers; the empty list gives 1.
pub fn lcm_list<'a, I>(values: I) -> Result<Integer>
where
    I: IntoIterator<Item = &'a Integer>,
{
    let mut acc = Integer::one();
    for v in values {
        if !v.is_positive() {
            return Err(Error::NonPositive(v.to_string()));
        }
        acc = acc.lcm(v);
    }
    Ok(acc)
}

/// All primes `<= n` in ascending order (sieve of Eratosthenes).
pub fn primes_upto(n: u32) -> Vec<u32> {
    let n = n as usize;
    if n < 2 {
        return Vec::new();
    }
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u32);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}

/// Stirling numbers of the second kind via `S(m,k) = k S(m-1,k) + S(m-1,k-1)`.
pub fn stirling2(m: u32, k: u32) -> Integer {
    if k > m {
        return Integer::zero();
    }
    // row[j] holds S(i, j) for the current i
    let mut row = vec![Integer::zero(); k as usize + 1];
    row[0] = Integer::one();
    for _ in 0..m {
        for j in (1..=k as usize).rev() {
            let prev = std::mem::take(&mut row[j]);
            row[j] = prev * j + &row[j - 1];
        }
        row[0] = Integer::zero();
    }
    row.swap_remove(k as usize)
}

pub fn catalan(n: u32) -> Integer {
    let (q, r) = binomial(2 * n, n).div_rem(&Integer::from(n + 1));
    debug_assert!(r.is_zero());
    q
}

/// Bernoulli numbers with `B_1 = -1/2`, from
/// `sum_{j=0}^{n} binom(n+1, j) B_j = 0`.
///
/// This is the reference every other Bernoulli construction is compared to.
pub fn bernoulli_ref(n: u32) -> Rational {
    bernoulli_table(n).pop().expect("table has n+1 entries")
}

/// `B_0..=B_n` by the reference recurrence.
pub fn bernoulli_table(n: u32) -> Vec<Rational> {
    let mut table: Vec<Rational> = Vec::with_capacity(n as usize + 1);
    table.push(Rational::one());
    for m in 1..=n {
        let mut acc = Rational::zero();
        for (j, b) in table.iter().enumerate() {
            acc += b * rat_int(binomial(m + 1, j as u32));
        }
        table.push(-acc / rat_int(Integer::from(m + 1)));
    }
    table
}

/// Factorization of a positive integer as increasing primes with positive
/// exponents.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimePowerMap(Vec<(u32, u32)>);

impl PrimePowerMap {
    /// Builds a map from `(prime, exponent)` pairs, dropping zero exponents.
    ///
    /// Pairs must be given in strictly increasing prime order.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let v: Vec<_> = pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        debug_assert!(v.windows(2).all(|w| w[0].0 < w[1].0));
        PrimePowerMap(v)
    }

    /// Factorizes `n > 0` by trial division over the sieve.
    pub fn factorize(n: &Integer) -> Result<Self> {
        if !n.is_positive() {
            return Err(Error::NonPositive(n.to_string()));
        }
        let mut rest = n.clone();
        let mut pairs = Vec::new();
        let mut p: u32 = 2;
        while Integer::from(p) * p <= rest {
            let mut e = 0;
            loop {
                let (q, r) = rest.div_rem(&Integer::from(p));
                if !r.is_zero() {
                    break;
                }
                rest = q;
                e += 1;
            }
            if e > 0 {
                pairs.push((p, e));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if !rest.is_one() {
            let p: u32 = rest
                .try_into()
                .map_err(|_| Error::Overflow(format!("prime factor of {n}")))?;
            pairs.push((p, 1));
        }
        Ok(PrimePowerMap(pairs))
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn exponent_of(&self, p: u32) -> u32 {
        self.0.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, e)| e)
    }

    pub fn value(&self) -> Integer {
        self.0
            .iter()
            .fold(Integer::one(), |acc, &(p, e)| acc * Integer::from(p).pow(e))
    }
}

/// Exponent of the prime `p` in the nonzero integer `n`.
pub fn valuation(n: &Integer, p: u32) -> u32 {
    let p = Integer::from(p);
    let mut rest = n.abs();
    let mut e = 0;
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            break;
        }
        rest = q;
        e += 1;
    }
    e
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        // iterated multiplication in u128
        let oracle: u128 = (1..=21u128).product();
        assert_eq!(oracle, 51090942171709440000);
        assert_eq!(factorial(21), Integer::from(oracle));
    }

    #[test]
    fn lcm_cases() {
        assert_eq!(lcm_list(&[]).unwrap(), int(1));
        assert_eq!(lcm_list(&[int(6), int(4)]).unwrap(), int(12));
        let shifted = [int(36), int(48), int(8), int(120)];
        assert_eq!(lcm_list(&shifted).unwrap(), int(720));
        assert!(matches!(lcm_list(&[int(3), int(0)]), Err(Error::NonPositive(_))));
        assert!(lcm_list(&[int(-2)]).is_err());
    }

    #[test]
    fn primes() {
        assert!(primes_upto(1).is_empty());
        assert_eq!(primes_upto(10), vec![2, 3, 5, 7]);
        let trial: Vec<u32> = (2..=30u32).filter(|&n| (2..n).all(|d| n % d != 0)).collect();
        let sieve = primes_upto(30);
        assert_eq!(sieve, trial);
        assert_eq!(sieve.len(), 10);
        assert_eq!(*sieve.last().unwrap(), 29);
    }

    /// Counts set partitions of {0..m} into exactly k blocks by restricted
    /// growth strings.
    fn set_partitions_brute(m: usize, k: usize) -> u64 {
        fn go(i: usize, m: usize, k: usize, used: usize) -> u64 {
            if i == m {
                return u64::from(used == k);
            }
            let mut total = 0;
            for b in 0..=used.min(k.saturating_sub(1)) {
                let next = if b == used { used + 1 } else { used };
                if next <= k {
                    total += go(i + 1, m, k, next);
                }
            }
            total
        }
        go(0, m, k, 0)
    }

    #[test]
    fn stirling_values() {
        for m in 1..8 {
            assert_eq!(stirling2(m, 1), int(1));
        }
        assert_eq!(stirling2(4, 2), int(7));
        assert_eq!(set_partitions_brute(4, 2), 7);
        assert_eq!(stirling2(2, 2), int(1));
        assert_eq!(stirling2(0, 0), int(1));
        assert_eq!(stirling2(3, 0), int(0));
        for m in 0..8 {
            for k in 0..=m {
                assert_eq!(
                    stirling2(m as u32, k as u32),
                    Integer::from(set_partitions_brute(m, k)),
                    "S({m},{k})"
                );
            }
        }
    }

    #[test]
    fn stirling_falling_factorials_give_powers() {
        for m in 1..=8u32 {
            for x in 0..=6i64 {
                let mut acc = Integer::zero();
                for k in 0..=m {
                    let falling: Integer = (0..k as i64).map(|i| int(x - i)).product();
                    acc += stirling2(m, k) * falling;
                }
                assert_eq!(acc, int(x).pow(m), "m={m} x={x}");
            }
        }
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0), int(1));
        assert_eq!(catalan(4), int(14));
        assert_eq!(catalan(5), int(42));
        for n in 0..30 {
            let (_, r) = binomial(2 * n, n).div_rem(&Integer::from(n + 1));
            assert!(r.is_zero());
        }
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli_ref(0), rat(1, 1));
        assert_eq!(bernoulli_ref(1), rat(-1, 2));
        assert_eq!(bernoulli_ref(12), rat(-691, 2730));
        assert_eq!(bernoulli_ref(7), rat(0, 1));
        let listed = [
            (2, rat(1, 6)),
            (4, rat(-1, 30)),
            (6, rat(1, 42)),
            (8, rat(-1, 30)),
            (10, rat(5, 66)),
        ];
        for (n, v) in listed {
            assert_eq!(bernoulli_ref(n), v);
        }
        for n in 1..20 {
            assert!(bernoulli_ref(2 * n + 1).is_zero());
        }
    }

    #[test]
    fn factorization() {
        let f = PrimePowerMap::factorize(&int(60480)).unwrap();
        assert_eq!(f.pairs(), &[(2, 6), (3, 3), (5, 1), (7, 1)]);
        assert_eq!(f.value(), int(60480));
        assert_eq!(PrimePowerMap::factorize(&int(1)).unwrap().pairs(), &[]);
        assert!(PrimePowerMap::factorize(&int(0)).is_err());
        assert_eq!(valuation(&int(60480), 2), 6);
    }

    proptest! {
        #[test]
        fn rationals_stay_normalized(ops in proptest::collection::vec((-50i64..50, 1i64..40), 1..12)) {
            let mut acc = Rational::zero();
            for (i, (n, d)) in ops.into_iter().enumerate() {
                let x = rat(n, d);
                acc = match i % 3 {
                    0 => acc + x,
                    1 => acc * x - rat(1, 3),
                    _ => if x.is_zero() { acc } else { acc / x },
                };
                prop_assert!(acc.denom().is_positive());
                prop_assert!(acc.numer().gcd(acc.denom()).is_one());
            }
        }

        #[test]
        fn factorization_round_trips(n in 1u64..2_000_000) {
            let n = Integer::from(n);
            prop_assert_eq!(PrimePowerMap::factorize(&n).unwrap().value(), n);
        }
    }
}
