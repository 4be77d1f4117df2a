//! Hirzebruch numbers, L-denominators, Buchstaber numbers and Bernoulli
//! numbers, each by every available route.
//!
//! Routes are implemented independently of each other; only `arith` and
//! `partition` are shared. Agreement is checked by callers (see `verify`).

use std::collections::BTreeMap;

use num_integer::Integer as _;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, primes_upto, rat_int, stirling2, Integer, PrimePowerMap, Rational};
use crate::error::{Error, Result};
use crate::partition::{for_each_parts, Partition};
use crate::reversion::g_value_at_one;

/// `𝔥_k = Π_p p^{⌊k/(p-1)⌋}`.
pub fn hirzebruch_prime(k: u32) -> Integer {
    hirzebruch_factorization(k).value()
}

pub fn hirzebruch_factorization(k: u32) -> PrimePowerMap {
    PrimePowerMap::from_pairs(primes_upto(k + 1).into_iter().map(|p| (p, k / (p - 1))))
}

/// lcm over partitions `λ` of `k` of `Π_i factor(λ_i)`.
///
/// With `L(n, j)` the lcm over partitions of `n` with parts `≤ j`,
/// `L(n, j) = lcm(L(n, j-1), factor(j)·L(n-j, j))`, because multiplying by a
/// common factor commutes with lcm.
fn lcm_over_partitions<F: Fn(u32) -> Integer>(k: u32, factor: F) -> Integer {
    let k = k as usize;
    // row[n] = L(n, j) for the current j
    let mut row: Vec<Integer> = (0..=k)
        .map(|n| if n == 0 { Integer::one() } else { Integer::zero() })
        .collect();
    for j in 1..=k {
        let f = factor(j as u32);
        for n in j..=k {
            let with_j = &f * &row[n - j];
            row[n] = if row[n].is_zero() { with_j } else { row[n].lcm(&with_j) };
        }
    }
    row[k].clone()
}

/// `lcm_λ Π (λ_i+1)!`.
pub fn hirzebruch_lcm_factorial(k: u32) -> Integer {
    lcm_over_partitions(k, |p| factorial(p + 1))
}

/// `lcm_λ Π (λ_i+1)`.
pub fn hirzebruch_lcm_plain(k: u32) -> Integer {
    lcm_over_partitions(k, |p| Integer::from(p + 1))
}

/// `μ(L_k) = Π_{p≥3} p^{⌊2k/(p-1)⌋}`.
pub fn l_denominator_prime(k: u32) -> Integer {
    l_denominator_factorization(k).value()
}

pub fn l_denominator_factorization(k: u32) -> PrimePowerMap {
    PrimePowerMap::from_pairs(
        primes_upto(2 * k + 1)
            .into_iter()
            .filter(|&p| p >= 3)
            .map(|p| (p, 2 * k / (p - 1))),
    )
}

/// `lcm_λ Π (2λ_i+1)`.
pub fn l_denominator_lcm(k: u32) -> Integer {
    lcm_over_partitions(k, |p| Integer::from(2 * p + 1))
}

/// `𝔥_{2k} / 2^{2k}`, checked to be exact and to equal `𝔥_{2k+1}/2^{2k+1}`.
pub fn l_from_hirzebruch(k: u32) -> Result<Integer> {
    let exact_div = |n: Integer, shift: u32| -> Result<Integer> {
        let d = Integer::one() << shift;
        let (q, r) = n.div_rem(&d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::IdentityFailed(format!("{d} does not divide {n}")))
        }
    };
    let even = exact_div(hirzebruch_prime(2 * k), 2 * k)?;
    let odd = exact_div(hirzebruch_prime(2 * k + 1), 2 * k + 1)?;
    if even != odd {
        return Err(Error::IdentityFailed(format!(
            "h_{}/2^{} = {even} but h_{}/2^{} = {odd}",
            2 * k,
            2 * k,
            2 * k + 1,
            2 * k + 1
        )));
    }
    Ok(even)
}

/// `𝔟_n = Π_{p≥3} p^{⌊(n-1)/(2(p-1))⌋}`, constant on each block
/// `n = 4k+1, …, 4k+4` where it equals `μ(L_k)`.
pub fn buchstaber(n: u32) -> Result<Integer> {
    Ok(buchstaber_factorization(n)?.value())
}

pub fn buchstaber_factorization(n: u32) -> Result<PrimePowerMap> {
    if n == 0 {
        return Err(Error::NonPositive("0".into()));
    }
    let top = n - 1;
    Ok(PrimePowerMap::from_pairs(
        primes_upto(top / 2 + 1)
            .into_iter()
            .filter(|&p| p >= 3)
            .map(|p| (p, top / (2 * (p - 1)))),
    ))
}

/// `B_m = Σ_k (-1)^k k! S(m,k)/(k+1)`.
pub fn bernoulli_stirling(m: u32) -> Rational {
    (0..=m)
        .map(|k| {
            let term = Rational::new(factorial(k) * stirling2(m, k), Integer::from(k + 1));
            if k % 2 == 1 {
                -term
            } else {
                term
            }
        })
        .sum()
}

/// `B_k = k! Σ_λ (-1)^{l(λ)} N(λ) / Π (λ_i+1)!`.
pub fn bernoulli_partition_factorial(k: u32) -> Rational {
    let mut acc = Rational::zero();
    for_each_parts(k, |parts| {
        let lam = Partition::new(parts.to_vec()).expect("canonical parts");
        let (fact, _, _) = lam.shifted_products();
        let n = lam.permutation_count();
        let signed = if lam.len() % 2 == 1 { -n } else { n };
        acc += Rational::new(signed, fact);
    });
    acc * rat_int(factorial(k))
}

/// `B_k = k! Σ_λ G(λ) / Π (λ_i+1)` with `G(λ) = g_λ(1,0,0,…)`.
pub fn bernoulli_partition_g(k: u32) -> Rational {
    let mut acc = Rational::zero();
    for_each_parts(k, |parts| {
        let lam = Partition::new(parts.to_vec()).expect("canonical parts");
        let (_, plain, _) = lam.shifted_products();
        acc += Rational::new(g_value_at_one(&lam), plain);
    });
    acc * rat_int(factorial(k))
}

/// Result of the von Staudt–Clausen check for `B_{2n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StaudtClausen {
    /// `B_{2n} + Σ_{(p-1) | 2n} 1/p`, an integer.
    pub integer: Integer,
    /// The primes `p` with `(p-1) | 2n`, ascending.
    pub primes: Vec<u32>,
}

/// Checks `B_{index} + Σ_{(p-1)|index} 1/p ∈ ℤ` and that the denominator
/// of `B_{index}` is the product of those primes. `index` must be even and
/// positive.
pub fn von_staudt_clausen(index: u32) -> Result<StaudtClausen> {
    if index == 0 || index % 2 == 1 {
        return Err(Error::InvalidArgument(format!(
            "von Staudt-Clausen needs a positive even index, got {index}"
        )));
    }
    let b = crate::arith::bernoulli_ref(index);
    let primes: Vec<u32> = primes_upto(index + 1)
        .into_iter()
        .filter(|&p| index.is_multiple_of(p - 1))
        .collect();
    let sum: Rational = primes
        .iter()
        .map(|&p| Rational::new(Integer::one(), Integer::from(p)))
        .sum();
    let total = &b + sum;
    if !total.is_integer() {
        return Err(Error::IdentityFailed(format!("B_{index} + Σ1/p = {total}")));
    }
    let q: Integer = primes.iter().map(|&p| Integer::from(p)).product();
    if *b.denom() != q {
        return Err(Error::IdentityFailed(format!(
            "denominator of B_{index} is {}, prime product is {q}",
            b.denom()
        )));
    }
    Ok(StaudtClausen {
        integer: total.to_integer(),
        primes,
    })
}

/// Number families exposed as value tables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Hirzebruch,
    Ldenom,
    Buchstaber,
    Bernoulli,
}

impl Family {
    pub fn methods(self) -> &'static [&'static str] {
        match self {
            Family::Hirzebruch => &["prime", "lcm-factorial", "lcm-plain"],
            Family::Ldenom => &["prime", "lcm", "hirzebruch"],
            Family::Buchstaber => &["prime"],
            Family::Bernoulli => &["reference", "stirling", "partition-factorial", "partition-g"],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Hirzebruch => "hirzebruch",
            Family::Ldenom => "ldenom",
            Family::Buchstaber => "buchstaber",
            Family::Bernoulli => "bernoulli",
        }
    }

    pub const ALL: [Family; 4] = [
        Family::Hirzebruch,
        Family::Ldenom,
        Family::Buchstaber,
        Family::Bernoulli,
    ];

    pub fn min_index(self) -> u32 {
        match self {
            Family::Buchstaber => 1,
            _ => 0,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "family",
                name: s.to_string(),
            })
    }
}

/// Rational rendered as `num/den`, or as a bare integer when `den = 1`.
pub fn rational_string(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// One row of a number table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberRecord {
    pub k: u32,
    /// Value of the first requested method.
    pub value: String,
    /// Numerator and denominator, for rational-valued families.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub num: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub den: Option<String>,
    /// `[[prime, exponent], …]` for integer-valued families.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub factorization: Option<Vec<(u32, u32)>>,
    /// Value by each requested method.
    pub methods: BTreeMap<String, String>,
    /// Names of the methods whose value equals `value`.
    pub methods_agreeing: Vec<String>,
    pub agree: bool,
}

fn evaluate(family: Family, method: &str, k: u32) -> Result<Rational> {
    let int = |v: Integer| Ok(rat_int(v));
    match (family, method) {
        (Family::Hirzebruch, "prime") => int(hirzebruch_prime(k)),
        (Family::Hirzebruch, "lcm-factorial") => int(hirzebruch_lcm_factorial(k)),
        (Family::Hirzebruch, "lcm-plain") => int(hirzebruch_lcm_plain(k)),
        (Family::Ldenom, "prime") => int(l_denominator_prime(k)),
        (Family::Ldenom, "lcm") => int(l_denominator_lcm(k)),
        (Family::Ldenom, "hirzebruch") => int(l_from_hirzebruch(k)?),
        (Family::Buchstaber, "prime") => int(buchstaber(k)?),
        (Family::Bernoulli, "reference") => Ok(crate::arith::bernoulli_ref(k)),
        (Family::Bernoulli, "stirling") => Ok(bernoulli_stirling(k)),
        (Family::Bernoulli, "partition-factorial") => Ok(bernoulli_partition_factorial(k)),
        (Family::Bernoulli, "partition-g") => Ok(bernoulli_partition_g(k)),
        _ => Err(Error::Unknown {
            kind: "method",
            name: format!("{} for {}", method, family.name()),
        }),
    }
}

/// Computes one table row with the given methods (all when empty).
pub fn record(family: Family, k: u32, methods: &[&str]) -> Result<NumberRecord> {
    if k < family.min_index() {
        return Err(Error::InvalidArgument(format!(
            "{} numbers start at index {}",
            family.name(),
            family.min_index()
        )));
    }
    let methods: Vec<&str> = if methods.is_empty() {
        family.methods().to_vec()
    } else {
        methods.to_vec()
    };
    let mut values = Vec::with_capacity(methods.len());
    for m in &methods {
        values.push(evaluate(family, m, k)?);
    }
    let first = values[0].clone();
    let methods_agreeing: Vec<String> = methods
        .iter()
        .zip(&values)
        .filter(|(_, v)| **v == first)
        .map(|(m, _)| m.to_string())
        .collect();
    let agree = methods_agreeing.len() == methods.len();
    let (num, den, factorization) = if family == Family::Bernoulli {
        (Some(first.numer().to_string()), Some(first.denom().to_string()), None)
    } else {
        let f = PrimePowerMap::factorize(first.numer())?;
        (None, None, Some(f.pairs().to_vec()))
    };
    Ok(NumberRecord {
        k,
        value: rational_string(&first),
        num,
        den,
        factorization,
        methods: methods
            .iter()
            .zip(&values)
            .map(|(m, v)| (m.to_string(), rational_string(v)))
            .collect(),
        methods_agreeing,
        agree,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn lcm_by_enumeration(k: u32, factor: impl Fn(u32) -> Integer) -> Integer {
        let mut acc = Integer::one();
        for_each_parts(k, |parts| {
            let v: Integer = parts.iter().map(|&p| factor(p)).product();
            acc = acc.lcm(&v);
        });
        acc
    }

    #[test]
    fn lcm_recursion_matches_enumeration() {
        for k in 0..=18 {
            assert_eq!(
                hirzebruch_lcm_factorial(k),
                lcm_by_enumeration(k, |p| factorial(p + 1)),
                "k={k}"
            );
            assert_eq!(
                hirzebruch_lcm_plain(k),
                lcm_by_enumeration(k, |p| Integer::from(p + 1)),
                "k={k}"
            );
            assert_eq!(
                l_denominator_lcm(k),
                lcm_by_enumeration(k, |p| Integer::from(2 * p + 1)),
                "k={k}"
            );
        }
    }

    #[test]
    fn hirzebruch_values() {
        let listed = [1, 2, 12, 24, 720, 1440, 60480];
        for (k, v) in listed.iter().enumerate() {
            let k = k as u32;
            assert_eq!(hirzebruch_prime(k), int(*v), "prime k={k}");
            assert_eq!(hirzebruch_lcm_factorial(k), int(*v), "factorial k={k}");
            assert_eq!(hirzebruch_lcm_plain(k), int(*v), "plain k={k}");
        }
        assert_eq!(hirzebruch_prime(7), int(120960));
        assert_eq!(hirzebruch_prime(7), int(2) * hirzebruch_prime(6));
        assert_eq!(hirzebruch_factorization(7).pairs(), &[(2, 7), (3, 3), (5, 1), (7, 1)]);
        assert_eq!(hirzebruch_lcm_plain(2), int(12));
    }

    #[test]
    fn hirzebruch_routes_agree_to_thirty() {
        for k in 0..=30 {
            let h = hirzebruch_prime(k);
            assert_eq!(hirzebruch_lcm_factorial(k), h, "k={k}");
            assert_eq!(hirzebruch_lcm_plain(k), h, "k={k}");
        }
    }

    #[test]
    fn l_denominators() {
        for (k, v) in [(0, 1), (1, 3), (2, 45), (3, 945), (4, 14175)] {
            assert_eq!(l_denominator_prime(k), int(v));
            assert_eq!(l_denominator_lcm(k), int(v));
            assert_eq!(l_from_hirzebruch(k).unwrap(), int(v));
        }
    }

    #[test]
    fn buchstaber_values() {
        let table = [1, 1, 1, 1, 3, 3, 3, 3, 45, 45, 45, 45, 945, 945, 945, 945];
        for (i, v) in table.iter().enumerate() {
            assert_eq!(buchstaber(i as u32 + 1).unwrap(), int(*v), "b_{}", i + 1);
        }
        assert_eq!(buchstaber_factorization(13).unwrap().pairs(), &[(3, 3), (5, 1), (7, 1)]);
        assert!(buchstaber(0).is_err());
    }

    #[test]
    fn bernoulli_routes() {
        assert_eq!(bernoulli_stirling(1), rat(-1, 2));
        assert_eq!(bernoulli_stirling(2), rat(1, 6));
        assert_eq!(bernoulli_stirling(12), rat(-691, 2730));
        assert_eq!(bernoulli_partition_factorial(2), rat(1, 6));
        assert_eq!(bernoulli_partition_factorial(3), rat(0, 1));
        assert_eq!(bernoulli_partition_factorial(4), rat(-1, 30));
        assert_eq!(bernoulli_partition_g(2), rat(1, 6));
        assert_eq!(bernoulli_partition_g(3), rat(0, 1));
        assert_eq!(bernoulli_partition_g(4), rat(-1, 30));
        for k in 0..=14 {
            let b = crate::arith::bernoulli_ref(k);
            assert_eq!(bernoulli_stirling(k), b, "stirling {k}");
            assert_eq!(bernoulli_partition_factorial(k), b, "factorial {k}");
            assert_eq!(bernoulli_partition_g(k), b, "g {k}");
        }
    }

    #[test]
    fn staudt_clausen() {
        let two = von_staudt_clausen(2).unwrap();
        assert_eq!(two.primes, vec![2, 3]);
        assert_eq!(two.integer, int(1));
        assert_eq!(von_staudt_clausen(4).unwrap().primes, vec![2, 3, 5]);
        let twelve = von_staudt_clausen(12).unwrap();
        assert_eq!(twelve.primes.iter().product::<u32>(), 2730);
        assert!(von_staudt_clausen(3).is_err());
        assert!(von_staudt_clausen(0).is_err());
    }

    #[test]
    fn records() {
        let r = record(Family::Bernoulli, 12, &[]).unwrap();
        assert!(r.agree);
        assert_eq!(r.value, "-691/2730");
        assert_eq!(r.methods.len(), 4);
        let h = record(Family::Hirzebruch, 6, &["prime"]).unwrap();
        assert_eq!(h.value, "60480");
        assert_eq!(h.factorization, Some(vec![(2, 6), (3, 3), (5, 1), (7, 1)]));
        assert!(record(Family::Hirzebruch, 6, &["nope"]).is_err());
        assert!(record(Family::Buchstaber, 0, &[]).is_err());
    }
}
