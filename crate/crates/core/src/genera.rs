//! Todd and L polynomials.
//!
//! Todd polynomials come from three independent constructions: the
//! generating function `Π x_i/(1-e^{-x_i})`, the forgotten-basis sum
//! `Σ f_λ/(λ+1)!`, and the g-basis sum `(-1)^k Σ g_λ/Π(λ_i+1)`. L
//! polynomials come from `Π x_i/tanh(x_i)` in the squared variables.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, lcm_list, rat_int, Integer, Rational};
use crate::error::{Error, Result};
use crate::partition::{enumerate, Partition};
use crate::symfunc::{BasisTag, SymFn};

/// Truncated power series in one variable, exact modulo `t^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniSeries {
    coeffs: Vec<Rational>,
}

impl UniSeries {
    /// Series from the coefficients of `t^0..t^{order-1}`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        UniSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, n: usize) -> Rational {
        self.coeffs.get(n).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `e^{c t}`.
    pub fn exp_scaled(c: &Rational, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order);
        let mut power = Rational::one();
        for n in 0..order {
            coeffs.push(&power / rat_int(factorial(n as u32)));
            power *= c;
        }
        UniSeries { coeffs }
    }

    /// The series `t`.
    pub fn variable(order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order];
        if order > 1 {
            coeffs[1] = Rational::one();
        }
        UniSeries { coeffs }
    }

    pub fn constant(c: Rational, order: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); order];
        if order > 0 {
            coeffs[0] = c;
        }
        UniSeries { coeffs }
    }

    pub fn sub(&self, other: &UniSeries) -> UniSeries {
        let order = self.order().min(other.order());
        UniSeries {
            coeffs: (0..order).map(|n| &self.coeffs[n] - &other.coeffs[n]).collect(),
        }
    }

    pub fn mul(&self, other: &UniSeries) -> UniSeries {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Rational::zero(); order];
        for (i, x) in self.coeffs.iter().enumerate().take(order) {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate().take(order - i) {
                coeffs[i + j] += x * y;
            }
        }
        UniSeries { coeffs }
    }

    /// `t ↦ c t`.
    pub fn rescale(&self, c: &Rational) -> UniSeries {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|x| {
                let v = x * &power;
                power *= c;
                v
            })
            .collect();
        UniSeries { coeffs }
    }

    fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Exact quotient. Common leading powers of `t` cancel first; the
    /// result is exact modulo `t^{order - v}` where `v` is the divisor's
    /// valuation.
    pub fn div(&self, divisor: &UniSeries) -> Result<UniSeries> {
        let v = divisor
            .valuation()
            .ok_or_else(|| Error::InvalidArgument("division by the zero series".into()))?;
        if self.valuation().is_some_and(|u| u < v) {
            return Err(Error::InvalidArgument("quotient is not a power series".into()));
        }
        let num = &self.coeffs[v.min(self.coeffs.len())..];
        let den = &divisor.coeffs[v..];
        let order = num.len().min(den.len());
        let lead = den[0].recip();
        let mut q: Vec<Rational> = Vec::with_capacity(order);
        for n in 0..order {
            let mut acc = num[n].clone();
            for i in 1..=n {
                acc -= &den[i] * &q[n - i];
            }
            q.push(acc * &lead);
        }
        Ok(UniSeries { coeffs: q })
    }
}

/// `x/(1-e^{-x})` modulo `x^order`, by dividing `x` by `1 - e^{-x}`.
pub fn todd_series(order: usize) -> UniSeries {
    let n = order + 1;
    let one_minus_exp = UniSeries::constant(Rational::one(), n).sub(&UniSeries::exp_scaled(&-Rational::one(), n));
    UniSeries::variable(n)
        .div(&one_minus_exp)
        .expect("1 - e^{-x} has valuation one")
}

/// `x/tanh(x) = 2x/(1-e^{-2x}) - x` modulo `x^order`.
pub fn x_over_tanh_series(order: usize) -> UniSeries {
    let doubled = todd_series(order).rescale(&Rational::from_integer(Integer::from(2)));
    doubled.sub(&UniSeries::variable(order))
}

/// `t/(e^t - 1)` modulo `t^order`.
pub fn bernoulli_series(order: usize) -> UniSeries {
    let n = order + 1;
    let exp_minus_one = UniSeries::exp_scaled(&Rational::one(), n).sub(&UniSeries::constant(Rational::one(), n));
    UniSeries::variable(n)
        .div(&exp_minus_one)
        .expect("e^t - 1 has valuation one")
}

/// Degree-`k` part of `Π_{i=1}^{k} q(x_i)` for `q = Σ q_n x^n` with
/// `q_0 = 1`, expanded as an honest polynomial in `k` variables and read
/// back in the monomial basis.
pub fn multiplicative_product(q: &[Rational], k: u32) -> SymFn {
    let k_us = k as usize;
    if k == 0 {
        return SymFn::one();
    }
    let dens: Vec<Integer> = q.iter().take(k_us + 1).map(|c| c.denom().clone()).collect();
    let scale = lcm_list(&dens).expect("denominators are positive");
    let scaled: Vec<Integer> = q
        .iter()
        .take(k_us + 1)
        .map(|c| (c * rat_int(scale.clone())).to_integer())
        .collect();
    // (exponents, total degree, coefficient); every exponent vector arises once
    let mut terms: Vec<(Vec<u8>, u32, Integer)> = vec![(Vec::new(), 0, Integer::one())];
    for var in 0..k_us {
        let last = var + 1 == k_us;
        let mut next = Vec::with_capacity(terms.len() * 2);
        for (mono, deg, c) in &terms {
            let room = k - deg;
            let range = if last { room..=room } else { 0..=room };
            for n in range {
                let qn = &scaled[n as usize];
                if qn.is_zero() {
                    continue;
                }
                let mut m = mono.clone();
                m.push(n as u8);
                next.push((m, deg + n, c * qn));
            }
        }
        terms = next;
    }
    let norm = rat_int(scale.pow(k));
    let coeffs = terms
        .into_iter()
        .filter(|(mono, _, _)| mono.windows(2).all(|w| w[0] >= w[1]))
        .map(|(mono, _, c)| {
            let lam = Partition::from_unsorted(mono.into_iter().map(u32::from).collect());
            (lam, rat_int(c) / &norm)
        });
    SymFn::from_terms(k, BasisTag::Monomial, coeffs).expect("homogeneous of degree k")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GenusKind {
    Todd,
    Lgenus,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Gf,
    Forgotten,
    Gbasis,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Gf, Method::Forgotten, Method::Gbasis];

    pub fn name(self) -> &'static str {
        match self {
            Method::Gf => "gf",
            Method::Forgotten => "forgotten",
            Method::Gbasis => "gbasis",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "method",
                name: s.to_string(),
            })
    }
}

/// A Todd or L polynomial of one degree, tagged with its construction.
///
/// `polynomial` is in the elementary basis: Chern classes `c_i = e_i` for
/// Todd, Pontryagin classes `p_i = e_i(x_1^2, x_2^2, …)` for L.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusTable {
    pub kind: GenusKind,
    pub degree: u32,
    pub polynomial: SymFn,
    pub denominator: Integer,
    pub method: Method,
}

impl GenusTable {
    fn new(kind: GenusKind, degree: u32, polynomial: SymFn, method: Method) -> Self {
        let polynomial = polynomial.convert(BasisTag::Elementary);
        let denominator = denominator_of(&polynomial).expect("elementary basis is integral");
        GenusTable {
            kind,
            degree,
            polynomial,
            denominator,
            method,
        }
    }
}

/// Reference construction from the generating function.
pub fn todd_gf(k: u32) -> GenusTable {
    let q = todd_series(k as usize + 1);
    let poly = multiplicative_product(q.coeffs(), k);
    GenusTable::new(GenusKind::Todd, k, poly, Method::Gf)
}

/// `T_k = Σ_λ f_λ / Π (λ_i+1)!`.
pub fn todd_forgotten(k: u32) -> GenusTable {
    let terms = enumerate(k).into_iter().map(|lam| {
        let (fact, _, _) = lam.shifted_products();
        (lam, Rational::new(Integer::one(), fact))
    });
    let poly = SymFn::from_terms(k, BasisTag::Forgotten, terms).expect("partitions of k");
    GenusTable::new(GenusKind::Todd, k, poly, Method::Forgotten)
}

/// `T_k = (-1)^k Σ_λ g_λ / Π (λ_i+1)`.
pub fn todd_g(k: u32) -> GenusTable {
    let sign = if k.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    };
    let terms = enumerate(k).into_iter().map(|lam| {
        let (_, plain, _) = lam.shifted_products();
        (lam, Rational::new(sign.clone(), plain))
    });
    let poly = SymFn::from_terms(k, BasisTag::GNew, terms).expect("partitions of k");
    GenusTable::new(GenusKind::Todd, k, poly, Method::Gbasis)
}

pub fn todd(k: u32, method: Method) -> GenusTable {
    match method {
        Method::Gf => todd_gf(k),
        Method::Forgotten => todd_forgotten(k),
        Method::Gbasis => todd_g(k),
    }
}

/// `L_k` from `Π x_i/tanh(x_i)`, in the Pontryagin (elementary in `x_i^2`)
/// basis.
pub fn l_gf(k: u32) -> GenusTable {
    let series = x_over_tanh_series(2 * k as usize + 2);
    // x/tanh(x) is even; substitute y = x^2
    let even: Vec<Rational> = (0..=k as usize).map(|n| series.coeff(2 * n)).collect();
    let poly = multiplicative_product(&even, k);
    GenusTable::new(GenusKind::Lgenus, k, poly, Method::Gf)
}

/// Smallest positive `μ` with `μ·sf` integral in `sf`'s basis.
pub fn denominator_of(sf: &SymFn) -> Result<Integer> {
    sf.denominator()
}

/// `B_k^{(n)}(x_1, …, x_n)` from `Π t x_i/(e^{t x_i} - 1) = Σ B_k^{(n)} t^k/k!`
/// at a rational point.
pub fn norlund_eval(x: &[Rational], k: u32) -> Rational {
    let order = k as usize + 1;
    let base = bernoulli_series(order);
    let product = x.iter().fold(UniSeries::constant(Rational::one(), order), |acc, xi| {
        acc.mul(&base.rescale(xi))
    });
    product.coeff(k as usize) * rat_int(factorial(k))
}
