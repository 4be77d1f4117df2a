//! Homogeneous symmetric functions over six bases.
//!
//! Every element is stored as a partition-indexed coefficient map tagged
//! with its basis. The monomial basis is the internal pivot: conversions go
//! through per-degree transition matrices to and from `m`, built once and
//! cached (see [`basis::transition`]).
//!
//! The forgotten functions follow Macdonald's sign convention,
//! `f_λ = ω(m_λ)`.

pub mod basis;
pub mod product;

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{rat_int, Integer, Rational};
use crate::error::{Error, Result};
use crate::linalg;
use crate::partition::{for_each_parts, Partition};

pub use basis::transition;
pub use product::monomial_product;

/// Sign convention recorded alongside serialized forgotten/g data.
pub const CONVENTION: &str = "macdonald";

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum BasisTag {
    #[serde(rename = "m")]
    Monomial,
    #[serde(rename = "e")]
    Elementary,
    #[serde(rename = "h")]
    Complete,
    #[serde(rename = "p")]
    PowerSum,
    #[serde(rename = "f")]
    Forgotten,
    #[serde(rename = "g")]
    GNew,
}

impl BasisTag {
    pub const ALL: [BasisTag; 6] = [
        BasisTag::Monomial,
        BasisTag::Elementary,
        BasisTag::Complete,
        BasisTag::PowerSum,
        BasisTag::Forgotten,
        BasisTag::GNew,
    ];

    /// Bases with unimodular integer transition matrices.
    pub const INTEGRAL: [BasisTag; 5] = [
        BasisTag::Monomial,
        BasisTag::Elementary,
        BasisTag::Complete,
        BasisTag::Forgotten,
        BasisTag::GNew,
    ];

    pub fn symbol(self) -> &'static str {
        match self {
            BasisTag::Monomial => "m",
            BasisTag::Elementary => "e",
            BasisTag::Complete => "h",
            BasisTag::PowerSum => "p",
            BasisTag::Forgotten => "f",
            BasisTag::GNew => "g",
        }
    }

    pub fn is_integral(self) -> bool {
        self != BasisTag::PowerSum
    }

    /// `b_λ b_μ = b_{λ∪μ}`.
    pub fn is_multiplicative(self) -> bool {
        matches!(self, BasisTag::Elementary | BasisTag::Complete | BasisTag::PowerSum)
    }
}

impl fmt::Display for BasisTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for BasisTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BasisTag::ALL
            .into_iter()
            .find(|b| b.symbol() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "basis",
                name: s.to_string(),
            })
    }
}

/// A homogeneous symmetric function of fixed degree in a fixed basis.
///
/// Equality compares the underlying elements of Λ, not the representation.
#[derive(Clone, Debug)]
pub struct SymFn {
    degree: u32,
    basis: BasisTag,
    coeffs: BTreeMap<Partition, Rational>,
}

impl SymFn {
    pub fn zero(degree: u32, basis: BasisTag) -> Self {
        SymFn {
            degree,
            basis,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::generator(BasisTag::Monomial, Partition::empty())
    }

    /// The basis element `b_λ`.
    pub fn generator(basis: BasisTag, lambda: Partition) -> Self {
        let degree = lambda.weight();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(lambda, Rational::one());
        SymFn { degree, basis, coeffs }
    }

    /// Builds from `(partition, coefficient)` terms; repeated keys add up.
    pub fn from_terms<I>(degree: u32, basis: BasisTag, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, Rational)>,
    {
        let mut out = Self::zero(degree, basis);
        for (p, c) in terms {
            if p.weight() != degree {
                return Err(Error::InvalidArgument(format!(
                    "partition {p} has weight {} in degree {degree}",
                    p.weight()
                )));
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    fn from_vector(degree: u32, basis: BasisTag, parts: &[Partition], v: Vec<Rational>) -> Self {
        let coeffs = parts.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()).collect();
        SymFn { degree, basis, coeffs }
    }

    fn to_vector(&self, t: &basis::Transition) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); t.dim()];
        for (p, c) in &self.coeffs {
            v[t.index[p]] = c.clone();
        }
        v
    }

    fn add_term(&mut self, p: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(p) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &Partition) -> Rational {
        self.coeffs.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    /// Nonzero terms in canonical (descending lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter().rev()
    }

    pub fn convert(&self, target: BasisTag) -> SymFn {
        if target == self.basis {
            return self.clone();
        }
        let mut v = self.to_vector(&transition(self.basis, self.degree));
        if self.basis != BasisTag::Monomial {
            v = linalg::apply(&v, &transition(self.basis, self.degree).to_m);
        }
        let t = transition(target, self.degree);
        if target != BasisTag::Monomial {
            v = linalg::apply(&v, &t.from_m);
        }
        Self::from_vector(self.degree, target, &t.partitions, v)
    }

    pub fn scale(&self, c: &Rational) -> SymFn {
        let mut out = Self::zero(self.degree, self.basis);
        if !c.is_zero() {
            out.coeffs = self.coeffs.iter().map(|(p, x)| (p.clone(), x * c)).collect();
        }
        out
    }

    /// Sum, expressed in `self`'s basis.
    pub fn add(&self, other: &SymFn) -> Result<SymFn> {
        if self.degree != other.degree {
            return Err(Error::InvalidArgument(format!(
                "cannot add degree {} and degree {}",
                self.degree, other.degree
            )));
        }
        let other = other.convert(self.basis);
        let mut out = self.clone();
        for (p, c) in other.coeffs {
            out.add_term(p, c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SymFn) -> Result<SymFn> {
        self.add(&other.scale(&-Rational::one()))
    }

    /// Exact product in Λ. Stays in the common basis when it is
    /// multiplicative, otherwise the result is in the monomial basis.
    pub fn multiply(&self, other: &SymFn) -> SymFn {
        let degree = self.degree + other.degree;
        if self.basis == other.basis && self.basis.is_multiplicative() {
            let mut out = Self::zero(degree, self.basis);
            for (a, x) in &self.coeffs {
                for (b, y) in &other.coeffs {
                    out.add_term(a.union(b), x * y);
                }
            }
            return out;
        }
        let (a, b) = (self.convert(BasisTag::Monomial), other.convert(BasisTag::Monomial));
        let mut acc: BTreeMap<Partition, Rational> = BTreeMap::new();
        for (p, x) in &a.coeffs {
            for (q, y) in &b.coeffs {
                let xy = x * y;
                for (nu, c) in monomial_product(p, q).iter() {
                    *acc.entry(nu.clone()).or_insert_with(Rational::zero) += &xy * rat_int(c.clone());
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        SymFn {
            degree,
            basis: BasisTag::Monomial,
            coeffs: acc,
        }
    }

    /// The involution ω, via the power-sum basis where
    /// `ω(p_λ) = (-1)^{|λ|-l(λ)} p_λ`. The result keeps `self`'s basis.
    pub fn omega(&self) -> SymFn {
        let p = self.convert(BasisTag::PowerSum);
        let flipped = SymFn {
            degree: p.degree,
            basis: BasisTag::PowerSum,
            coeffs: p
                .coeffs
                .into_iter()
                .map(|(nu, c)| if basis::omega_sign(&nu) { (nu, -c) } else { (nu, c) })
                .collect(),
        };
        flipped.convert(self.basis)
    }

    /// Value at `(1, 0, 0, …)`: the coefficient of `m_(k)`.
    pub fn eval_at_one(&self) -> Rational {
        self.convert(BasisTag::Monomial).coeff(&Partition::row(self.degree))
    }

    /// Value at the finite point `x` (all later variables zero).
    pub fn eval_at(&self, x: &[Rational]) -> Rational {
        // e_0..e_degree of x
        let mut e = vec![Rational::zero(); self.degree as usize + 1];
        e[0] = Rational::one();
        for xi in x {
            for j in (1..e.len()).rev() {
                let prev = &e[j - 1] * xi;
                e[j] += prev;
            }
        }
        self.convert(BasisTag::Elementary)
            .coeffs
            .iter()
            .map(|(p, c)| p.parts().iter().fold(c.clone(), |acc, &i| acc * &e[i as usize]))
            .sum()
    }

    /// Smallest positive integer clearing every coefficient, in the
    /// current basis. The power-sum basis is rejected.
    pub fn denominator(&self) -> Result<Integer> {
        if !self.basis.is_integral() {
            return Err(Error::NotIntegralBasis("p"));
        }
        let dens: Vec<Integer> = self.coeffs.values().map(|c| c.denom().clone()).collect();
        crate::arith::lcm_list(&dens)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(Rational::is_integer)
    }
}

impl PartialEq for SymFn {
    fn eq(&self, other: &Self) -> bool {
        if self.is_zero() && other.is_zero() {
            return true;
        }
        if self.degree != other.degree {
            return false;
        }
        if self.basis == other.basis {
            return self.coeffs == other.coeffs;
        }
        self.convert(BasisTag::Monomial).coeffs == other.convert(BasisTag::Monomial).coeffs
    }
}

impl Eq for SymFn {}

pub fn forgotten(lambda: &Partition) -> SymFn {
    SymFn::generator(BasisTag::Monomial, lambda.clone())
        .omega()
        .convert(BasisTag::Monomial)
}

/// `f_λ` in the monomial basis by the permutation/prefix-sum rule:
/// `(-1)^{n-l} f_λ = Σ_μ a_{λμ} m_μ`, where `a_{λμ}` counts the distinct
/// rearrangements `α` of `λ` whose partial sums contain all partial sums
/// of `μ`.
pub fn forgotten_combinatorial(lambda: &Partition) -> SymFn {
    let n = lambda.weight();
    let mut prefix_sets: Vec<Vec<u32>> = Vec::new();
    for_each_distinct_permutation(lambda.parts(), |alpha| {
        let mut sums = Vec::with_capacity(alpha.len());
        let mut s = 0;
        for &a in alpha {
            s += a;
            sums.push(s);
        }
        prefix_sets.push(sums);
    });
    let sign = if (n as usize - lambda.len()) % 2 == 1 {
        -Rational::one()
    } else {
        Rational::one()
    };
    let mut out = SymFn::zero(n, BasisTag::Monomial);
    for_each_parts(n, |mu| {
        let mut sums = Vec::with_capacity(mu.len());
        let mut s = 0;
        for &m in mu {
            s += m;
            sums.push(s);
        }
        // prefix sums are strictly increasing, so subset test by search
        let count = prefix_sets
            .iter()
            .filter(|set| sums.iter().all(|x| set.binary_search(x).is_ok()))
            .count();
        if count > 0 {
            out.add_term(
                Partition::new(mu.to_vec()).expect("canonical parts"),
                &sign * rat_int(Integer::from(count)),
            );
        }
    });
    out
}

/// Calls `visit` once per distinct rearrangement of `parts`.
pub fn for_each_distinct_permutation<F: FnMut(&[u32])>(parts: &[u32], mut visit: F) {
    fn go<F: FnMut(&[u32])>(counts: &mut Vec<(u32, u32)>, buf: &mut Vec<u32>, total: usize, visit: &mut F) {
        if buf.len() == total {
            visit(buf);
            return;
        }
        for i in 0..counts.len() {
            if counts[i].1 == 0 {
                continue;
            }
            counts[i].1 -= 1;
            buf.push(counts[i].0);
            go(counts, buf, total, visit);
            buf.pop();
            counts[i].1 += 1;
        }
    }
    let mut counts = Partition::from_unsorted(parts.to_vec()).multiplicities();
    let mut buf = Vec::with_capacity(parts.len());
    go(&mut counts, &mut buf, parts.len(), &mut visit);
}

/// JSON form: `{degree, basis, convention, terms: [{partition, num, den}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymFnJson {
    pub degree: u32,
    pub basis: BasisTag,
    pub convention: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub partition: Partition,
    pub num: String,
    pub den: String,
}

impl From<&SymFn> for SymFnJson {
    fn from(sf: &SymFn) -> Self {
        SymFnJson {
            degree: sf.degree,
            basis: sf.basis,
            convention: CONVENTION.to_string(),
            terms: sf
                .terms()
                .map(|(p, c)| TermJson {
                    partition: p.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }
}

impl TryFrom<SymFnJson> for SymFn {
    type Error = Error;

    fn try_from(j: SymFnJson) -> Result<Self> {
        let parse = |s: &str| {
            s.parse::<Integer>()
                .map_err(|_| Error::InvalidArgument(format!("not an integer: {s}")))
        };
        let mut terms = Vec::with_capacity(j.terms.len());
        for t in j.terms {
            let den = parse(&t.den)?;
            if !den.is_positive() {
                return Err(Error::NonPositive(t.den));
            }
            terms.push((t.partition, Rational::new(parse(&t.num)?, den)));
        }
        SymFn::from_terms(j.degree, j.basis, terms)
    }
}
