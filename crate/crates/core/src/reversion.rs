//! Reversion of `α(u) = u + Σ a_n u^{n+1}`.
//!
//! The inverse `β(v) = v + Σ b_n v^{n+1}` has coefficients `b_n` that are
//! integer polynomials in the formal symbols `a_1, a_2, …`. Monomials
//! `a_1^{k_1} a_2^{k_2} ⋯` are keyed by the partition with `k_i` parts equal
//! to `i`, so `a^λ` for a partition `λ` is literally the key `λ`.
//!
//! From the `b_n` we build the integer matrix `C(μ, λ) = [a^λ] b^μ` and the
//! basis `g_λ = Σ_μ C(μ, λ) f_μ`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{factorial, rat_int, Integer, Rational};
use crate::error::{Error, Result};
use crate::partition::{enumerate, Partition};
use crate::symfunc::{BasisTag, SymFn};

/// Polynomial in `a_1, a_2, …` keyed by exponent partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightedPoly {
    coeffs: BTreeMap<Partition, Rational>,
}

impl WeightedPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Partition::empty(), Rational::one())
    }

    pub fn monomial(exponents: Partition, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(exponents, c);
        out
    }

    /// The symbol `a_n`.
    pub fn symbol(n: u32) -> Self {
        Self::monomial(Partition::row(n), Rational::one())
    }

    pub fn add_term(&mut self, exponents: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(exponents) {
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

    pub fn coeff(&self, exponents: &Partition) -> Rational {
        self.coeffs.get(exponents).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.coeffs.iter().rev()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `Some(w)` when every monomial has weight `w`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut weights = self.coeffs.keys().map(Partition::weight);
        let first = weights.next()?;
        weights.all(|w| w == first).then_some(first)
    }

    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.values().all(Rational::is_integer)
    }

    pub fn add_assign(&mut self, other: &WeightedPoly) {
        for (e, c) in &other.coeffs {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &Rational) -> WeightedPoly {
        let mut out = Self::zero();
        for (e, x) in &self.coeffs {
            out.add_term(e.clone(), x * c);
        }
        out
    }

    pub fn mul(&self, other: &WeightedPoly) -> WeightedPoly {
        let mut out = Self::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &other.coeffs {
                out.add_term(e1.union(e2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Display for WeightedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // ascending lexicographic order reads a_n first: -a_3+5a_1a_2-5a_1^3
        for (i, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            if neg {
                f.write_str("-")?;
            } else if i > 0 {
                f.write_str("+")?;
            }
            let abs = c.abs();
            let vars = e
                .multiplicities()
                .iter()
                .rev()
                .map(|&(part, mult)| {
                    if mult == 1 {
                        format!("a_{part}")
                    } else {
                        format!("a_{part}^{mult}")
                    }
                })
                .collect::<String>();
            if !abs.is_one() || vars.is_empty() {
                write!(f, "{abs}")?;
            }
            f.write_str(&vars)?;
        }
        Ok(())
    }
}

/// Truncated series in one variable with `WeightedPoly` coefficients.
type PolySeries = Vec<WeightedPoly>;

/// `b_1..=b_n` solved degree by degree from `α(β(v)) = v`.
///
/// Writing `β(v) = v·B(v)` with `B = 1 + Σ b_j v^j`, the coefficient of
/// `v^{N+1}` in `α(β(v))` gives
/// `b_N = -Σ_{n=1}^{N} a_n [v^{N-n}] B^{n+1}`, which only involves
/// `b_1..b_{N-1}`. Powers of `B` are extended one coefficient per step.
pub fn revert_series(n: u32) -> Vec<WeightedPoly> {
    let n = n as usize;
    // b[j] is the coefficient of v^j in B
    let mut b: PolySeries = vec![WeightedPoly::one()];
    // powers[j] = B^j, known up to some degree
    let mut powers: Vec<PolySeries> = vec![vec![WeightedPoly::one()], vec![WeightedPoly::one()]];
    for step in 1..=n {
        // bring B^j up to degree step + 1 - j for j = 2..=step+1
        if powers.len() < step + 2 {
            powers.push(vec![WeightedPoly::one()]);
        }
        for j in 2..=step + 1 {
            let d = step + 1 - j;
            while powers[j].len() <= d {
                let deg = powers[j].len();
                let mut c = WeightedPoly::zero();
                for i in 0..=deg {
                    if i < b.len() && deg - i < powers[j - 1].len() {
                        c.add_assign(&powers[j - 1][deg - i].mul(&b[i]));
                    }
                }
                powers[j].push(c);
            }
        }
        let mut next = WeightedPoly::zero();
        for k in 1..=step {
            let term = powers[k + 1][step - k].mul(&WeightedPoly::symbol(k as u32));
            next.add_assign(&term);
        }
        b.push(next.scale(&-Rational::one()));
        // B^1 is B itself
        powers[1] = b.clone();
    }
    b.into_iter().skip(1).collect()
}

/// `b_n = (1/(n+1)!) Σ (-1)^k (n+k)!/(k_1!⋯k_n!) a_1^{k_1}⋯a_n^{k_n}`
/// over `k_1 + 2k_2 + ⋯ + n k_n = n`, `k = Σ k_i`.
pub fn bell_closed_form(n: u32) -> WeightedPoly {
    let mut out = WeightedPoly::zero();
    let norm = rat_int(factorial(n + 1));
    for nu in enumerate(n) {
        let k = nu.len() as u32;
        let denom: Integer = nu.multiplicities().iter().map(|&(_, m)| factorial(m)).product();
        let mut c = Rational::new(factorial(n + k), denom) / &norm;
        if k % 2 == 1 {
            c = -c;
        }
        out.add_term(nu, c);
    }
    out
}

/// Residual of `β(α(u)) - u` up to `u^{n+1}`, using `b_1..b_n` from
/// [`revert_series`]. Returns the lowest power of `u` with a nonzero
/// coefficient, or `None` when everything cancels.
pub fn roundtrip_residual(n: u32) -> Option<u32> {
    let n = n as usize;
    let b = revert_series(n as u32);
    let len = n + 2;
    // α(u) as coefficients of u^0..u^{n+1}
    let mut alpha: PolySeries = vec![WeightedPoly::zero(); len];
    alpha[1] = WeightedPoly::one();
    for k in 1..=n {
        alpha[k + 1] = WeightedPoly::symbol(k as u32);
    }
    let mul = |x: &PolySeries, y: &PolySeries| -> PolySeries {
        let mut out = vec![WeightedPoly::zero(); len];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate().take(len - i) {
                if !yj.is_zero() {
                    out[i + j].add_assign(&xi.mul(yj));
                }
            }
        }
        out
    };
    let mut total = alpha.clone();
    let mut power = alpha.clone();
    for bk in &b {
        power = mul(&power, &alpha);
        for (t, p) in total.iter_mut().zip(&power) {
            if !p.is_zero() {
                t.add_assign(&p.mul(bk));
            }
        }
    }
    total[1].add_term(Partition::empty(), -Rational::one());
    total.iter().position(|c| !c.is_zero()).map(|i| i as u32)
}

/// `C(μ, λ)` for partitions of `k`: the coefficient of `a^λ` in
/// `b^μ = b_{μ_1} ⋯ b_{μ_l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffMatrix {
    k: u32,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    // rows[μ][λ], canonical order on both axes
    rows: Vec<Vec<Integer>>,
}

impl CoeffMatrix {
    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn entry(&self, mu: &Partition, lambda: &Partition) -> Integer {
        match (self.index.get(mu), self.index.get(lambda)) {
            (Some(&i), Some(&j)) => self.rows[i][j].clone(),
            _ => Integer::zero(),
        }
    }

    pub fn rows(&self) -> &[Vec<Integer>] {
        &self.rows
    }

    /// First `(μ, λ)` with `λ >_lex μ` and a nonzero entry, if any.
    pub fn triangularity_violation(&self) -> Option<(Partition, Partition)> {
        for (i, mu) in self.partitions.iter().enumerate() {
            for (j, lam) in self.partitions.iter().enumerate() {
                if lam > mu && !self.rows[i][j].is_zero() {
                    return Some((mu.clone(), lam.clone()));
                }
            }
        }
        None
    }

    /// First `λ` whose diagonal entry differs from `(-1)^{l(λ)}`, if any.
    pub fn diagonal_violation(&self) -> Option<Partition> {
        self.partitions.iter().enumerate().find_map(|(i, lam)| {
            let expect = if lam.len() % 2 == 0 {
                Integer::one()
            } else {
                -Integer::one()
            };
            (self.rows[i][i] != expect).then(|| lam.clone())
        })
    }

    pub fn to_json(&self) -> CoeffMatrixJson {
        CoeffMatrixJson {
            k: self.k,
            rows: self
                .partitions
                .iter()
                .zip(&self.rows)
                .map(|(mu, row)| RowJson {
                    mu: mu.clone(),
                    cols: self
                        .partitions
                        .iter()
                        .zip(row)
                        .map(|(lambda, v)| ColJson {
                            lambda: lambda.clone(),
                            value: v.to_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

/// `{k, rows: [{mu, cols: [{lambda, value}]}]}` in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffMatrixJson {
    pub k: u32,
    pub rows: Vec<RowJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowJson {
    pub mu: Partition,
    pub cols: Vec<ColJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColJson {
    pub lambda: Partition,
    pub value: String,
}

type MatrixCache = RwLock<HashMap<u32, Arc<CoeffMatrix>>>;

fn matrix_cache() -> &'static MatrixCache {
    static CACHE: OnceLock<MatrixCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn c_matrix(k: u32) -> Arc<CoeffMatrix> {
    if let Some(m) = matrix_cache().read().expect("cache poisoned").get(&k) {
        return Arc::clone(m);
    }
    let m = Arc::new(build_c_matrix(k));
    matrix_cache()
        .write()
        .expect("cache poisoned")
        .entry(k)
        .or_insert(m)
        .clone()
}

fn build_c_matrix(k: u32) -> CoeffMatrix {
    let b = revert_series(k);
    let partitions = enumerate(k);
    let index: HashMap<Partition, usize> = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
    // b^μ memoized on the tail μ_2, μ_3, …
    let mut memo: HashMap<Vec<u32>, WeightedPoly> = HashMap::new();
    memo.insert(Vec::new(), WeightedPoly::one());
    fn power(parts: &[u32], b: &[WeightedPoly], memo: &mut HashMap<Vec<u32>, WeightedPoly>) -> WeightedPoly {
        if let Some(hit) = memo.get(parts) {
            return hit.clone();
        }
        let tail = power(&parts[1..], b, memo);
        let value = b[parts[0] as usize - 1].mul(&tail);
        memo.insert(parts.to_vec(), value.clone());
        value
    }
    let rows = partitions
        .iter()
        .map(|mu| {
            let poly = power(mu.parts(), &b, &mut memo);
            let mut row = vec![Integer::zero(); partitions.len()];
            for (e, c) in poly.terms() {
                debug_assert!(c.is_integer());
                row[index[e]] = c.to_integer();
            }
            row
        })
        .collect();
    CoeffMatrix {
        k,
        partitions,
        index,
        rows,
    }
}

/// `g_λ = Σ_μ C(μ, λ) f_μ`, returned in the forgotten basis.
pub fn g_function(lambda: &Partition) -> SymFn {
    let k = lambda.weight();
    let c = c_matrix(k);
    let terms = c
        .partitions()
        .iter()
        .map(|mu| (mu.clone(), rat_int(c.entry(mu, lambda))))
        .collect::<Vec<_>>();
    SymFn::from_terms(k, BasisTag::Forgotten, terms).expect("partitions of one weight")
}

/// `G(λ) = g_λ(1,0,0,…) = Σ_μ C(μ, λ) f_μ(1,0,0,…)` with
/// `f_μ(1,0,0,…) = (-1)^{|μ|-l(μ)} N(μ)`.
pub fn g_value_at_one(lambda: &Partition) -> Integer {
    let c = c_matrix(lambda.weight());
    c.partitions()
        .iter()
        .map(|mu| {
            let n = mu.permutation_count();
            let signed = if (mu.weight() as usize - mu.len()) % 2 == 1 {
                -n
            } else {
                n
            };
            c.entry(mu, lambda) * signed
        })
        .sum()
}

/// `G(λ)` by expanding `g_λ` and evaluating; must agree with
/// [`g_value_at_one`].
pub fn g_value_at_one_by_eval(lambda: &Partition) -> Result<Integer> {
    let v = g_function(lambda).eval_at_one();
    if !v.is_integer() {
        return Err(Error::IdentityFailed(format!("G{lambda} = {v} is not an integer")));
    }
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{catalan, int, rat};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(&[u32], i64)]) -> WeightedPoly {
        let mut out = WeightedPoly::zero();
        for (e, c) in terms {
            out.add_term(p(e), rat(*c, 1));
        }
        out
    }

    #[test]
    fn first_inverse_coefficients() {
        let b = revert_series(4);
        assert_eq!(b[0], poly(&[(&[1], -1)]));
        assert_eq!(b[1], poly(&[(&[2], -1), (&[1, 1], 2)]));
        assert_eq!(b[2], poly(&[(&[3], -1), (&[2, 1], 5), (&[1, 1, 1], -5)]));
        assert_eq!(
            b[3],
            poly(&[
                (&[4], -1),
                (&[3, 1], 6),
                (&[2, 2], 3),
                (&[2, 1, 1], -21),
                (&[1, 1, 1, 1], 14)
            ])
        );
        assert_eq!(b[2].to_string(), "-a_3+5a_1a_2-5a_1^3");
        assert_eq!(b[3].to_string(), "-a_4+6a_1a_3+3a_2^2-21a_1^2a_2+14a_1^4");
    }

    #[test]
    fn closed_form_matches_reversion() {
        assert_eq!(bell_closed_form(1), poly(&[(&[1], -1)]));
        assert_eq!(bell_closed_form(2), poly(&[(&[2], -1), (&[1, 1], 2)]));
        let b = revert_series(10);
        for (i, bn) in b.iter().enumerate() {
            let n = i as u32 + 1;
            assert_eq!(*bn, bell_closed_form(n), "b_{n}");
            assert!(bn.has_integer_coeffs());
            assert_eq!(bn.homogeneous_weight(), Some(n));
            let sign = if n.is_multiple_of(2) { 1 } else { -1 };
            assert_eq!(bn.coeff(&Partition::column(n)), rat_int(catalan(n) * sign));
        }
    }

    #[test]
    fn composition_cancels() {
        assert_eq!(roundtrip_residual(10), None);
    }

    #[test]
    fn c_matrix_small_degrees() {
        let c2 = c_matrix(2);
        assert_eq!(c2.entry(&p(&[2]), &p(&[1, 1])), int(2));
        assert_eq!(c2.entry(&p(&[2]), &p(&[2])), int(-1));
        assert_eq!(c2.entry(&p(&[1, 1]), &p(&[1, 1])), int(1));
        assert_eq!(c2.entry(&p(&[1, 1]), &p(&[2])), int(0));
        assert_eq!(c_matrix(3).entry(&p(&[3]), &p(&[2, 1])), int(5));
        assert_eq!(c_matrix(4).entry(&p(&[2, 1, 1]), &p(&[2, 1, 1])), int(-1));
        for k in 1..=8 {
            let c = c_matrix(k);
            assert_eq!(c.triangularity_violation(), None, "k={k}");
            assert_eq!(c.diagonal_violation(), None, "k={k}");
        }
    }

    #[test]
    fn c_matrix_json_shape() {
        let j = serde_json::to_string(&c_matrix(2).to_json()).unwrap();
        assert_eq!(
            j,
            r#"{"k":2,"rows":[{"mu":[2],"cols":[{"lambda":[2],"value":"-1"},{"lambda":[1,1],"value":"2"}]},{"mu":[1,1],"cols":[{"lambda":[2],"value":"0"},{"lambda":[1,1],"value":"1"}]}]}"#
        );
    }

    fn f_comb(terms: &[(&[u32], i64)], k: u32) -> SymFn {
        SymFn::from_terms(k, BasisTag::Forgotten, terms.iter().map(|(q, c)| (p(q), rat(*c, 1)))).unwrap()
    }

    fn m_comb(terms: &[(&[u32], i64)], k: u32) -> SymFn {
        SymFn::from_terms(k, BasisTag::Monomial, terms.iter().map(|(q, c)| (p(q), rat(*c, 1)))).unwrap()
    }

    #[test]
    fn g_tables() {
        let g11 = g_function(&p(&[1, 1]));
        assert_eq!(g11, f_comb(&[(&[1, 1], 1), (&[2], 2)], 2));
        assert_eq!(g11, m_comb(&[(&[1, 1], 1), (&[2], -1)], 2));
        assert_eq!(g_function(&p(&[2])), m_comb(&[(&[2], 1)], 2));
        assert_eq!(
            g_function(&p(&[1, 1, 1])),
            f_comb(&[(&[1, 1, 1], -1), (&[2, 1], -2), (&[3], -5)], 3)
        );
        assert_eq!(
            g_function(&p(&[1, 1, 1])),
            m_comb(&[(&[1, 1, 1], -1), (&[2, 1], 1), (&[3], -2)], 3)
        );
        assert_eq!(g_function(&p(&[2, 1])), f_comb(&[(&[2, 1], 1), (&[3], 5)], 3));
        assert_eq!(g_function(&p(&[2, 1])), m_comb(&[(&[2, 1], -1), (&[3], 3)], 3));
        assert_eq!(g_function(&p(&[3])), m_comb(&[(&[3], -1)], 3));
        assert_eq!(
            g_function(&p(&[1, 1, 1, 1])),
            f_comb(
                &[
                    (&[1, 1, 1, 1], 1),
                    (&[2, 1, 1], 2),
                    (&[2, 2], 4),
                    (&[3, 1], 5),
                    (&[4], 14)
                ],
                4
            )
        );
        assert_eq!(
            g_function(&p(&[2, 1, 1])),
            f_comb(&[(&[2, 1, 1], -1), (&[2, 2], -4), (&[3, 1], -5), (&[4], -21)], 4)
        );
        assert_eq!(g_function(&p(&[2, 2])), f_comb(&[(&[2, 2], 1), (&[4], 3)], 4));
        // column (3,1) of c_matrix(4): 1 on f_(3,1), 6 on f_(4)
        assert_eq!(g_function(&p(&[3, 1])), f_comb(&[(&[3, 1], 1), (&[4], 6)], 4));
        assert_eq!(g_function(&p(&[4])), f_comb(&[(&[4], -1)], 4));
    }

    #[test]
    fn g_values_at_one() {
        let cases: &[(&[u32], i64)] = &[
            (&[2], 1),
            (&[1, 1], -1),
            (&[3], -1),
            (&[2, 1], 3),
            (&[1, 1, 1], -2),
            (&[4], 1),
            (&[3, 1], -4),
            (&[2, 2], -2),
            (&[2, 1, 1], 10),
            (&[1, 1, 1, 1], -5),
        ];
        for (lam, v) in cases {
            assert_eq!(g_value_at_one(&p(lam)), int(*v), "G{:?}", lam);
        }
        for k in 1..=7 {
            for lam in enumerate(k) {
                assert_eq!(g_value_at_one_by_eval(&lam).unwrap(), g_value_at_one(&lam), "{lam}");
            }
        }
    }

    #[test]
    fn g_functions_are_integral() {
        for k in 1..=8 {
            for lam in enumerate(k) {
                assert!(
                    g_function(&lam).convert(BasisTag::Monomial).has_integer_coeffs(),
                    "g{lam}"
                );
            }
        }
    }
}
