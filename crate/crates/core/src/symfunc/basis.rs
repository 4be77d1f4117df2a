//! Per-degree transition matrices between each basis and the monomial basis.
//!
//! Row `λ` of `to_m` holds the monomial expansion of the basis element
//! `b_λ`; `from_m` is its inverse. Coefficient vectors are row vectors, so
//! `coeffs_m = coeffs_b · to_m`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_traits::{One, Zero};

use super::product::monomial_product;
use super::BasisTag;
use crate::arith::{rat_int, Rational};
use crate::linalg::{self, Matrix};
use crate::partition::{enumerate, Partition};
use crate::reversion;

pub struct Transition {
    pub partitions: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    pub to_m: Matrix,
    pub from_m: Matrix,
}

impl Transition {
    fn new(partitions: Vec<Partition>, to_m: Matrix) -> Self {
        let from_m = linalg::inverse(&to_m).expect("basis transition matrix is invertible");
        let index = partitions.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        Transition {
            partitions,
            index,
            to_m,
            from_m,
        }
    }

    pub fn dim(&self) -> usize {
        self.partitions.len()
    }
}

type Cache = RwLock<HashMap<(BasisTag, u32), Arc<Transition>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn transition(basis: BasisTag, degree: u32) -> Arc<Transition> {
    if let Some(t) = cache().read().expect("cache poisoned").get(&(basis, degree)) {
        return Arc::clone(t);
    }
    let t = Arc::new(build(basis, degree));
    cache()
        .write()
        .expect("cache poisoned")
        .entry((basis, degree))
        .or_insert(t)
        .clone()
}

fn build(basis: BasisTag, degree: u32) -> Transition {
    let parts = enumerate(degree);
    let index: HashMap<&Partition, usize> = parts.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let dim = parts.len();
    let to_m: Matrix = match basis {
        BasisTag::Monomial => linalg::identity(dim),
        BasisTag::Elementary => multiplicative_rows(&parts, &index, |n| vec![(Partition::column(n), Rational::one())]),
        BasisTag::Complete => multiplicative_rows(&parts, &index, |n| {
            enumerate(n).into_iter().map(|p| (p, Rational::one())).collect()
        }),
        BasisTag::PowerSum => multiplicative_rows(&parts, &index, |n| vec![(Partition::row(n), Rational::one())]),
        BasisTag::Forgotten => {
            // f_λ = ω(m_λ): m → p, sign (-1)^{|ν|-l(ν)} on p_ν, p → m
            let p = transition(BasisTag::PowerSum, degree);
            let signed: Matrix = p
                .from_m
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&p.partitions)
                        .map(|(x, nu)| if omega_sign(nu) { -x } else { x.clone() })
                        .collect()
                })
                .collect();
            linalg::multiply(&signed, &p.to_m)
        }
        BasisTag::GNew => {
            // g_λ = Σ_μ C(μ, λ) f_μ, C(μ, λ) = [a^λ] b^μ
            let f = transition(BasisTag::Forgotten, degree);
            let c = reversion::c_matrix(degree);
            parts
                .iter()
                .map(|lam| {
                    let coeffs: Vec<Rational> = parts.iter().map(|mu| rat_int(c.entry(mu, lam))).collect();
                    linalg::apply(&coeffs, &f.to_m)
                })
                .collect()
        }
    };
    Transition::new(parts, to_m)
}

/// `true` when ω flips the sign of `p_ν`.
pub(crate) fn omega_sign(nu: &Partition) -> bool {
    (nu.weight() as usize - nu.len()) % 2 == 1
}

/// Rows for a multiplicative basis `b_λ = b_{λ_1} ⋯ b_{λ_l}` given the
/// monomial expansion of each generator `b_n`.
fn multiplicative_rows<G>(parts: &[Partition], index: &HashMap<&Partition, usize>, generator: G) -> Matrix
where
    G: Fn(u32) -> Vec<(Partition, Rational)>,
{
    let dim = parts.len();
    parts
        .iter()
        .map(|lam| {
            let mut acc: Vec<(Partition, Rational)> = vec![(Partition::empty(), Rational::one())];
            for &n in lam.parts() {
                let gen = generator(n);
                let mut next: HashMap<Partition, Rational> = HashMap::new();
                for (a, x) in &acc {
                    for (b, y) in &gen {
                        let xy = x * y;
                        for (nu, c) in monomial_product(a, b).iter() {
                            *next.entry(nu.clone()).or_insert_with(Rational::zero) += &xy * rat_int(c.clone());
                        }
                    }
                }
                acc = next.into_iter().filter(|(_, v)| !v.is_zero()).collect();
            }
            let mut row = vec![Rational::zero(); dim];
            for (nu, v) in acc {
                row[index[&nu]] = v;
            }
            row
        })
        .collect()
}
