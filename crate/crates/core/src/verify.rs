//! Invariant checks over bounded ranges.
//!
//! Each check scans its range in increasing order and stops at the first
//! failure, so a reported counterexample is the smallest failing input.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::arith::{bernoulli_ref, catalan, factorial, int, rat, rat_int, Integer, PrimePowerMap, Rational};
use crate::error::{Error, Result};
use crate::genera::{
    denominator_of, l_gf, norlund_eval, todd_forgotten, todd_g, todd_gf, todd_series, x_over_tanh_series,
};
use crate::linalg;
use crate::numbers::{
    bernoulli_partition_factorial, bernoulli_partition_g, bernoulli_stirling, buchstaber, hirzebruch_factorization,
    hirzebruch_lcm_factorial, hirzebruch_lcm_plain, hirzebruch_prime, l_denominator_lcm, l_denominator_prime,
    l_from_hirzebruch, von_staudt_clausen,
};
use crate::partition::{enumerate, Partition};
use crate::render::{MISPRINT_G31, MISPRINT_T6};
use crate::reversion::{
    bell_closed_form, c_matrix, g_function, g_value_at_one, g_value_at_one_by_eval, revert_series, roundtrip_residual,
    WeightedPoly,
};
use crate::symfunc::{forgotten, forgotten_combinatorial, transition, BasisTag, SymFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Partitions,
    Symfunc,
    Series,
    Todd,
    Hirzebruch,
    Ldenom,
    Buchstaber,
    Bernoulli,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Partitions,
        Suite::Symfunc,
        Suite::Series,
        Suite::Todd,
        Suite::Hirzebruch,
        Suite::Ldenom,
        Suite::Buchstaber,
        Suite::Bernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Partitions => "partitions",
            Suite::Symfunc => "symfunc",
            Suite::Series => "series",
            Suite::Todd => "todd",
            Suite::Hirzebruch => "hirzebruch",
            Suite::Ldenom => "ldenom",
            Suite::Buchstaber => "buchstaber",
            Suite::Bernoulli => "bernoulli",
        }
    }

    /// Default bound used when no `max_k` is given.
    pub fn default_max_k(self) -> u32 {
        match self {
            Suite::Partitions => 30,
            Suite::Symfunc => 8,
            Suite::Series => 10,
            Suite::Todd => 10,
            Suite::Hirzebruch => 60,
            Suite::Ldenom => 30,
            Suite::Buchstaber => 15,
            Suite::Bernoulli => 20,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Unknown {
                kind: "suite",
                name: s.to_string(),
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub range: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
    pub status: String,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Runs the selected suites (all when empty), each bounded by `max_k` or its
/// default. Suites run concurrently; the report keeps suite order.
pub fn run(suites: &[Suite], max_k: Option<u32>) -> VerifyReport {
    let suites: Vec<Suite> = if suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        suites.to_vec()
    };
    let per_suite: Vec<Vec<Check>> = std::thread::scope(|scope| {
        let handles: Vec<_> = suites
            .iter()
            .map(|&s| scope.spawn(move || run_suite(s, max_k.unwrap_or_else(|| s.default_max_k()))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("verify suite panicked"))
            .collect()
    });
    let checks: Vec<Check> = per_suite.into_iter().flatten().collect();
    let mut notes = Vec::new();
    if suites.contains(&Suite::Todd) {
        notes.push(MISPRINT_T6.to_string());
    }
    if suites.contains(&Suite::Series) {
        notes.push(MISPRINT_G31.to_string());
    }
    let status = if checks.iter().all(|c| c.passed) {
        "pass"
    } else {
        "fail"
    };
    VerifyReport {
        checks,
        notes,
        status: status.to_string(),
    }
}

pub fn run_suite(suite: Suite, bound: u32) -> Vec<Check> {
    let mut ctx = Ctx {
        suite,
        checks: Vec::new(),
    };
    match suite {
        Suite::Partitions => partitions_suite(&mut ctx, bound),
        Suite::Symfunc => symfunc_suite(&mut ctx, bound),
        Suite::Series => series_suite(&mut ctx, bound),
        Suite::Todd => todd_suite(&mut ctx, bound),
        Suite::Hirzebruch => hirzebruch_suite(&mut ctx, bound),
        Suite::Ldenom => ldenom_suite(&mut ctx, bound),
        Suite::Buchstaber => buchstaber_suite(&mut ctx, bound),
        Suite::Bernoulli => bernoulli_suite(&mut ctx, bound),
    }
    ctx.checks
}

type Outcome = std::result::Result<(), String>;

fn expect_eq<T: PartialEq + fmt::Display>(what: &str, got: T, want: T) -> Outcome {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got}, expected {want}"))
    }
}

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

struct Ctx {
    suite: Suite,
    checks: Vec<Check>,
}

impl Ctx {
    /// Checks `test` on each item in order, recording the first failure.
    fn scan<T, I, F>(&mut self, name: &str, range: String, items: I, mut test: F)
    where
        I: IntoIterator<Item = T>,
        T: fmt::Display,
        F: FnMut(&T) -> Outcome,
    {
        let mut counterexample = None;
        for item in items {
            if let Err(detail) = test(&item) {
                counterexample = Some(format!("{item}: {detail}"));
                break;
            }
        }
        self.checks.push(Check {
            suite: self.suite,
            name: name.to_string(),
            range,
            passed: counterexample.is_none(),
            counterexample,
        });
    }

    fn single<F: FnOnce() -> Outcome>(&mut self, name: &str, range: &str, test: F) {
        let outcome = test();
        self.checks.push(Check {
            suite: self.suite,
            name: name.to_string(),
            range: range.to_string(),
            passed: outcome.is_ok(),
            counterexample: outcome.err(),
        });
    }
}

fn upto(n: u32) -> String {
    format!("k <= {n}")
}

/// Euler's pentagonal recurrence.
fn pentagonal_counts(n: u32) -> Vec<Integer> {
    let n = n as usize;
    let mut p = vec![Integer::zero(); n + 1];
    p[0] = Integer::one();
    for m in 1..=n {
        let mut acc = Integer::zero();
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let sign_plus = j % 2 == 1;
            let mut term = p[m - g1].clone();
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                term += &p[m - g2];
            }
            if sign_plus {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p[m] = acc;
    }
    p
}

fn partitions_suite(ctx: &mut Ctx, bound: u32) {
    let counts = pentagonal_counts(bound);
    ctx.scan("partition-count", upto(bound), 0..=bound, |&k| {
        expect_eq("count", Integer::from(enumerate(k).len()), counts[k as usize].clone())
    });
    let small = bound.min(20);
    ctx.scan("canonical-order", upto(small), 0..=small, |&k| {
        let parts = enumerate(k);
        for w in parts.windows(2) {
            ensure(w[0].parts() > w[1].parts(), || format!("{} not before {}", w[0], w[1]))?;
        }
        for lam in &parts {
            ensure(lam.weight() == k, || format!("{lam} has weight {}", lam.weight()))?;
        }
        Ok(())
    });
    ctx.scan("conjugate-involution", upto(small), 0..=small, |&k| {
        for lam in enumerate(k) {
            let c = lam.conjugate();
            ensure(c.weight() == k && c.conjugate() == lam, || format!("{lam}"))?;
        }
        Ok(())
    });
}

fn generator(b: BasisTag, lam: &Partition) -> SymFn {
    SymFn::generator(b, lam.clone())
}

fn symfunc_suite(ctx: &mut Ctx, bound: u32) {
    ctx.scan("omega-involution", upto(bound), 0..=bound, |&k| {
        for lam in enumerate(k) {
            let m = generator(BasisTag::Monomial, &lam);
            ensure(m.omega().omega() == m, || format!("m_{lam}"))?;
        }
        Ok(())
    });
    ctx.scan("omega-e-to-h", upto(bound), 1..=bound, |&k| {
        let e = generator(BasisTag::Elementary, &Partition::row(k));
        let h = generator(BasisTag::Complete, &Partition::row(k));
        ensure(e.omega() == h, || "omega(e_k) != h_k".into())
    });
    ctx.scan("omega-ring-map", upto(bound), 2..=bound, |&k| {
        for i in 1..k {
            for a in enumerate(i) {
                for b in enumerate(k - i) {
                    let ma = generator(BasisTag::Monomial, &a);
                    let mb = generator(BasisTag::Monomial, &b);
                    let lhs = ma.multiply(&mb).omega();
                    let rhs = ma.omega().multiply(&mb.omega());
                    ensure(lhs == rhs, || format!("m_{a} * m_{b}"))?;
                }
            }
        }
        Ok(())
    });
    ctx.scan("forgotten-two-algorithms", upto(bound), 0..=bound, |&k| {
        for lam in enumerate(k) {
            ensure(forgotten(&lam) == forgotten_combinatorial(&lam), || format!("f_{lam}"))?;
        }
        Ok(())
    });
    let dual = bound + 2;
    ctx.scan("e-h-duality", upto(dual), 1..=dual, |&k| {
        let mut acc = SymFn::zero(k, BasisTag::Monomial);
        for i in 0..=k {
            let e = if i == 0 {
                SymFn::one()
            } else {
                generator(BasisTag::Elementary, &Partition::row(i))
            };
            let h = if i == k {
                SymFn::one()
            } else {
                generator(BasisTag::Complete, &Partition::row(k - i))
            };
            let term = e.multiply(&h);
            acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) }.map_err(|e| e.to_string())?;
        }
        ensure(acc.is_zero(), || "alternating sum is nonzero".into())
    });
    ctx.scan("unimodular-transitions", upto(bound), 0..=bound, |&k| {
        for b in BasisTag::INTEGRAL {
            let t = transition(b, k);
            ensure(linalg::is_integral(&t.to_m) && linalg::is_integral(&t.from_m), || {
                format!("{b}: non-integer entry")
            })?;
            let det = linalg::determinant(&t.to_m).abs();
            ensure(det.is_one(), || format!("{b}: |det| = {det}"))?;
        }
        Ok(())
    });
    ctx.scan("faithful-k-variable-model", upto(bound), 1..=bound, |&k| {
        // m_μ survives in d variables iff l(μ) ≤ d; e-images must span in d = k
        // and lose rank in d = k - 1
        let t = transition(BasisTag::Elementary, k);
        let restrict = |d: usize| -> linalg::Matrix {
            t.to_m
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(&t.partitions)
                        .filter(|(_, mu)| mu.len() <= d)
                        .map(|(x, _)| x.clone())
                        .collect()
                })
                .collect()
        };
        let full = t.dim();
        expect_eq("rank in k variables", linalg::rank(&restrict(k as usize)), full)?;
        expect_eq(
            "rank in k-1 variables",
            linalg::rank(&restrict(k as usize - 1)),
            full - 1,
        )
    });
    ctx.scan("forgotten-at-one", upto(bound), 1..=bound, |&k| {
        for lam in enumerate(k) {
            let n = lam.permutation_count();
            let signed = if (k as usize - lam.len()) % 2 == 1 { -n } else { n };
            expect_eq(
                &format!("f_{lam}(1,0,...)"),
                forgotten(&lam).eval_at_one(),
                rat_int(signed),
            )?;
        }
        Ok(())
    });
}

fn wpoly(terms: &[(&[u32], i64)]) -> WeightedPoly {
    let mut p = WeightedPoly::zero();
    for (parts, c) in terms {
        p.add_term(Partition::new(parts.to_vec()).expect("valid"), rat(*c, 1));
    }
    p
}

fn f_terms(k: u32, terms: &[(&[u32], i64)]) -> SymFn {
    SymFn::from_terms(
        k,
        BasisTag::Forgotten,
        terms
            .iter()
            .map(|(q, c)| (Partition::new(q.to_vec()).expect("valid"), rat(*c, 1))),
    )
    .expect("weight k")
}

/// `(λ, g_λ in f)` for weights 2, 3, 4, with the (3,1) row corrected.
pub fn g_golden() -> Vec<(Partition, SymFn)> {
    type Row<'a> = (&'a [u32], u32, Vec<(&'a [u32], i64)>);
    let rows: Vec<Row> = vec![
        (&[1, 1], 2, vec![(&[1, 1], 1), (&[2], 2)]),
        (&[2], 2, vec![(&[2], -1)]),
        (&[1, 1, 1], 3, vec![(&[1, 1, 1], -1), (&[2, 1], -2), (&[3], -5)]),
        (&[2, 1], 3, vec![(&[2, 1], 1), (&[3], 5)]),
        (&[3], 3, vec![(&[3], -1)]),
        (
            &[1, 1, 1, 1],
            4,
            vec![
                (&[1, 1, 1, 1], 1),
                (&[2, 1, 1], 2),
                (&[2, 2], 4),
                (&[3, 1], 5),
                (&[4], 14),
            ],
        ),
        (
            &[2, 1, 1],
            4,
            vec![(&[2, 1, 1], -1), (&[2, 2], -4), (&[3, 1], -5), (&[4], -21)],
        ),
        (&[2, 2], 4, vec![(&[2, 2], 1), (&[4], 3)]),
        (&[3, 1], 4, vec![(&[3, 1], 1), (&[4], 6)]),
        (&[4], 4, vec![(&[4], -1)]),
    ];
    rows.into_iter()
        .map(|(lam, k, terms)| (Partition::new(lam.to_vec()).expect("valid"), f_terms(k, &terms)))
        .collect()
}

fn series_suite(ctx: &mut Ctx, bound: u32) {
    ctx.single("reversion-b1-b4", "n <= 4", || {
        let b = revert_series(4);
        let want = [
            wpoly(&[(&[1], -1)]),
            wpoly(&[(&[2], -1), (&[1, 1], 2)]),
            wpoly(&[(&[3], -1), (&[2, 1], 5), (&[1, 1, 1], -5)]),
            wpoly(&[
                (&[4], -1),
                (&[3, 1], 6),
                (&[2, 2], 3),
                (&[2, 1, 1], -21),
                (&[1, 1, 1, 1], 14),
            ]),
        ];
        for (i, (got, want)) in b.iter().zip(&want).enumerate() {
            expect_eq(&format!("b_{}", i + 1), got, want)?;
        }
        Ok(())
    });
    let b = revert_series(bound);
    ctx.scan("bell-closed-form", format!("n <= {bound}"), 1..=bound, |&n| {
        expect_eq("b_n", &bell_closed_form(n), &b[n as usize - 1])
    });
    ctx.scan("catalan-coefficient", format!("n <= {bound}"), 1..=bound, |&n| {
        let c = catalan(n);
        let want = if n % 2 == 1 { -c } else { c };
        expect_eq(
            "[a_1^n] b_n",
            b[n as usize - 1].coeff(&Partition::column(n)),
            rat_int(want),
        )
    });
    ctx.scan("integer-coefficients", format!("n <= {bound}"), 1..=bound, |&n| {
        ensure(b[n as usize - 1].has_integer_coeffs(), || {
            "non-integer coefficient".into()
        })
    });
    ctx.single(
        "compositional-roundtrip",
        &format!("n <= {bound}"),
        || match roundtrip_residual(bound) {
            None => Ok(()),
            Some(d) => Err(format!("residual at u^{d}")),
        },
    );
    ctx.scan("cmatrix-triangular", upto(bound), 0..=bound, |&k| {
        let c = c_matrix(k);
        if let Some((mu, lam)) = c.triangularity_violation() {
            return Err(format!("C({mu},{lam}) != 0 above the diagonal"));
        }
        match c.diagonal_violation() {
            Some(lam) => Err(format!("C({lam},{lam}) != (-1)^l")),
            None => Ok(()),
        }
    });
    ctx.single("g-golden-tables", "k in {2,3,4}", || {
        for (lam, want) in g_golden() {
            ensure(g_function(&lam) == want, || format!("g_{lam}"))?;
        }
        Ok(())
    });
    let g_bound = bound.min(8);
    ctx.scan("g-at-one-two-routes", upto(g_bound), 1..=g_bound, |&k| {
        for lam in enumerate(k) {
            let eval = g_value_at_one_by_eval(&lam).map_err(|e| e.to_string())?;
            expect_eq(&format!("G{lam}"), g_value_at_one(&lam), eval)?;
        }
        Ok(())
    });
}

fn e_poly(k: u32, den: i64, terms: &[(&[u32], i64)]) -> SymFn {
    SymFn::from_terms(
        k,
        BasisTag::Elementary,
        terms
            .iter()
            .map(|(q, c)| (Partition::new(q.to_vec()).expect("valid"), rat(*c, den))),
    )
    .expect("weight k")
}

/// `T_0..T_6` in Chern classes, `T_6` with the `c_1^2c_4` term.
pub fn todd_golden() -> Vec<SymFn> {
    vec![
        SymFn::one(),
        e_poly(1, 2, &[(&[1], 1)]),
        e_poly(2, 12, &[(&[1, 1], 1), (&[2], 1)]),
        e_poly(3, 24, &[(&[2, 1], 1)]),
        e_poly(
            4,
            720,
            &[
                (&[1, 1, 1, 1], -1),
                (&[2, 1, 1], 4),
                (&[2, 2], 3),
                (&[3, 1], 1),
                (&[4], -1),
            ],
        ),
        e_poly(
            5,
            1440,
            &[(&[2, 1, 1, 1], -1), (&[2, 2, 1], 3), (&[3, 1, 1], 1), (&[4, 1], -1)],
        ),
        e_poly(
            6,
            60480,
            &[
                (&[1, 1, 1, 1, 1, 1], 2),
                (&[2, 1, 1, 1, 1], -12),
                (&[2, 2, 1, 1], 11),
                (&[2, 2, 2], 10),
                (&[3, 1, 1, 1], 5),
                (&[3, 2, 1], 11),
                (&[3, 3], -1),
                (&[4, 1, 1], -5),
                (&[4, 2], -9),
                (&[5, 1], -2),
                (&[6], 2),
            ],
        ),
    ]
}

/// `L_0..L_4` in Pontryagin classes.
pub fn l_golden() -> Vec<SymFn> {
    vec![
        SymFn::one(),
        e_poly(1, 3, &[(&[1], 1)]),
        e_poly(2, 45, &[(&[2], 7), (&[1, 1], -1)]),
        e_poly(3, 945, &[(&[3], 62), (&[2, 1], -13), (&[1, 1, 1], 2)]),
        e_poly(
            4,
            14175,
            &[
                (&[4], 381),
                (&[3, 1], -71),
                (&[2, 2], -19),
                (&[2, 1, 1], 22),
                (&[1, 1, 1, 1], -3),
            ],
        ),
    ]
}

fn todd_suite(ctx: &mut Ctx, bound: u32) {
    let golden = todd_golden();
    ctx.scan("todd-golden", "k <= 6".into(), 0..golden.len() as u32, |&k| {
        ensure(todd_gf(k).polynomial == golden[k as usize], || {
            "differs from table".into()
        })
    });
    ctx.scan("todd-three-way", upto(bound), 0..=bound, |&k| {
        let gf = todd_gf(k).polynomial;
        ensure(todd_forgotten(k).polynomial == gf, || "gf != forgotten".into())?;
        ensure(todd_g(k).polynomial == gf, || "gf != gbasis".into())
    });
    ctx.scan("todd-denominator-hirzebruch", upto(bound), 0..=bound, |&k| {
        expect_eq("denominator", todd_gf(k).denominator, hirzebruch_prime(k))
    });
    ctx.scan("denominator-basis-independent", upto(bound), 0..=bound, |&k| {
        let t = todd_gf(k).polynomial;
        let reference = denominator_of(&t).map_err(|e| e.to_string())?;
        for b in BasisTag::INTEGRAL {
            let d = denominator_of(&t.convert(b)).map_err(|e| e.to_string())?;
            expect_eq(&format!("denominator in {b}"), d, reference.clone())?;
        }
        Ok(())
    });
    let tb = bound + 2;
    ctx.scan("todd-at-one-bernoulli", upto(tb), 0..=tb, |&k| {
        let b = bernoulli_ref(k) / rat_int(factorial(k));
        let want = if k % 2 == 1 { -b } else { b };
        expect_eq("T_k(1,0,...)", todd_gf(k).polynomial.eval_at_one(), want)
    });
    let nb = bound.min(5);
    ctx.scan("norlund-consistency", format!("n <= {nb}, k <= n"), 1..=nb, |&n| {
        let mut rng = ChaCha8Rng::seed_from_u64(u64::from(n));
        for trial in 0..3 {
            let x: Vec<Rational> = (0..n)
                .map(|_| Rational::new(int(rng.gen_range(-9..=9)), int(rng.gen_range(1..=5))))
                .collect();
            for k in 0..=n {
                let lhs = todd_gf(k).polynomial.eval_at(&x) * rat_int(factorial(k));
                let b = norlund_eval(&x, k);
                let rhs = if k % 2 == 1 { -b } else { b };
                let point: Vec<String> = x.iter().map(|v| v.to_string()).collect();
                expect_eq(&format!("trial {trial}, k = {k}, x = ({})", point.join(",")), lhs, rhs)?;
            }
        }
        Ok(())
    });
    ctx.scan(
        "odd-degree-no-pure-c1",
        format!("odd 3 <= k <= {bound}"),
        (3..=bound).step_by(2),
        |&k| {
            let c = todd_gf(k).polynomial.coeff(&Partition::column(k));
            ensure(c.is_zero(), || format!("coefficient of c_1^k is {c}"))
        },
    );
    let qb = bound + 2;
    ctx.single("todd-series-kernel", &format!("n <= {qb}"), || {
        let q = todd_series(qb as usize + 1);
        for n in 0..=qb {
            let b = if n == 1 { -bernoulli_ref(1) } else { bernoulli_ref(n) };
            expect_eq(
                &format!("[x^{n}] x/(1-e^-x)"),
                q.coeff(n as usize),
                b / rat_int(factorial(n)),
            )?;
        }
        Ok(())
    });
}

fn hirzebruch_suite(ctx: &mut Ctx, bound: u32) {
    ctx.scan("hirzebruch-three-way", upto(bound), 0..=bound, |&k| {
        let h = hirzebruch_prime(k);
        expect_eq("lcm of factorials", hirzebruch_lcm_factorial(k), h.clone())?;
        expect_eq("lcm of plain products", hirzebruch_lcm_plain(k), h)
    });
    ctx.single("hirzebruch-first-values", "k <= 6", || {
        let want = [1, 2, 12, 24, 720, 1440, 60480];
        for (k, w) in want.iter().enumerate() {
            expect_eq(&format!("h_{k}"), hirzebruch_prime(k as u32), int(*w))?;
        }
        Ok(())
    });
    ctx.scan(
        "hirzebruch-doubling",
        format!("2k+1 <= {bound}"),
        0..=bound.saturating_sub(1) / 2,
        |&k| expect_eq("h_{2k+1}", hirzebruch_prime(2 * k + 1), hirzebruch_prime(2 * k) * 2u32),
    );
    ctx.scan("prime-exponent-witness", upto(bound), 1..=bound, |&k| {
        let f = hirzebruch_factorization(k);
        for &(p, e) in f.pairs() {
            let m = k / (p - 1);
            let r = k - m * (p - 1);
            let mut parts = vec![p - 1; m as usize];
            if r > 0 {
                parts.push(r);
            }
            let lam = Partition::new(parts).map_err(|e| e.to_string())?;
            let (_, plain, _) = lam.shifted_products();
            let got = PrimePowerMap::factorize(&plain)
                .map_err(|e| e.to_string())?
                .exponent_of(p);
            expect_eq(&format!("p = {p}, witness {lam}"), got, e)?;
            expect_eq(&format!("p = {p}, exponent"), e, m)?;
        }
        Ok(())
    });
}

fn ldenom_suite(ctx: &mut Ctx, bound: u32) {
    let golden = l_golden();
    ctx.scan("l-golden", "k <= 4".into(), 0..golden.len() as u32, |&k| {
        ensure(l_gf(k).polynomial == golden[k as usize], || "differs from table".into())
    });
    let pb = bound.min(5);
    ctx.scan("l-polynomial-denominator", upto(pb), 0..=pb, |&k| {
        expect_eq("denominator of L_k", l_gf(k).denominator, l_denominator_prime(k))
    });
    ctx.scan("l-denominator-three-way", upto(bound), 0..=bound, |&k| {
        let prime = l_denominator_prime(k);
        expect_eq("lcm", l_denominator_lcm(k), prime.clone())?;
        expect_eq("from h_2k", l_from_hirzebruch(k).map_err(|e| e.to_string())?, prime)
    });
    let sb = 2 * bound + 1;
    ctx.single("x-over-tanh-even", &format!("n <= {sb}"), || {
        let s = x_over_tanh_series(sb as usize + 1);
        for n in (1..=sb).step_by(2) {
            let c = s.coeff(n as usize);
            ensure(c.is_zero(), || format!("[x^{n}] = {c}"))?;
        }
        Ok(())
    });
}

fn buchstaber_suite(ctx: &mut Ctx, bound: u32) {
    ctx.scan("buchstaber-table", "n <= 16".into(), 1..=16u32, |&n| {
        let want = [1, 3, 45, 945][(n as usize - 1) / 4];
        expect_eq("b_n", buchstaber(n).map_err(|e| e.to_string())?, int(want))
    });
    ctx.scan("buchstaber-plateau", upto(bound), 0..=bound, |&k| {
        let mu = l_denominator_prime(k);
        let via_h = hirzebruch_prime(2 * k) >> (2 * k);
        expect_eq("2^-2k h_2k", via_h, mu.clone())?;
        for j in 1..=4 {
            let n = 4 * k + j;
            expect_eq(&format!("b_{n}"), buchstaber(n).map_err(|e| e.to_string())?, mu.clone())?;
        }
        Ok(())
    });
}

fn bernoulli_suite(ctx: &mut Ctx, bound: u32) {
    ctx.scan("bernoulli-four-way", upto(bound), 0..=bound, |&k| {
        let b = bernoulli_ref(k);
        expect_eq("stirling", bernoulli_stirling(k), b.clone())?;
        expect_eq("partition-factorial", bernoulli_partition_factorial(k), b.clone())?;
        expect_eq("partition-g", bernoulli_partition_g(k), b)
    });
    ctx.single("bernoulli-12", "k = 12", || {
        expect_eq("B_12", bernoulli_ref(12), rat(-691, 2730))
    });
    ctx.scan(
        "bernoulli-odd-zero",
        format!("odd 3 <= k <= {bound}"),
        (3..=bound).step_by(2),
        |&k| {
            let b = bernoulli_ref(k);
            ensure(b.is_zero(), || format!("B_k = {b}"))
        },
    );
    let vb = (bound * 3 / 4).max(1);
    ctx.scan("von-staudt-clausen", format!("n <= {vb}"), 1..=vb, |&n| {
        let sc = von_staudt_clausen(2 * n).map_err(|e| e.to_string())?;
        let q: Integer = sc.primes.iter().map(|&p| Integer::from(p)).product();
        expect_eq("denominator of B_2n", bernoulli_ref(2 * n).denom().clone(), q)
    });
    ctx.scan("bernoulli-denominator-divides-h", format!("n <= {vb}"), 1..=vb, |&n| {
        let q = bernoulli_ref(2 * n).denom().clone();
        let h = hirzebruch_prime(2 * n);
        ensure(h.is_multiple_of(&q), || format!("{q} does not divide {h}"))
    });
}
