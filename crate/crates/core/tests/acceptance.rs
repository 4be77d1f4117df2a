//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};

use genera_core::arith::{bernoulli_ref, catalan, factorial, int, rat, rat_int, Integer, Rational};
use genera_core::genera::{denominator_of, l_gf, todd_forgotten, todd_g, todd_gf};
use genera_core::linalg;
use genera_core::numbers::{
    bernoulli_partition_factorial, bernoulli_partition_g, bernoulli_stirling, buchstaber, hirzebruch_lcm_factorial,
    hirzebruch_lcm_plain, hirzebruch_prime, l_denominator_lcm, l_denominator_prime, l_from_hirzebruch,
    von_staudt_clausen,
};
use genera_core::partition::{enumerate, Partition};
use genera_core::reversion::{bell_closed_form, c_matrix, g_function, revert_series, WeightedPoly};
use genera_core::symfunc::{forgotten, forgotten_combinatorial, transition};
use genera_core::verify;
use genera_core::{BasisTag, SymFn};

type Outcome = Result<(), String>;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let t = start.elapsed();
    check(t < limit, || format!("{what} took {t:?}, limit {limit:?}"))
}

fn sf(k: u32, basis: BasisTag, den: i64, terms: &[(&[u32], i64)]) -> SymFn {
    SymFn::from_terms(k, basis, terms.iter().map(|(q, c)| (p(q), rat(*c, den)))).expect("weight k")
}

fn chern(k: u32, den: i64, terms: &[(&[u32], i64)]) -> SymFn {
    sf(k, BasisTag::Elementary, den, terms)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let todd = [
        SymFn::one(),
        chern(1, 2, &[(&[1], 1)]),
        chern(2, 12, &[(&[1, 1], 1), (&[2], 1)]),
        chern(3, 24, &[(&[2, 1], 1)]),
        chern(
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
        chern(
            5,
            1440,
            &[(&[2, 1, 1, 1], -1), (&[2, 2, 1], 3), (&[3, 1, 1], 1), (&[4, 1], -1)],
        ),
        chern(
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
                // printed as c_1^2c_5, which is not of degree 6
                (&[4, 1, 1], -5),
                (&[4, 2], -9),
                (&[5, 1], -2),
                (&[6], 2),
            ],
        ),
    ];
    for (k, want) in todd.iter().enumerate() {
        check(todd_gf(k as u32).polynomial == *want, || {
            format!("T_{k} differs from the table")
        })?;
    }
    let l = [
        SymFn::one(),
        chern(1, 3, &[(&[1], 1)]),
        chern(2, 45, &[(&[2], 7), (&[1, 1], -1)]),
        chern(3, 945, &[(&[3], 62), (&[2, 1], -13), (&[1, 1, 1], 2)]),
        chern(
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
    ];
    for (k, want) in l.iter().enumerate() {
        check(l_gf(k as u32).polynomial == *want, || {
            format!("L_{k} differs from the table")
        })?;
    }
    within(start, Duration::from_secs(10), "golden tables")
}

fn three_way(k: u32) -> Outcome {
    let gf = todd_gf(k).polynomial;
    check(todd_forgotten(k).polynomial == gf, || {
        format!("k = {k}: gf != forgotten")
    })?;
    check(todd_g(k).polynomial == gf, || format!("k = {k}: gf != gbasis"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for k in 0..=6 {
        three_way(k)?;
    }
    within(start, Duration::from_secs(10), "three-way agreement for k <= 6")?;
    for k in 7..=10 {
        three_way(k)?;
    }
    within(start, Duration::from_secs(300), "three-way agreement for k <= 10")
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for k in 0..=10 {
        let d = denominator_of(&todd_gf(k).polynomial).map_err(|e| e.to_string())?;
        check(d == hirzebruch_prime(k), || format!("mu(T_{k}) = {d}"))?;
    }
    let listed = [1, 2, 12, 24, 720, 1440, 60480];
    for (k, v) in listed.iter().enumerate() {
        check(hirzebruch_prime(k as u32) == int(*v), || format!("h_{k}"))?;
    }
    for k in 0..=60 {
        let h = hirzebruch_prime(k);
        check(hirzebruch_lcm_factorial(k) == h, || {
            format!("lcm of factorials at k = {k}")
        })?;
        check(hirzebruch_lcm_plain(k) == h, || {
            format!("lcm of plain products at k = {k}")
        })?;
    }
    for k in 0..30 {
        check(hirzebruch_prime(2 * k + 1) == hirzebruch_prime(2 * k) * 2u32, || {
            format!("h_{} != 2 h_{}", 2 * k + 1, 2 * k)
        })?;
    }
    within(start, Duration::from_secs(30), "Hirzebruch identities")
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let from_h = |k: u32| -> Integer {
        let (q, r) = hirzebruch_prime(2 * k).div_rem(&(Integer::one() << (2 * k)));
        assert!(r.is_zero());
        q
    };
    for k in 0..=5 {
        let d = denominator_of(&l_gf(k).polynomial).map_err(|e| e.to_string())?;
        check(d == l_denominator_prime(k), || format!("mu(L_{k}) = {d}"))?;
    }
    for k in 0..=30 {
        let prime = l_denominator_prime(k);
        check(l_denominator_lcm(k) == prime, || format!("lcm route at k = {k}"))?;
        check(from_h(k) == prime, || format!("h_2k / 2^2k at k = {k}"))?;
        check(l_from_hirzebruch(k).map_err(|e| e.to_string())? == prime, || {
            format!("library h route at k = {k}")
        })?;
    }
    within(start, Duration::from_secs(30), "L denominators")
}

fn poly(terms: &[(&[u32], i64)]) -> WeightedPoly {
    let mut w = WeightedPoly::zero();
    for (q, c) in terms {
        w.add_term(p(q), rat(*c, 1));
    }
    w
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let b = revert_series(10);
    let table = [
        poly(&[(&[1], -1)]),
        poly(&[(&[2], -1), (&[1, 1], 2)]),
        poly(&[(&[3], -1), (&[2, 1], 5), (&[1, 1, 1], -5)]),
        poly(&[
            (&[4], -1),
            (&[3, 1], 6),
            (&[2, 2], 3),
            (&[2, 1, 1], -21),
            (&[1, 1, 1, 1], 14),
        ]),
    ];
    for (i, want) in table.iter().enumerate() {
        check(b[i] == *want, || format!("b_{} = {}", i + 1, b[i]))?;
    }
    for n in 1..=10u32 {
        let bn = &b[n as usize - 1];
        check(bell_closed_form(n) == *bn, || format!("Bell form differs at n = {n}"))?;
        let c = catalan(n);
        let want = if n % 2 == 1 { -c } else { c };
        check(bn.coeff(&Partition::column(n)) == rat_int(want), || {
            format!("a_1^n coefficient at n = {n}")
        })?;
        check(bn.has_integer_coeffs(), || {
            format!("b_{n} has a non-integer coefficient")
        })?;
    }
    within(start, Duration::from_secs(60), "series reversion")
}

fn f_sum(k: u32, terms: &[(&[u32], i64)]) -> SymFn {
    sf(k, BasisTag::Forgotten, 1, terms)
}

fn m_sum(k: u32, terms: &[(&[u32], i64)]) -> SymFn {
    sf(k, BasisTag::Monomial, 1, terms)
}

fn criterion_6() -> Outcome {
    type Row<'a> = (&'a [u32], Vec<(&'a [u32], i64)>, Option<Vec<(&'a [u32], i64)>>);
    let rows: Vec<Row> = vec![
        (
            &[1, 1],
            vec![(&[1, 1], 1), (&[2], 2)],
            Some(vec![(&[1, 1], 1), (&[2], -1)]),
        ),
        (&[2], vec![(&[2], -1)], Some(vec![(&[2], 1)])),
        (
            &[1, 1, 1],
            vec![(&[1, 1, 1], -1), (&[2, 1], -2), (&[3], -5)],
            Some(vec![(&[1, 1, 1], -1), (&[2, 1], 1), (&[3], -2)]),
        ),
        (
            &[2, 1],
            vec![(&[2, 1], 1), (&[3], 5)],
            Some(vec![(&[2, 1], -1), (&[3], 3)]),
        ),
        (&[3], vec![(&[3], -1)], Some(vec![(&[3], -1)])),
        (
            &[1, 1, 1, 1],
            vec![
                (&[1, 1, 1, 1], 1),
                (&[2, 1, 1], 2),
                (&[2, 2], 4),
                (&[3, 1], 5),
                (&[4], 14),
            ],
            None,
        ),
        (
            &[2, 1, 1],
            vec![(&[2, 1, 1], -1), (&[2, 2], -4), (&[3, 1], -5), (&[4], -21)],
            None,
        ),
        (&[2, 2], vec![(&[2, 2], 1), (&[4], 3)], None),
        // printed with 6f_(3); the weight forces f_(4)
        (&[3, 1], vec![(&[3, 1], 1), (&[4], 6)], None),
        (&[4], vec![(&[4], -1)], None),
    ];
    for (lam, f, m) in rows {
        let lam = p(lam);
        let k = lam.weight();
        let g = g_function(&lam);
        check(g == f_sum(k, &f), || format!("g_{lam} in f"))?;
        if let Some(m) = m {
            check(g.convert(BasisTag::Monomial) == m_sum(k, &m), || {
                format!("g_{lam} in m")
            })?;
        }
    }
    for k in 0..=8 {
        let c = c_matrix(k);
        for (i, mu) in c.partitions().iter().enumerate() {
            for (j, lam) in c.partitions().iter().enumerate() {
                let v = &c.rows()[i][j];
                if i == j {
                    let want = if lam.len() % 2 == 0 {
                        Integer::one()
                    } else {
                        -Integer::one()
                    };
                    check(*v == want, || format!("C({mu},{lam}) = {v}"))?;
                } else if j < i {
                    // λ earlier than μ in canonical order, i.e. λ >_lex μ
                    check(v.is_zero(), || format!("C({mu},{lam}) = {v} above the diagonal"))?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    for k in 0..=20 {
        let b = bernoulli_ref(k);
        check(bernoulli_stirling(k) == b, || format!("Stirling route at k = {k}"))?;
        check(bernoulli_partition_factorial(k) == b, || {
            format!("partition-factorial route at k = {k}")
        })?;
        check(bernoulli_partition_g(k) == b, || {
            format!("partition-g route at k = {k}")
        })?;
        if k >= 3 && k % 2 == 1 {
            check(b.is_zero(), || format!("B_{k} = {b}"))?;
        }
    }
    check(bernoulli_ref(12) == rat(-691, 2730), || "B_12".into())?;
    for k in 0..=12 {
        let b: Rational = bernoulli_ref(k) / rat_int(factorial(k));
        let want = if k % 2 == 1 { -b } else { b };
        let got = todd_gf(k).polynomial.eval_at_one();
        check(got == want, || format!("T_{k}(1,0,...) = {got}"))?;
    }
    within(start, Duration::from_secs(60), "Bernoulli routes")
}

fn criterion_8() -> Outcome {
    for n in 1..=15u32 {
        let sc = von_staudt_clausen(2 * n).map_err(|e| e.to_string())?;
        let b = bernoulli_ref(2 * n);
        let sum: Rational = sc.primes.iter().map(|&q| rat(1, i64::from(q))).sum();
        check((&b + sum).is_integer(), || {
            format!("B_{} + sum is not an integer", 2 * n)
        })?;
        // independent prime list: p prime with (p-1) | 2n
        let primes: Vec<u32> = (2..=2 * n + 1)
            .filter(|&q| (2..q).all(|d| q % d != 0) && (2 * n) % (q - 1) == 0)
            .collect();
        check(sc.primes == primes, || format!("prime set for 2n = {}", 2 * n))?;
        let q: Integer = primes.iter().map(|&x| Integer::from(x)).product();
        check(*b.denom() == q, || format!("denominator of B_{}", 2 * n))?;
        check(hirzebruch_prime(2 * n).is_multiple_of(&q), || {
            format!("q_{} does not divide h", 2 * n)
        })?;
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let table = [1, 3, 45, 945];
    for n in 1..=16u32 {
        let want = int(table[(n as usize - 1) / 4]);
        let got = buchstaber(n).map_err(|e| e.to_string())?;
        check(got == want, || format!("b_{n} = {got}"))?;
    }
    for k in 0..=15u32 {
        let mu = if k <= 5 {
            denominator_of(&l_gf(k).polynomial).map_err(|e| e.to_string())?
        } else {
            hirzebruch_prime(2 * k) >> (2 * k)
        };
        for n in 4 * k + 1..=4 * k + 4 {
            let got = buchstaber(n).map_err(|e| e.to_string())?;
            check(got == mu, || format!("b_{n} = {got}, mu(L_{k}) = {mu}"))?;
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    for k in 0..=8 {
        for lam in enumerate(k) {
            let m = SymFn::generator(BasisTag::Monomial, lam.clone());
            check(m.omega().omega() == m, || format!("omega twice on m_{lam}"))?;
            check(forgotten(&lam) == forgotten_combinatorial(&lam), || {
                format!("f_{lam} two algorithms")
            })?;
        }
        for i in 1..k {
            for a in enumerate(i) {
                for b in enumerate(k - i) {
                    let x = SymFn::generator(BasisTag::Elementary, a.clone());
                    let y = SymFn::generator(BasisTag::Complete, b.clone());
                    check(x.multiply(&y).omega() == x.omega().multiply(&y.omega()), || {
                        format!("omega(e_{a} h_{b})")
                    })?;
                }
            }
        }
        for b in BasisTag::INTEGRAL {
            let t = transition(b, k);
            check(linalg::is_integral(&t.to_m) && linalg::is_integral(&t.from_m), || {
                format!("{b} at degree {k}")
            })?;
            check(linalg::determinant(&t.to_m).abs().is_one(), || {
                format!("det of {b} at degree {k}")
            })?;
        }
    }
    for k in 1..=10u32 {
        let mut acc = SymFn::zero(k, BasisTag::Monomial);
        for i in 0..=k {
            let e = if i == 0 {
                SymFn::one()
            } else {
                SymFn::generator(BasisTag::Elementary, Partition::row(i))
            };
            let h = if i == k {
                SymFn::one()
            } else {
                SymFn::generator(BasisTag::Complete, Partition::row(k - i))
            };
            let term = e.multiply(&h);
            acc = if i % 2 == 0 { acc.add(&term) } else { acc.sub(&term) }.map_err(|e| e.to_string())?;
        }
        check(acc.is_zero(), || format!("duality at k = {k}"))?;
    }
    for k in 0..=10 {
        let t = todd_gf(k).polynomial;
        let d = hirzebruch_prime(k);
        for b in BasisTag::INTEGRAL {
            let got = denominator_of(&t.convert(b)).map_err(|e| e.to_string())?;
            check(got == d, || format!("mu(T_{k}) in {b} = {got}"))?;
        }
    }
    let report = verify::run(&[], None);
    if let Some(c) = report.failures().next() {
        return Err(format!("verify: {}/{} failed: {:?}", c.suite, c.name, c.counterexample));
    }
    within(start, Duration::from_secs(600), "property suites and default verify")
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("golden Todd and L tables", criterion_1),
        ("three-way Todd agreement", criterion_2),
        ("Hirzebruch identities", criterion_3),
        ("L-denominators", criterion_4),
        ("series reversion", criterion_5),
        ("g-basis tables and C-matrix", criterion_6),
        ("Bernoulli four-way agreement", criterion_7),
        ("von Staudt-Clausen", criterion_8),
        ("Buchstaber table", criterion_9),
        ("property suites", criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS criterion {}: {name} ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
