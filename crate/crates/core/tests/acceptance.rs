//! Acceptance criteria, one test per criterion. Each prints a single
//! `criterion N: PASS|FAIL` line with its runtime.

use std::f64::consts::PI;
use std::time::{Duration, Instant};

use cosareas_core::areas::{area, area_closed_form, oeis_numerator};
use cosareas_core::egf::{a296726_terms, a372324_terms};
use cosareas_core::exact_arith::{binomial, double_factorial, factorial, ratio, Integer};
use cosareas_core::identities::{
    cot_limit_expression, cq_limit, cq_partial, lagrange_closed_form, lagrange_sum_direct,
};
use cosareas_core::piecewise_quad::{
    breakpoints, f_eval, finite_area_oracle, finite_area_piecewise, AreaKernel, NParity,
};
use cosareas_core::{AreaMethod, Error, LagrangeVariant, ParityCase, PiFraction, PiRational};
use rayon::prelude::*;

type Check = Result<(), Vec<String>>;

fn run(id: u32, budget: Duration, body: impl FnOnce() -> Check) {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let mut problems = outcome.err().unwrap_or_default();
    if elapsed > budget {
        problems.push(format!("runtime {elapsed:?} exceeds {budget:?}"));
    }
    if problems.is_empty() {
        println!(
            "criterion {id}: PASS ({:.1} ms)",
            elapsed.as_secs_f64() * 1e3
        );
        return;
    }
    println!(
        "criterion {id}: FAIL ({:.1} ms): {}",
        elapsed.as_secs_f64() * 1e3,
        problems.join("; ")
    );
    panic!("criterion {id} failed: {}", problems.join("; "));
}

fn collect(problems: Vec<String>) -> Check {
    if problems.is_empty() {
        Ok(())
    } else {
        Err(problems)
    }
}

fn pr(num: i64, den: i64) -> PiRational {
    PiRational::new(ratio(num, den))
}

#[test]
fn criterion_1_exact_values() {
    run(1, Duration::from_secs(1), || {
        let expected = [
            (1, pr(8, 1)),
            (2, pr(4, 1)),
            (3, pr(56, 9)),
            (4, pr(4, 1)),
            (5, pr(1192, 225)),
            (6, pr(34, 9)),
            (7, pr(17228, 3675)),
            (8, pr(32, 9)),
        ];
        let mut problems = Vec::new();
        for (n, want) in expected {
            match area_closed_form(n) {
                Ok(got) if got == want => {}
                Ok(got) => problems.push(format!("A_{n} = {got}, expected {want}")),
                Err(e) => problems.push(format!("A_{n}: {e}")),
            }
        }
        collect(problems)
    });
}

#[test]
fn criterion_2_cross_method_equality() {
    run(2, Duration::from_secs(10), || {
        let problems: Vec<String> = (1..=201u64)
            .into_par_iter()
            .filter_map(|n| {
                let values: Vec<_> = AreaMethod::ALL.iter().map(|&m| area(n, m)).collect();
                match values.as_slice() {
                    [Ok(a), Ok(b), Ok(c)] if a == b && b == c => None,
                    _ => Some(format!("methods disagree at n = {n}")),
                }
            })
            .collect();
        collect(problems)
    });
}

#[test]
fn criterion_3_oeis_numerators() {
    run(3, Duration::from_secs(5), || {
        let mut problems = Vec::new();
        let listed: [(u64, u64); 8] = [
            (1, 1),
            (3, 7),
            (5, 149),
            (7, 6483),
            (2, 1),
            (4, 16),
            (6, 544),
            (8, 32768),
        ];
        for (n, want) in listed {
            match oeis_numerator(n) {
                Ok(got) if got == Integer::from(want) => {}
                Ok(got) => problems.push(format!("numerator({n}) = {got}, expected {want}")),
                Err(e) => problems.push(format!("numerator({n}): {e}")),
            }
        }
        let odd = a296726_terms(61).expect("a296726 terms");
        let even = a372324_terms(61).expect("a372324 terms");
        for n in 1..=61u64 {
            let seq = if n % 2 == 1 { &odd } else { &even };
            match oeis_numerator(n) {
                Ok(got) if got == seq[n as usize] => {}
                Ok(got) => problems.push(format!(
                    "n = {n}: numerator {got} vs egf {}",
                    seq[n as usize]
                )),
                Err(e) => problems.push(format!("numerator({n}): {e}")),
            }
        }
        collect(problems)
    });
}

#[test]
fn criterion_4_finite_k_benchmark() {
    run(4, Duration::from_secs(1), || {
        let mut problems = Vec::new();
        let piecewise = finite_area_piecewise(3, 11).expect("piecewise").area;
        if (piecewise - 1.981887).abs() > 5e-6 {
            problems.push(format!("area(3, 11) = {piecewise}, expected 1.981887"));
        }
        let oracle = finite_area_oracle(3, 11, 1e-12).expect("oracle").area;
        if (piecewise - oracle).abs() > 1e-8 {
            problems.push(format!("piecewise {piecewise} vs oracle {oracle}"));
        }
        collect(problems)
    });
}

#[test]
fn criterion_5_convergence() {
    run(5, Duration::from_secs(30), || {
        let ks = [11u64, 101, 1001];
        let problems: Vec<String> = (1..=8u64)
            .into_par_iter()
            .flat_map_iter(|n| {
                let limit = area_closed_form(n).expect("limit").to_f64();
                let errors: Vec<f64> = ks
                    .iter()
                    .map(|&k| (finite_area_piecewise(n, k).expect("area").area - limit).abs())
                    .collect();
                let mut out = Vec::new();
                if errors[2] >= 1e-2 {
                    out.push(format!("n = {n}: error {} at k = 1001", errors[2]));
                }
                if !(errors[0] > errors[1] && errors[1] > errors[2]) {
                    out.push(format!(
                        "n = {n}: errors {errors:?} not strictly decreasing"
                    ));
                }
                out
            })
            .collect();
        collect(problems)
    });
}

fn lagrange_problems() -> Vec<String> {
    LagrangeVariant::ALL
        .par_iter()
        .flat_map_iter(|&variant| (1..=2000u64).map(move |n| (variant, n)))
        .flat_map_iter(|(variant, n)| {
            (1..=50u64)
                .filter(move |&q| variant.accepts(n, q))
                .filter_map(move |q| {
                    let closed = match lagrange_closed_form(n, q, variant) {
                        Ok(v) => v,
                        Err(Error::CotPole(_)) => return None,
                        Err(e) => return Some(format!("{variant:?}({n}, {q}): {e}")),
                    };
                    let direct = lagrange_sum_direct(n, q, variant).expect("direct sum");
                    ((direct - closed).abs() > 1e-10)
                        .then(|| format!("{variant:?}({n}, {q}): {direct} vs {closed}"))
                })
        })
        .collect()
}

/// Errors below this are at the double-precision floor and cannot be
/// expected to shrink further.
const NOISE_FLOOR: f64 = 1e-11;

fn cq_problems() -> Vec<String> {
    let cases = [
        ParityCase::OddOdd,
        ParityCase::OddKEvenQ,
        ParityCase::EvenKOddQ,
        ParityCase::EvenEven,
    ];
    cases
        .par_iter()
        .flat_map_iter(|&case| {
            (1..=9u64)
                .filter(move |q| (q % 2 == 1) == case.q_is_odd())
                .map(move |q| (case, q))
        })
        .flat_map_iter(|(case, q)| {
            let (k3, k4) = if case.k_is_odd() {
                (1001, 10001)
            } else {
                (1000, 10000)
            };
            let limit = cq_limit(q, case).expect("limit").to_f64();
            let e3 = (cq_partial(q, k3, case).expect("partial") - limit).abs();
            let e4 = (cq_partial(q, k4, case).expect("partial") - limit).abs();
            let mut out = Vec::new();
            if e3 >= 1e-2 {
                out.push(format!("{case} q = {q}: error {e3} at k = {k3}"));
            }
            if !(e4 < e3 || e4 <= NOISE_FLOOR) {
                out.push(format!("{case} q = {q}: error {e3} -> {e4} not decreasing"));
            }
            out
        })
        .collect()
}

#[test]
fn criterion_6_lemma_suite() {
    run(6, Duration::from_secs(60), || {
        let mut problems = lagrange_problems();
        for x in [1.0, PI / 2.0, PI, 5.0] {
            match cot_limit_expression(x, 10_000) {
                Ok(v) if (v - 4.0 / x).abs() < 1e-3 => {}
                Ok(v) => problems.push(format!("cot limit at x = {x}: {v} vs {}", 4.0 / x)),
                Err(e) => problems.push(format!("cot limit at x = {x}: {e}")),
            }
        }
        problems.extend(cq_problems());
        collect(problems)
    });
}

fn antiderivative_problems() -> Vec<String> {
    // central difference over exact angles x ± pi/D
    const D: i64 = 2_400_000;
    let h = PI / D as f64;
    let mut out = Vec::new();
    for n in 1..=8u64 {
        for k in 2..=20u64 {
            let kernel = AreaKernel::new(n, k).expect("kernel");
            for i in 1..24i64 {
                let x = PiFraction::new(i, 24).unwrap();
                let c = i * (D / 24);
                let fd = (kernel.antiderivative(PiFraction::new(c + 1, D).unwrap())
                    - kernel.antiderivative(PiFraction::new(c - 1, D).unwrap()))
                    / (2.0 * h);
                let f = f_eval(n, k, x.to_radians());
                if (fd - f).abs() > 1e-6 {
                    out.push(format!("F'({n}, {k}, {x}) = {fd}, f = {f}"));
                }
            }
        }
    }
    out
}

fn partition_problems() -> Vec<String> {
    let mut out = Vec::new();
    for n in 1..=6u64 {
        for k in 2..=30u64 {
            let partition = breakpoints(NParity::of(n), k).expect("partition");
            for p in partition.interior() {
                let v = f_eval(n, k, p.to_radians());
                if v.abs() > 1e-10 {
                    out.push(format!("f({n}, {k}) = {v} at {}", p.angle()));
                }
            }
            for (l, r) in partition.panels() {
                let (a, b) = (l.to_radians(), r.to_radians());
                let samples: Vec<f64> = (1..=10)
                    .map(|i| f_eval(n, k, a + (b - a) * i as f64 / 11.0))
                    .collect();
                let pos = samples.iter().any(|&v| v > 1e-12);
                let neg = samples.iter().any(|&v| v < -1e-12);
                if pos && neg {
                    out.push(format!(
                        "sign change in ({}, {}) for n = {n}, k = {k}",
                        l.angle(),
                        r.angle()
                    ));
                }
            }
        }
    }
    out
}

#[test]
fn criterion_7_property_suites() {
    run(7, Duration::from_secs(30), || {
        let mut problems = antiderivative_problems();
        problems.extend(partition_problems());
        for n in 2..=100u64 {
            for j in 1..n {
                let lhs = binomial(n, j) * Integer::from((n - j) * j);
                let rhs = binomial(n - 2, j - 1) * Integer::from((n - 1) * n);
                if lhs != rhs {
                    problems.push(format!("proof identity fails at n = {n}, j = {j}"));
                }
            }
        }
        for j in 0..=100i64 {
            let two_j = 2 * j;
            let pow = Integer::from(1) << j as usize;
            let even = double_factorial(two_j).expect("even double factorial");
            let odd = double_factorial(two_j - 1).expect("odd double factorial");
            if even != &pow * factorial(j as u64) {
                problems.push(format!("(2j)!! != 2^j j! at j = {j}"));
            }
            if &even * &odd != factorial(two_j as u64) {
                problems.push(format!("(2j)!!(2j-1)!! != (2j)! at j = {j}"));
            }
        }
        collect(problems)
    });
}
