//! Verification suites. Each check reports pass/fail and the largest error seen.

use std::f64::consts::PI;
use std::io::Write;
use std::time::Instant;

use cosareas_core::areas::{area_table, oeis_numerator};
use cosareas_core::egf::{a296726_terms, a372324_terms, diff_bfile, parse_bfile};
use cosareas_core::identities::{
    cot_limit_expression, cq_limit, cq_partial, lagrange_closed_form, lagrange_sum_direct,
};
use cosareas_core::{AreaMethod, Error, Integer, LagrangeVariant, ParityCase};
use rayon::prelude::*;
use serde::Serialize;

use crate::commands::Context;
use crate::report::{emit, sig12, RunReport};
use crate::{BoxError, Outcome, Suite, VerifyArgs};

const B296726: &str = include_str!("../../../fixtures/b296726.txt");
const B372324: &str = include_str!("../../../fixtures/b372324.txt");

/// Errors at or below this are double-precision noise.
const NOISE_FLOOR: f64 = 1e-11;

#[derive(Debug, Serialize)]
struct Check {
    check: String,
    passed: bool,
    #[serde(serialize_with = "sig12")]
    max_error: f64,
    detail: String,
}

pub(crate) fn run(
    ctx: &Context,
    args: &VerifyArgs,
    out: &mut impl Write,
) -> Result<Outcome, BoxError> {
    let start = Instant::now();
    let rows = match args.suite {
        Suite::Identities => identities()?,
        Suite::Cq => cq()?,
        Suite::Egf => egf()?,
        Suite::CrossMethod => cross_method()?,
    };
    let outcome = if rows.iter().all(|c| c.passed) {
        Outcome::Success
    } else {
        Outcome::VerificationFailed
    };
    let report = RunReport {
        subcommand: "verify",
        params: ctx.params(args),
        rows,
        elapsed_ms: ctx.millis(start),
    };
    emit(out, &report, ctx.format, |w, c| {
        writeln!(
            w,
            "{} {}: max error {:.3e} ({})",
            if c.passed { "PASS" } else { "FAIL" },
            c.check,
            c.max_error,
            c.detail
        )
    })?;
    Ok(outcome)
}

fn lagrange_check(variant: LagrangeVariant) -> Result<Check, Error> {
    let name = match variant {
        LagrangeVariant::FullEvenN => "full-even-n",
        LagrangeVariant::HalfOddN => "half-odd-n",
        LagrangeVariant::HalfStepEvenN => "half-step-even-n",
    };
    // (max error, compared, skipped)
    let (max_error, compared, skipped) = (1..=2000u64)
        .into_par_iter()
        .map(|n| {
            let mut acc = (0.0f64, 0usize, 0usize);
            for q in (1..=50u64).filter(|&q| variant.accepts(n, q)) {
                let closed = match lagrange_closed_form(n, q, variant) {
                    Ok(v) if v.abs() <= 1e6 => v,
                    Ok(_) | Err(Error::CotPole(_)) => {
                        acc.2 += 1;
                        continue;
                    }
                    Err(e) => return Err(e),
                };
                let direct = lagrange_sum_direct(n, q, variant)?;
                acc.0 = acc.0.max((direct - closed).abs());
                acc.1 += 1;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>, Error>>()?
        .into_iter()
        .fold((0.0f64, 0, 0), |a, b| (a.0.max(b.0), a.1 + b.1, a.2 + b.2));
    Ok(Check {
        check: format!("lagrange/{name}"),
        passed: max_error <= 1e-10,
        max_error,
        detail: format!(
            "N <= 2000, q <= 50: {compared} pairs, {skipped} poles skipped; tolerance 1e-10"
        ),
    })
}

fn identities() -> Result<Vec<Check>, BoxError> {
    let mut rows = LagrangeVariant::ALL
        .iter()
        .map(|&v| lagrange_check(v))
        .collect::<Result<Vec<_>, _>>()?;
    let mut max_error = 0.0f64;
    for x in [1.0, PI / 2.0, PI, 5.0] {
        max_error = max_error.max((cot_limit_expression(x, 10_000)? - 4.0 / x).abs());
    }
    rows.push(Check {
        check: "cot-limit".into(),
        passed: max_error < 1e-3,
        max_error,
        detail: "k = 10000, x in {1, pi/2, pi, 5}; tolerance 1e-3".into(),
    });
    Ok(rows)
}

fn cq() -> Result<Vec<Check>, BoxError> {
    let cases = [
        ParityCase::OddOdd,
        ParityCase::OddKEvenQ,
        ParityCase::EvenKOddQ,
        ParityCase::EvenEven,
    ];
    cases
        .par_iter()
        .map(|&case| {
            let (k3, k4) = if case.k_is_odd() {
                (1001, 10001)
            } else {
                (1000, 10000)
            };
            let mut max_error = 0.0f64;
            let mut decreasing = true;
            let qs: Vec<u64> = (1..=9)
                .filter(|q| (q % 2 == 1) == case.q_is_odd())
                .collect();
            for &q in &qs {
                let limit = cq_limit(q, case)?.to_f64();
                let e3 = (cq_partial(q, k3, case)? - limit).abs();
                let e4 = (cq_partial(q, k4, case)? - limit).abs();
                max_error = max_error.max(e3);
                decreasing &= e4 < e3 || e4 <= NOISE_FLOOR;
            }
            Ok(Check {
                check: format!("cq/{case}"),
                passed: max_error < 1e-2 && decreasing,
                max_error,
                detail: format!(
                    "q in {qs:?}, error at k = {k3} below 1e-2, {} at k = {k4}",
                    if decreasing { "smaller" } else { "NOT smaller" }
                ),
            })
        })
        .collect::<Result<Vec<_>, Error>>()
        .map_err(Into::into)
}

fn egf() -> Result<Vec<Check>, BoxError> {
    let mut rows = Vec::new();
    for (text, computed) in [
        (B296726, a296726_terms(100)?),
        (B372324, a372324_terms(100)?),
    ] {
        let bfile = parse_bfile(text)?;
        let diff = diff_bfile(&bfile, &computed);
        rows.push(Check {
            check: format!("bfile/{}", bfile.id),
            passed: diff.is_empty(),
            max_error: 0.0,
            detail: format!("{} entries, {} mismatches", bfile.entries.len(), diff.len()),
        });
    }
    let listed = [
        (
            "odd",
            [(1, 1), (3, 7), (5, 149), (7, 6483)],
            a296726_terms(61)?,
        ),
        (
            "even",
            [(2, 1), (4, 16), (6, 544), (8, 32768)],
            a372324_terms(61)?,
        ),
    ];
    for (parity, values, terms) in listed {
        let first = if parity == "odd" { 1 } else { 2 };
        let mut bad = Vec::new();
        for n in (first..=61u64).step_by(2) {
            if oeis_numerator(n)? != terms[n as usize] {
                bad.push(n);
            }
        }
        for (n, v) in values {
            if oeis_numerator(n)? != Integer::from(v) {
                bad.push(n);
            }
        }
        rows.push(Check {
            check: format!("numerators/{parity}"),
            passed: bad.is_empty(),
            max_error: 0.0,
            detail: if bad.is_empty() {
                format!("{parity} n <= 61 equal the EGF terms")
            } else {
                format!("mismatch at n = {bad:?}")
            },
        });
    }
    Ok(rows)
}

fn cross_method() -> Result<Vec<Check>, BoxError> {
    let tables = AreaMethod::ALL
        .par_iter()
        .map(|&m| area_table(201, m))
        .collect::<Result<Vec<_>, _>>()?;
    let reference = &tables[0];
    let mut rows = Vec::new();
    for other in &tables[1..] {
        let bad: Vec<u64> = reference
            .rows
            .iter()
            .zip(&other.rows)
            .filter(|(a, b)| a.value != b.value || a.numerator != b.numerator)
            .map(|(a, _)| a.n)
            .collect();
        rows.push(Check {
            check: format!("{} = {}", reference.method, other.method),
            passed: bad.is_empty() && other.rows.len() == 201,
            max_error: 0.0,
            detail: if bad.is_empty() {
                "exact equality for n = 1..201".into()
            } else {
                format!("differs at n = {bad:?}")
            },
        });
    }
    Ok(rows)
}
