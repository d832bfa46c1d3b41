use std::io::Write;
use std::time::Instant;

use cosareas_core::areas::{area, area_table, oeis_numerator};
use cosareas_core::egf::{
    a296726_terms, a372324_terms, arcsin_series, diff_bfile_where, parse_bfile,
};
use cosareas_core::piecewise_quad::convergence_study;
use cosareas_core::{AreaMethod, Integer};
use serde::Serialize;

use crate::report::{emit, fmt12, sig12, OutputFormat, RunReport};
use crate::{BoxError, ConvergeArgs, EgfArgs, ExactArgs, Method, Outcome, Params, Sequence};

pub(crate) struct Context {
    pub format: OutputFormat,
    pub no_timing: bool,
}

impl Context {
    pub fn params<'a, A>(&self, args: &'a A) -> Params<'a, A> {
        Params {
            args,
            format: self.format,
            no_timing: self.no_timing,
        }
    }

    pub fn millis(&self, start: Instant) -> f64 {
        if self.no_timing {
            0.0
        } else {
            start.elapsed().as_secs_f64() * 1e3
        }
    }
}

impl From<Method> for AreaMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::ClosedForm => AreaMethod::ClosedForm,
            Method::Recursion => AreaMethod::Recursion,
            Method::DoubleFactorial => AreaMethod::DoubleFactorial,
        }
    }
}

#[derive(Debug, Serialize)]
struct ExactRow {
    n: u64,
    value: String,
    #[serde(serialize_with = "sig12")]
    approx: f64,
    numerator: String,
}

pub(crate) fn exact(
    ctx: &Context,
    args: &ExactArgs,
    out: &mut impl Write,
) -> Result<Outcome, BoxError> {
    let start = Instant::now();
    let method = AreaMethod::from(args.method);
    let rows = match (args.n, args.max_n) {
        (Some(n), _) => {
            let value = area(n, method)?;
            vec![ExactRow {
                n,
                approx: value.to_f64(),
                value: value.to_string(),
                numerator: oeis_numerator(n)?.to_string(),
            }]
        }
        (None, Some(max_n)) => area_table(max_n, method)?
            .rows
            .into_iter()
            .map(|r| ExactRow {
                n: r.n,
                approx: r.value.to_f64(),
                value: r.value.to_string(),
                numerator: r.numerator.to_string(),
            })
            .collect(),
        (None, None) => return Err("one of --n or --max-n is required".into()),
    };
    let report = RunReport {
        subcommand: "exact",
        params: ctx.params(args),
        rows,
        elapsed_ms: ctx.millis(start),
    };
    emit(out, &report, ctx.format, |w, r| {
        writeln!(
            w,
            "A_{} = {} ≈ {}, numerator {}",
            r.n,
            r.value,
            fmt12(r.approx),
            r.numerator
        )
    })?;
    Ok(Outcome::Success)
}

#[derive(Debug, Serialize)]
struct ConvergeRow {
    k: u64,
    #[serde(serialize_with = "sig12")]
    area: f64,
    #[serde(serialize_with = "sig12")]
    limit: f64,
    #[serde(serialize_with = "sig12")]
    error: f64,
    #[serde(serialize_with = "sig12")]
    ms: f64,
}

fn schedule(args: &ConvergeArgs) -> Result<Vec<u64>, BoxError> {
    if let Some(ks) = &args.ks {
        return Ok(ks.clone());
    }
    let (Some(start), Some(factor), Some(count)) = (args.k_start, args.k_factor, args.k_count)
    else {
        return Err("--k-start needs --k-factor and --k-count".into());
    };
    if !factor.is_finite() || factor <= 1.0 {
        return Err(format!("--k-factor must be greater than 1, got {factor}").into());
    }
    let mut ks: Vec<u64> = (0..count)
        .map(|i| (start as f64 * factor.powi(i as i32)).round() as u64)
        .collect();
    ks.dedup();
    Ok(ks)
}

pub(crate) fn converge(
    ctx: &Context,
    args: &ConvergeArgs,
    out: &mut impl Write,
) -> Result<Outcome, BoxError> {
    let start = Instant::now();
    let ks = schedule(args)?;
    if ks.is_empty() {
        return Err("no k values given".into());
    }
    let rows: Vec<ConvergeRow> = convergence_study(args.n, &ks)?
        .into_iter()
        .map(|r| ConvergeRow {
            k: r.k,
            area: r.area,
            limit: r.limit,
            error: r.error,
            ms: if ctx.no_timing { 0.0 } else { r.elapsed_ms() },
        })
        .collect();
    let report = RunReport {
        subcommand: "converge",
        params: ctx.params(args),
        rows,
        elapsed_ms: ctx.millis(start),
    };
    emit(out, &report, ctx.format, |w, r| {
        writeln!(
            w,
            "k = {}: area {} limit {} error {} ({} ms)",
            r.k,
            fmt12(r.area),
            fmt12(r.limit),
            fmt12(r.error),
            fmt12(r.ms)
        )
    })?;
    Ok(Outcome::Success)
}

#[derive(Debug, Serialize)]
struct TermRow {
    n: usize,
    term: String,
}

#[derive(Debug, Serialize)]
struct DiffRow {
    index: i64,
    expected: String,
    /// Empty when no term was computed at this index.
    got: String,
}

fn terms(which: Sequence, max_n: usize) -> Result<Vec<Integer>, BoxError> {
    Ok(match which {
        Sequence::Arcsin => {
            let series = arcsin_series(max_n);
            (0..=max_n)
                .map(|n| series.egf_integer(n))
                .collect::<Result<_, _>>()?
        }
        Sequence::A296726 => a296726_terms(max_n)?,
        Sequence::A372324 => a372324_terms(max_n)?,
    })
}

pub(crate) fn egf(
    ctx: &Context,
    args: &EgfArgs,
    out: &mut impl Write,
) -> Result<Outcome, BoxError> {
    let start = Instant::now();
    let computed = terms(args.which, args.max_n)?;
    let Some(path) = &args.bfile else {
        let rows = computed
            .iter()
            .enumerate()
            .map(|(n, t)| TermRow {
                n,
                term: t.to_string(),
            })
            .collect();
        let report = RunReport {
            subcommand: "egf",
            params: ctx.params(args),
            rows,
            elapsed_ms: ctx.millis(start),
        };
        emit(out, &report, ctx.format, |w, r| {
            writeln!(w, "{} {}", r.n, r.term)
        })?;
        return Ok(Outcome::Success);
    };

    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let bfile = parse_bfile(&text)?;
    let max_n = args.max_n as i64;
    let rows: Vec<DiffRow> = diff_bfile_where(&bfile, &computed, |i| (0..=max_n).contains(&i))
        .into_iter()
        .map(|m| DiffRow {
            index: m.index,
            expected: m.expected.to_string(),
            got: m.got.map(|g| g.to_string()).unwrap_or_default(),
        })
        .collect();
    let compared = bfile
        .entries
        .iter()
        .filter(|(i, _)| (0..=max_n).contains(i))
        .count();
    eprintln!(
        "{} mismatches in {compared} compared entries of {}",
        rows.len(),
        if bfile.id.is_empty() {
            "b-file"
        } else {
            &bfile.id
        }
    );
    let outcome = if rows.is_empty() {
        Outcome::Success
    } else {
        Outcome::VerificationFailed
    };
    let report = RunReport {
        subcommand: "egf",
        params: ctx.params(args),
        rows,
        elapsed_ms: ctx.millis(start),
    };
    emit(out, &report, ctx.format, |w, r| {
        writeln!(
            w,
            "index {}: expected {}, got {}",
            r.index,
            r.expected,
            if r.got.is_empty() { "nothing" } else { &r.got }
        )
    })?;
    Ok(outcome)
}
