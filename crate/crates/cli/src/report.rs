//! Run reports and their three renderings.

use std::io::{self, Write};

use clap::ValueEnum;
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
    #[default]
    Plain,
}

/// Everything one subcommand produced.
#[derive(Debug, Clone, Serialize)]
pub struct RunReport<P, R> {
    pub subcommand: &'static str,
    /// The arguments the run was invoked with.
    pub params: P,
    pub rows: Vec<R>,
    #[serde(serialize_with = "sig12")]
    pub elapsed_ms: f64,
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

/// Fixed 12-significant-digit rendering used by every output format.
pub fn fmt12(x: f64) -> String {
    let r = round12(x);
    if r == 0.0 || (1e-4..1e12).contains(&r.abs()) {
        r.to_string()
    } else {
        format!("{r:e}")
    }
}

pub fn sig12<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(round12(*x))
}

/// Writes `report` in `format`. `plain` renders rows for humans.
pub fn emit<P, R>(
    out: &mut impl Write,
    report: &RunReport<P, R>,
    format: OutputFormat,
    plain: impl Fn(&mut dyn Write, &R) -> io::Result<()>,
) -> Result<(), Box<dyn std::error::Error>>
where
    P: Serialize,
    R: Serialize,
{
    match format {
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, report)?;
            writeln!(out)?;
        }
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for row in &report.rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        OutputFormat::Plain => {
            for row in &report.rows {
                plain(out, row)?;
            }
        }
    }
    out.flush()?;
    Ok(())
}
