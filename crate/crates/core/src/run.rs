// SPDX-License-Identifier: Apache-2.0

//! Time sweeps in one of three modes, CSV output and run summaries.

use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rayon::prelude::*;

use crate::analysis::{log_log_slope, sweep};
use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigenvalues, C64};
use crate::model::Scenario;
use crate::propagate::{ClosedFormPropagator, ErrorIndicator, ExactPropagator};

/// Fixed CSV column order.
pub const CSV_COLUMNS: [&str; 9] = [
    "time",
    "trace_distance",
    "frobenius_gap",
    "exact_trace_re",
    "exact_trace_im",
    "approx_trace_re",
    "approx_trace_im",
    "approx_min_eig",
    "bch_indicator",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunMode {
    /// Both routes plus comparison metrics.
    Compare,
    ExactOnly,
    /// Closed form only; the `n²×n²` exponential is never formed.
    ApproxOnly,
}

impl FromStr for RunMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "compare" => Ok(RunMode::Compare),
            "exact-only" => Ok(RunMode::ExactOnly),
            "approx-only" => Ok(RunMode::ApproxOnly),
            other => Err(Error::invalid(format!(
                "unknown mode {other:?} (expected compare, exact-only or approx-only)"
            ))),
        }
    }
}

impl fmt::Display for RunMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RunMode::Compare => "compare",
            RunMode::ExactOnly => "exact-only",
            RunMode::ApproxOnly => "approx-only",
        })
    }
}

/// One CSV row. Columns a mode does not compute are `None` and written empty.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ReportRow {
    pub time: f64,
    pub trace_distance: Option<f64>,
    pub frobenius_gap: Option<f64>,
    pub exact_trace: Option<C64>,
    pub approx_trace: Option<C64>,
    pub approx_min_eig: Option<f64>,
    pub bch_indicator: f64,
}

#[derive(Clone, Debug)]
pub struct RunSummary {
    pub mode: RunMode,
    pub points: usize,
    /// Fitted log-log slope of the Frobenius gap, when enough points are
    /// above the noise floor.
    pub convergence_order: Option<f64>,
    pub max_trace_distance: Option<f64>,
    /// Smallest eigenvalue seen in any approximate state.
    pub worst_min_eigenvalue: Option<f64>,
    pub failures: Vec<(f64, String)>,
}

impl RunSummary {
    pub fn succeeded(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for RunSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<f64>, prec: usize| match v {
            Some(x) => format!("{x:.prec$e}"),
            None => "n/a".to_string(),
        };
        writeln!(f, "mode: {}", self.mode)?;
        writeln!(f, "time points: {}", self.points)?;
        writeln!(
            f,
            "convergence order: {}",
            self.convergence_order.map(|o| format!("{o:.4}")).unwrap_or_else(|| "n/a".into())
        )?;
        writeln!(f, "max trace distance: {}", opt(self.max_trace_distance, 3))?;
        writeln!(f, "worst min eigenvalue: {}", opt(self.worst_min_eigenvalue, 3))?;
        write!(f, "failures: {}", self.failures.len())?;
        for (t, msg) in &self.failures {
            write!(f, "\n  t = {t}: {msg}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct RunOutput {
    pub rows: Vec<ReportRow>,
    pub summary: RunSummary,
}

/// Propagate over the scenario grid. Per-point failures are collected in the
/// summary rather than aborting the run.
pub fn run(scenario: &Scenario, mode: RunMode) -> Result<RunOutput> {
    let indicator = ErrorIndicator::new(scenario)?;
    let grid = &scenario.time_grid;
    let results: Vec<Result<ReportRow>> = match mode {
        RunMode::Compare => sweep(scenario)?
            .into_iter()
            .map(|r| {
                r.map(|rec| ReportRow {
                    time: rec.time,
                    trace_distance: Some(rec.trace_distance),
                    frobenius_gap: Some(rec.frobenius_gap),
                    exact_trace: Some(rec.exact_trace),
                    approx_trace: Some(rec.approx_trace),
                    approx_min_eig: Some(rec.approx_min_eigenvalue),
                    bch_indicator: rec.bch_indicator,
                })
            })
            .collect(),
        RunMode::ExactOnly => {
            let exact = ExactPropagator::new(scenario)?;
            grid.par_iter()
                .map(|&t| {
                    let state = exact.propagate(t)?.state;
                    Ok(ReportRow {
                        time: t,
                        exact_trace: Some(state.trace()),
                        bch_indicator: indicator.at(t),
                        ..Default::default()
                    })
                })
                .collect()
        }
        RunMode::ApproxOnly => {
            let approx = ClosedFormPropagator::new(scenario)?;
            grid.par_iter()
                .map(|&t| {
                    let state = approx.propagate(t)?.state;
                    Ok(ReportRow {
                        time: t,
                        approx_trace: Some(state.trace()),
                        approx_min_eig: Some(hermitian_eigenvalues(&state.hermitian_part())?[0]),
                        bch_indicator: indicator.at(t),
                        ..Default::default()
                    })
                })
                .collect()
        }
    };
    let mut rows = Vec::with_capacity(results.len());
    let mut failures = Vec::new();
    for (r, &t) in results.into_iter().zip(grid) {
        match r {
            Ok(row) => rows.push(row),
            Err(e) => failures.push((t, e.to_string())),
        }
    }
    let summary = summarize(mode, &rows, failures);
    Ok(RunOutput { rows, summary })
}

fn summarize(mode: RunMode, rows: &[ReportRow], failures: Vec<(f64, String)>) -> RunSummary {
    let max_of = |it: &mut dyn Iterator<Item = f64>| it.reduce(f64::max);
    let convergence_order = if mode == RunMode::Compare {
        log_log_slope(rows.iter().filter_map(|r| Some((r.time, r.frobenius_gap?)))).ok()
    } else {
        None
    };
    RunSummary {
        mode,
        points: rows.len(),
        convergence_order,
        max_trace_distance: max_of(&mut rows.iter().filter_map(|r| r.trace_distance)),
        worst_min_eigenvalue: rows.iter().filter_map(|r| r.approx_min_eig).reduce(f64::min),
        failures,
    }
}

fn fmt_opt(v: Option<f64>) -> String {
    v.map(|x| format!("{x:e}")).unwrap_or_default()
}

/// Write rows as CSV with [`CSV_COLUMNS`] as header. Floats use Rust's
/// shortest round-trip exponent notation.
pub fn write_csv<W: Write>(rows: &[ReportRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let csv_err = |e: csv::Error| match e.into_kind() {
        csv::ErrorKind::Io(io) => Error::Io(io),
        other => Error::Io(std::io::Error::other(format!("{other:?}"))),
    };
    w.write_record(CSV_COLUMNS).map_err(csv_err)?;
    for r in rows {
        w.write_record([
            format!("{:e}", r.time),
            fmt_opt(r.trace_distance),
            fmt_opt(r.frobenius_gap),
            fmt_opt(r.exact_trace.map(|z| z.re)),
            fmt_opt(r.exact_trace.map(|z| z.im)),
            fmt_opt(r.approx_trace.map(|z| z.re)),
            fmt_opt(r.approx_trace.map(|z| z.im)),
            fmt_opt(r.approx_min_eig),
            format!("{:e}", r.bch_indicator),
        ])
        .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}
