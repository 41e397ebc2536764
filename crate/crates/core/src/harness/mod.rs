//! Table reproduction, the error-law fit and figure data, plus the run
//! configuration and report rendering used by the command-line front-end.

mod report;
mod tables;

pub use report::{Format, Report};
pub use tables::{
    figure_grid, run_figure, run_fit, run_table1, run_table2, run_table3, FigureRow, FitRow,
    Table1Row, Table2Row, Table3Row, DEFAULT_NODES, DEFAULT_TERMS, DESK_CAP, TABLE2_DEFAULT_NS,
    TABLE3_DEFAULT_NS,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::methods::{zeta_integral_method, zeta_series_sweep};
use crate::numerics::{BigReal, PrecisionContext};
use crate::odd::{asymptotic_zeta, zeta_bounds, zeta_odd_geomean};
use crate::zeta::{as_integer, check_domain, zeta_even, zeta_reference, Method, ZetaValue};

pub const MIN_DIGITS: u32 = 20;

/// Significant digits for error columns.
pub const ERROR_SIG_DIGITS: usize = 3;
/// Decimal places for value columns.
pub const VALUE_DECIMALS: u32 = 12;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "command", rename_all = "kebab-case")]
pub enum Command {
    Compute { s: f64, method: Method, nodes: u32, terms: u32 },
    Table1,
    Table2 { ns: Vec<u32> },
    Table3 { ns: Vec<u32>, nodes: u32, terms: u32 },
    Fit { ns: Vec<u32> },
    Figure { min: f64, max: f64, step: f64 },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Compute { .. } => "compute",
            Command::Table1 => "table1",
            Command::Table2 { .. } => "table2",
            Command::Table3 { .. } => "table3",
            Command::Fit { .. } => "fit",
            Command::Figure { .. } => "figure",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub digits: u32,
    pub paper_quirks: bool,
}

/// Evaluates ζ(s) with the requested method.
pub fn compute(s: f64, method: Method, nodes: u32, terms: u32, ctx: PrecisionContext) -> Result<ZetaValue> {
    check_domain(s)?;
    let odd_index = || match as_integer(s) {
        Some(k) if k % 2 == 1 => Ok((k as u32 - 1) / 2),
        _ => Err(Error::Domain { value: s.to_string(), expected: "odd integer s >= 3" }),
    };
    let value = match method {
        Method::ExactEven => match as_integer(s) {
            Some(k) if k % 2 == 0 => return Ok(zeta_even((k / 2) as u32, ctx)),
            _ => return Err(Error::Domain { value: s.to_string(), expected: "even integer s >= 2" }),
        },
        Method::Reference => return zeta_reference(s, ctx),
        Method::Geomean => zeta_odd_geomean(odd_index()?, ctx)?.zeta_gm,
        Method::BoundsL => zeta_bounds(odd_index()?, ctx)?.0,
        Method::BoundsR => zeta_bounds(odd_index()?, ctx)?.1,
        Method::Asymptotic => asymptotic_zeta(s, ctx)?,
        Method::Integral => return zeta_integral_method(s, nodes, ctx),
        Method::Series => {
            let n = odd_index()?;
            return Ok(zeta_series_sweep(n, terms, ctx)?.pop().expect("n >= 1"));
        }
    };
    Ok(ZetaValue::new(s, value, method))
}

fn err_cell(x: &BigReal) -> Option<String> {
    Some(x.to_sci_string(ERROR_SIG_DIGITS))
}

fn value_cell(x: &BigReal) -> Option<String> {
    Some(x.to_fixed_string(VALUE_DECIMALS))
}

/// Runs a configuration and formats its rows.
pub fn run(config: &RunConfig) -> Result<Report> {
    if config.digits < MIN_DIGITS {
        return Err(Error::InvalidInput(format!(
            "digits must be at least {MIN_DIGITS}, got {}",
            config.digits
        )));
    }
    let ctx = PrecisionContext::new(config.digits);
    let mut report = Report {
        command: config.command.name(),
        config: serde_json::to_value(config).expect("config serializes"),
        digits: config.digits,
        columns: Vec::new(),
        rows: Vec::new(),
        summary: Vec::new(),
        footnotes: if config.paper_quirks { footnotes(&config.command) } else { Vec::new() },
    };
    match &config.command {
        Command::Compute { s, method, nodes, terms } => {
            let z = compute(*s, *method, *nodes, *terms, ctx)?;
            report.columns = vec!["s", "method", "digits", "value"];
            report.rows = vec![vec![
                Some(s.to_string()),
                Some(method.to_string()),
                Some(config.digits.to_string()),
                Some(z.value.with_context(ctx).to_fixed_string(config.digits)),
            ]];
        }
        Command::Table1 => {
            report.columns = vec!["n", "zeta_ap", "zeta_ac", "error"];
            report.rows = run_table1(ctx)?
                .iter()
                .map(|r| {
                    vec![Some(r.n.to_string()), value_cell(&r.approx), value_cell(&r.accurate), value_cell(&r.error)]
                })
                .collect();
        }
        Command::Table2 { ns } => {
            report.columns = vec!["n", "error", "digits"];
            report.rows = run_table2(ns, ctx)
                .iter()
                .map(|r| vec![Some(r.n.to_string()), err_cell(&r.error), Some(r.digits.to_string())])
                .collect();
        }
        Command::Table3 { ns, nodes, terms } => {
            report.columns = vec!["n", "integral_error", "series_error", "geomean_error"];
            report.rows = run_table3(ns, *nodes, *terms, ctx)?
                .iter()
                .map(|r| {
                    vec![Some(r.n.to_string()), err_cell(&r.integral), err_cell(&r.series), err_cell(&r.geomean)]
                })
                .collect();
        }
        Command::Fit { ns } => {
            let (rows, fit) = run_fit(ns, ctx)?;
            report.columns = vec!["n", "error", "lg_error", "residual"];
            report.rows = rows
                .iter()
                .map(|r| {
                    let fitted = fit.predict(&BigReal::from_u64(u64::from(r.n), fit.slope.ctx()));
                    vec![
                        Some(r.n.to_string()),
                        err_cell(&r.error),
                        Some(r.lg_error.to_fixed_string(6)),
                        Some((&r.lg_error - fitted).to_sci_string(ERROR_SIG_DIGITS)),
                    ]
                })
                .collect();
            report.summary = vec![
                ("slope", fit.slope.to_fixed_string(6)),
                ("intercept", fit.intercept.to_fixed_string(6)),
                ("max_abs_residual", fit.max_abs_residual.to_sci_string(ERROR_SIG_DIGITS)),
                ("points", rows.len().to_string()),
            ];
        }
        Command::Figure { min, max, step } => {
            report.columns = vec!["s", "zeta_ap", "zeta_ac", "lg_error"];
            report.rows = run_figure(*min, *max, *step, ctx)?
                .iter()
                .map(|r| {
                    vec![
                        Some(r.s.to_string()),
                        value_cell(&r.approx),
                        r.accurate.as_ref().and_then(value_cell),
                        r.lg_error.as_ref().map(|e| e.to_fixed_string(6)),
                    ]
                })
                .collect();
        }
    }
    Ok(report)
}

/// Known disagreements between published tables and recomputed values.
pub fn footnotes(command: &Command) -> Vec<String> {
    let notes: &[&str] = match command {
        Command::Table1 => &[
            "n = 1: published error -0.007210289040 has its digits shifted; the row's own values give -0.000721028904.",
            "n = 5: published error 0.000000364486 disagrees with its own row; 1.000494555053 - 1.000494188604 = 0.000000366449.",
        ],
        Command::Table3 { .. } => &[
            "series column: published errors settle at 3.14591522e-20; recomputed errors with 25 terms are about 5.2e-20 for n >= 2, still below 1e-19.",
            "n = 3 geomean: published 1.50e-5 differs from the 1.59e-5 implied by the n = 3 row of table 1; recomputation gives 1.59e-5.",
            "published series remainder bound (4 pi^2/45)/((2N+3)(N+2)(2N+5)(4^N - 1/2)) is low by a factor of 3 for n = 1: at N = 25 it is 9.90e-21 while the actual remainder is 2.87e-20.",
        ],
        _ => &[],
    };
    notes.iter().map(|s| s.to_string()).collect()
}
