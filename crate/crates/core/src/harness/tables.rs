use log::{info, warn};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::methods::{hermite_rule, zeta_integral_with_rule, zeta_series_sweep};
use crate::numerics::{fit_line, BigReal, FitResult, PrecisionContext};
use crate::odd::{asymptotic_zeta, error_digits, zeta_odd_geomean};
use crate::zeta::{zeta_best, zeta_reference};

/// Largest `n` handled without a warning by the error table.
pub const DESK_CAP: u32 = 2000;

pub const TABLE2_DEFAULT_NS: [u32; 5] = [100, 200, 500, 1000, 2000];
pub const TABLE3_DEFAULT_NS: [u32; 10] = [3, 6, 9, 12, 15, 18, 21, 24, 27, 30];
pub const DEFAULT_NODES: u32 = 25;
pub const DEFAULT_TERMS: u32 = 25;

#[derive(Clone, Debug)]
pub struct Table1Row {
    pub n: u32,
    pub approx: BigReal,
    pub accurate: BigReal,
    /// `approx − accurate`, sign kept.
    pub error: BigReal,
}

/// Geometric-mean estimate against the reference for ζ(3), …, ζ(21).
pub fn run_table1(ctx: PrecisionContext) -> Result<Vec<Table1Row>> {
    (1..=10u32)
        .into_par_iter()
        .map(|n| {
            let e = zeta_odd_geomean(n, ctx)?;
            Ok(Table1Row { n, approx: e.zeta_gm, accurate: e.reference, error: e.signed_error })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct Table2Row {
    pub n: u32,
    pub error: BigReal,
    /// Digits the row was actually computed at.
    pub digits: u32,
}

/// `|ζ_gm(2n+1) − ζ(2n+1)|` for each `n`, each row at `n + 30` digits or more.
/// Rows that fail are skipped with a warning.
pub fn run_table2(ns: &[u32], ctx: PrecisionContext) -> Vec<Table2Row> {
    for &n in ns {
        if error_digits(n) > ctx.digits() {
            info!("n = {n}: raising precision from {} to {} digits", ctx.digits(), error_digits(n));
        }
        if n > DESK_CAP {
            warn!("n = {n} is above {DESK_CAP}; expect a long run");
        }
    }
    let rows: Vec<Option<Table2Row>> = ns
        .par_iter()
        .map(|&n| match zeta_odd_geomean(n, ctx) {
            Ok(e) => Some(Table2Row { n, digits: e.abs_error.ctx().digits(), error: e.abs_error }),
            Err(err) => {
                warn!("skipping n = {n}: {err}");
                None
            }
        })
        .collect();
    rows.into_iter().flatten().collect()
}

#[derive(Clone, Debug)]
pub struct Table3Row {
    pub n: u32,
    pub integral: BigReal,
    pub series: BigReal,
    pub geomean: BigReal,
}

/// Absolute errors of the Hermite ratio, the series and the geometric mean
/// for ζ(2n+1).
pub fn run_table3(ns: &[u32], nodes: u32, terms: u32, ctx: PrecisionContext) -> Result<Vec<Table3Row>> {
    if ns.is_empty() {
        return Ok(Vec::new());
    }
    if let Some(&bad) = ns.iter().find(|&&n| n == 0) {
        return Err(Error::Domain { value: bad.to_string(), expected: "n >= 1" });
    }
    let rule = hermite_rule(nodes, ctx)?;
    let n_max = *ns.iter().max().unwrap();
    // each series value needs every lower one
    let series = zeta_series_sweep(n_max, terms, ctx)?;
    ns.par_iter()
        .map(|&n| {
            let s = f64::from(2 * n + 1);
            let reference = zeta_reference(s, ctx.at_least(error_digits(n)))?.value;
            let integral = (zeta_integral_with_rule(s, &rule)?.value - &reference).abs();
            let series = (&series[n as usize - 1].value - &reference).abs();
            let geomean = zeta_odd_geomean(n, ctx)?.abs_error;
            Ok(Table3Row { n, integral, series, geomean })
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct FitRow {
    pub n: u32,
    pub error: BigReal,
    pub lg_error: BigReal,
}

/// Least-squares line through `(n, lg ε(n))`.
pub fn run_fit(ns: &[u32], ctx: PrecisionContext) -> Result<(Vec<FitRow>, FitResult)> {
    let rows: Vec<FitRow> = run_table2(ns, ctx)
        .into_iter()
        .map(|r| FitRow { n: r.n, lg_error: r.error.log10(), error: r.error })
        .collect();
    if rows.len() < 3 {
        return Err(Error::InvalidInput(format!("fit needs at least 3 rows, got {}", rows.len())));
    }
    let fit_ctx = PrecisionContext::new(30);
    let points: Vec<(BigReal, BigReal)> = rows
        .iter()
        .map(|r| (BigReal::from_u64(u64::from(r.n), fit_ctx), r.lg_error.with_context(fit_ctx)))
        .collect();
    let fit = fit_line(&points)?;
    Ok((rows, fit))
}

#[derive(Clone, Debug)]
pub struct FigureRow {
    pub s: f64,
    pub approx: BigReal,
    /// Present at integer `s`.
    pub accurate: Option<BigReal>,
    /// `lg |approx − accurate|` at integer `s`; `None` where the formula is exact.
    pub lg_error: Option<BigReal>,
}

/// Grid points `s_min, s_min + step, …` up to `s_max`, rounded to 10 decimals.
pub fn figure_grid(s_min: f64, s_max: f64, step: f64) -> Result<Vec<f64>> {
    if !(s_min >= 2.0 && s_max > s_min && step > 0.0 && s_min.is_finite() && s_max.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "figure grid needs 2 <= min < max and step > 0, got min {s_min}, max {s_max}, step {step}"
        )));
    }
    let count = ((s_max - s_min) / step + 1e-9).floor() as u64;
    Ok((0..=count)
        .map(|i| ((s_min + i as f64 * step) * 1e10).round() / 1e10)
        .collect())
}

/// The asymptotic formula over a grid, with errors at integer points.
pub fn run_figure(s_min: f64, s_max: f64, step: f64, ctx: PrecisionContext) -> Result<Vec<FigureRow>> {
    figure_grid(s_min, s_max, step)?
        .into_par_iter()
        .map(|s| {
            let approx = asymptotic_zeta(s, ctx)?;
            if s.fract() != 0.0 {
                return Ok(FigureRow { s, approx, accurate: None, lg_error: None });
            }
            let accurate = zeta_best(s, ctx)?;
            let lg_error = (s != 2.0).then(|| (&approx - &accurate).abs().log10());
            Ok(FigureRow { s, approx, accurate: Some(accurate), lg_error })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_rows() {
        let rows = run_table1(PrecisionContext::new(40)).unwrap();
        assert_eq!(rows.len(), 10);
        let r2 = &rows[1];
        assert_eq!(r2.approx.to_fixed_string(12), "1.036972837734");
        assert_eq!(r2.accurate.to_fixed_string(12), "1.036927755143");
        assert_eq!(r2.error.to_fixed_string(12), "0.000045082590");
        let r7 = &rows[6];
        assert_eq!(r7.approx.to_fixed_string(12), "1.000030593607");
        assert_eq!(r7.error.to_fixed_string(12), "0.000000005371");
        assert_eq!(rows[0].error.to_fixed_string(12), "-0.000721028904");
    }

    #[test]
    fn table2_small() {
        let rows = run_table2(&[100, 5], PrecisionContext::new(30));
        assert_eq!(rows[0].n, 100);
        assert_eq!(rows[0].error.to_sci_string(3), "1.05e-97");
        assert_eq!(rows[0].digits, 130);
        assert_eq!(rows[1].n, 5);
    }

    #[test]
    fn fit_needs_three_rows() {
        assert!(run_fit(&[20, 30], PrecisionContext::new(30)).is_err());
        let (rows, fit) = run_fit(&[20, 40, 60, 80], PrecisionContext::new(30)).unwrap();
        assert_eq!(rows.len(), 4);
        assert!((fit.slope.to_f64() + 0.954).abs() < 0.01);
    }

    #[test]
    fn table3_small() {
        let rows = run_table3(&[3, 6], 25, 25, PrecisionContext::new(60)).unwrap();
        assert_eq!(rows[0].geomean.to_sci_string(3), "1.59e-5");
        assert_eq!(rows[1].geomean.to_sci_string(3), "4.55e-8");
        assert!(rows.iter().all(|r| r.series < BigReal::from_f64(1e-19, r.series.ctx())));
        assert!(run_table3(&[0], 25, 25, PrecisionContext::new(30)).is_err());
    }

    #[test]
    fn grid_points() {
        let g = figure_grid(2.0, 3.0, 0.25).unwrap();
        assert_eq!(g, vec![2.0, 2.25, 2.5, 2.75, 3.0]);
        let g = figure_grid(2.0, 12.0, 0.05).unwrap();
        assert_eq!(g.len(), 201);
        assert_eq!(g[1], 2.05);
        assert_eq!(*g.last().unwrap(), 12.0);
        assert!(figure_grid(1.0, 3.0, 0.5).is_err());
        assert!(figure_grid(3.0, 3.0, 0.5).is_err());
        assert!(figure_grid(2.0, 3.0, 0.0).is_err());
    }

    #[test]
    fn figure_rows() {
        let rows = run_figure(2.0, 5.0, 0.5, PrecisionContext::new(30)).unwrap();
        assert_eq!(rows.len(), 7);
        assert!(rows[0].accurate.is_some() && rows[0].lg_error.is_none());
        assert!(rows[1].accurate.is_none());
        let lg = |i: usize| rows[i].lg_error.as_ref().unwrap().to_f64();
        assert!((lg(2) + 2.856).abs() < 0.01);
        assert!((lg(4) + 2.695).abs() < 0.01);
    }
}
