use std::cmp::Ordering;

use super::BigReal;
use crate::error::{Error, Result};

/// Least-squares line `y = slope·x + intercept`.
#[derive(Clone, Debug)]
pub struct FitResult {
    pub slope: BigReal,
    pub intercept: BigReal,
    pub max_abs_residual: BigReal,
}

impl FitResult {
    pub fn predict(&self, x: &BigReal) -> BigReal {
        &self.slope * x + &self.intercept
    }
}

/// Ordinary least squares over `(abscissa, ordinate)` pairs, minimising the
/// summed squared ordinate residuals. Uses centred sums.
pub fn fit_line(points: &[(BigReal, BigReal)]) -> Result<FitResult> {
    let distinct = distinct_abscissae(points);
    if points.len() < 2 || distinct < 2 {
        return Err(Error::DegenerateFit { distinct });
    }
    let ctx = points
        .iter()
        .flat_map(|(x, y)| [x.ctx(), y.ctx()])
        .reduce(|a, b| a.widest(b))
        .expect("non-empty");
    let n = points.len() as i64;
    let mean_x = points.iter().map(|(x, _)| x.with_context(ctx)).sum::<BigReal>() / n;
    let mean_y = points.iter().map(|(_, y)| y.with_context(ctx)).sum::<BigReal>() / n;

    let mut sxx = BigReal::zero(ctx);
    let mut sxy = BigReal::zero(ctx);
    for (x, y) in points {
        let dx = x - &mean_x;
        let dy = y - &mean_y;
        sxy = sxy + &dx * &dy;
        sxx = sxx + dx.square();
    }
    let slope = sxy / sxx;
    let intercept = &mean_y - &slope * &mean_x;

    let max_abs_residual = points
        .iter()
        .map(|(x, y)| (y - (&slope * x + &intercept)).abs())
        .reduce(BigReal::max)
        .expect("non-empty");

    Ok(FitResult { slope, intercept, max_abs_residual })
}

fn distinct_abscissae(points: &[(BigReal, BigReal)]) -> usize {
    let mut xs: Vec<&BigReal> = points.iter().map(|(x, _)| x).collect();
    xs.sort_by(|a, b| a.partial_cmp(b).unwrap_or(Ordering::Equal));
    xs.dedup_by(|a, b| a == b);
    xs.len()
}
