//! Tanh-sinh quadrature on the unit interval.
//!
//! Levels halve the step size and reuse every node of the previous level, so
//! each refinement costs only the new odd-indexed nodes. Integrands that are
//! analytic inside (0,1) converge double-exponentially. Nodes cluster at the
//! endpoints; when a node rounds onto an endpoint, or the integrand returns a
//! non-finite value there, the caller-supplied one-sided limit is used.

use rayon::prelude::*;

use super::{BigReal, PrecisionContext};
use crate::error::{Error, Result};

/// One-sided limits of the integrand at 0 and 1, used where the raw formula
/// is indeterminate.
#[derive(Clone, Debug, Default)]
pub struct EndpointLimits {
    pub left: Option<BigReal>,
    pub right: Option<BigReal>,
}

impl EndpointLimits {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn both(left: BigReal, right: BigReal) -> Self {
        EndpointLimits { left: Some(left), right: Some(right) }
    }

    pub fn symmetric(limit: BigReal) -> Self {
        Self::both(limit.clone(), limit)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct QuadratureConfig {
    /// Levels below this are never accepted, even if two estimates agree.
    pub min_level: u32,
    /// Step size at the last level is `2^-max_level`.
    pub max_level: u32,
    /// Stop once successive levels agree to `10^-(digits + extra_digits)`.
    pub extra_digits: u32,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig { min_level: 3, max_level: 12, extra_digits: 2 }
    }
}

/// `∫₀¹ f(x) dx` to an absolute error of about `10^-P`.
pub fn integrate_01<F>(f: F, limits: &EndpointLimits, ctx: PrecisionContext) -> Result<BigReal>
where
    F: Fn(&BigReal) -> BigReal + Sync,
{
    integrate_01_with(f, limits, ctx, &QuadratureConfig::default())
}

pub fn integrate_01_with<F>(
    f: F,
    limits: &EndpointLimits,
    ctx: PrecisionContext,
    config: &QuadratureConfig,
) -> Result<BigReal>
where
    F: Fn(&BigReal) -> BigReal + Sync,
{
    let t_max = truncation_point(ctx.working_digits());
    let tol = BigReal::from_i64(10, ctx).powi(-((ctx.digits() + config.extra_digits) as i32));
    let one = BigReal::one(ctx);
    let pi = BigReal::pi(ctx);

    // Contribution of the symmetric node pair at t (or the centre node at t = 0).
    let pair = |t_num: i64, level: u32| -> BigReal {
        let t = BigReal::from_i64(t_num, ctx) / BigReal::from_i64(1i64 << level, ctx);
        if t_num == 0 {
            let half = BigReal::from_i64(1, ctx) / 2;
            let w = &pi / 4;
            return w * eval_with_limit(&f, &half, None);
        }
        let e = (&pi * t.sinh()).exp();
        let delta = (&e + 1).recip();
        let w = &pi * t.cosh() * &delta * (&one - &delta);
        let right_x = &one - &delta;
        let left = eval_with_limit(&f, &delta, limits.left.as_ref());
        let right = if right_x == 1 {
            limits.right.clone().unwrap_or_else(|| f(&right_x))
        } else {
            eval_with_limit(&f, &right_x, limits.right.as_ref())
        };
        w * (left + right)
    };

    let mut sum = {
        let k_max = t_max.floor() as i64;
        let terms: Vec<BigReal> = (0..=k_max).into_par_iter().map(|k| pair(k, 0)).collect();
        terms.into_iter().sum::<BigReal>()
    };
    let mut previous = sum.clone();
    let mut older = previous.clone();

    for level in 1..=config.max_level {
        let scale = 1i64 << level;
        let k_max = (t_max * scale as f64).floor() as i64;
        let odd: Vec<i64> = (1..=k_max).step_by(2).collect();
        let terms: Vec<BigReal> = odd.par_iter().map(|&k| pair(k, level)).collect();
        if !terms.is_empty() {
            sum = sum + terms.into_iter().sum::<BigReal>();
        }
        let estimate = &sum / scale;
        let diff = (&estimate - &previous).abs();
        if !estimate.is_finite() {
            return Err(non_convergence(&previous, &estimate));
        }
        if level >= config.min_level && diff <= tol {
            return Ok(estimate.with_context(ctx));
        }
        older = std::mem::replace(&mut previous, estimate);
    }
    Err(non_convergence(&older, &previous))
}

fn non_convergence(previous: &BigReal, last: &BigReal) -> Error {
    Error::QuadratureNonConvergence {
        previous: previous.to_sci_string(20),
        last: last.to_sci_string(20),
    }
}

fn eval_with_limit<F>(f: &F, x: &BigReal, limit: Option<&BigReal>) -> BigReal
where
    F: Fn(&BigReal) -> BigReal,
{
    let y = f(x);
    match limit {
        Some(l) if !y.is_finite() => l.with_context(y.ctx()),
        _ => y,
    }
}

/// Smallest t whose weight `π cosh t / (1 + e^{π sinh t})` falls below
/// `10^-(digits + 5)`.
fn truncation_point(digits: u32) -> f64 {
    let target = (f64::from(digits) + 5.0) * std::f64::consts::LN_10;
    let pi = std::f64::consts::PI;
    let mut t = (target / pi).asinh();
    for _ in 0..20 {
        t = ((target + (pi * t.cosh()).ln()) / pi).asinh();
    }
    t
}
