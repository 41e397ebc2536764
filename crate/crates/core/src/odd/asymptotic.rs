use crate::error::Result;
use crate::numerics::{BigReal, PrecisionContext};
use crate::zeta::zeta_even;

/// ζ(s) from the recurrence extended to real `s`:
///
/// ```text
/// 1/ζ(s) ≈ (2^(s−1) − 1)/2^(2s−3) · (2/ζ(2) − 1) + (2^(s−1) − 1)/2^(s−1)
/// ```
///
/// At `s = 2` the right side is exactly `1/ζ(2)`, so ζ(2) is returned as is.
pub fn asymptotic_zeta(s: f64, ctx: PrecisionContext) -> Result<BigReal> {
    crate::zeta::check_domain(s)?;
    let zeta2 = zeta_even(1, ctx).value;
    if s == 2.0 {
        return Ok(zeta2);
    }
    let a = BigReal::exp2(&BigReal::from_f64(s - 1.0, ctx)); // 2^(s−1)
    let a_minus_one = &a - 1;
    let rho2 = zeta2.recip() * 2 - 1;
    // 2^(2s−3) = a²/2
    let first = &a_minus_one * 2 / a.square() * rho2;
    let second = &a_minus_one / &a;
    Ok((first + second).recip())
}

/// Asymptotic density of `s`-free integers, `1/ζ(s)`, through [`asymptotic_zeta`].
pub fn sfree_density(s: u32, ctx: PrecisionContext) -> Result<BigReal> {
    Ok(asymptotic_zeta(f64::from(s), ctx)?.recip())
}

/// `x·density`: estimated count of `s`-free integers in `1..=x`.
pub fn sfree_count_estimate(x: u64, s: u32, ctx: PrecisionContext) -> Result<BigReal> {
    Ok(sfree_density(s, ctx)? * BigReal::from_u64(x, ctx))
}
