use super::{as_integer, check_domain, zeta_even, zeta_reference};
use crate::error::{Error, Result};
use crate::numerics::{BigReal, PrecisionContext};

/// `1 − 2^(1−s)`.
fn eta_factor(s: f64, ctx: PrecisionContext) -> Result<BigReal> {
    if !(s.is_finite() && s > 1.0) {
        return Err(Error::Domain { value: s.to_string(), expected: "s > 1 (1 - 2^(1-s) vanishes at s = 1)" });
    }
    let one = BigReal::one(ctx);
    let exponent = &one - BigReal::from_f64(s, ctx);
    Ok(one - BigReal::exp2(&exponent))
}

/// `η(s) = (1 − 2^(1−s))·ζ(s)`.
pub fn eta_from_zeta(s: f64, zeta: &BigReal) -> Result<BigReal> {
    Ok(eta_factor(s, zeta.ctx())? * zeta)
}

pub fn zeta_from_eta(s: f64, eta: &BigReal) -> Result<BigReal> {
    Ok(eta / eta_factor(s, eta.ctx())?)
}

/// `ρ = 1/η − 1` from a known ζ(s).
pub fn rho_from_zeta(s: f64, zeta: &BigReal) -> Result<BigReal> {
    Ok(eta_from_zeta(s, zeta)?.recip() - 1)
}

/// `ζ = 1/((1 + ρ)(1 − 2^(1−s)))`.
pub fn zeta_from_rho(s: f64, rho: &BigReal) -> Result<BigReal> {
    let factor = eta_factor(s, rho.ctx())?;
    Ok(((rho + 1) * factor).recip())
}

/// Best available ζ(s): the exact even formula at even integers, the
/// Euler–Maclaurin reference elsewhere.
pub fn zeta_best(s: f64, ctx: PrecisionContext) -> Result<BigReal> {
    check_domain(s)?;
    match as_integer(s) {
        Some(k) if k % 2 == 0 => Ok(zeta_even((k / 2) as u32, ctx).value),
        _ => Ok(zeta_reference(s, ctx)?.value),
    }
}

/// ρ(s) = 1/η(s) − 1 for `s ≥ 2`.
pub fn rho(s: f64, ctx: PrecisionContext) -> Result<BigReal> {
    rho_from_zeta(s, &zeta_best(s, ctx)?)
}
