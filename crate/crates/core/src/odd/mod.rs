//! Odd-argument estimator built on the two nearest even values.
//!
//! With `ρ(s) = 1/η(s) − 1`, the ratio `ρ(2n+1)/ρ(2n)` tends to 1/2, giving
//! the bracket
//!
//! ```text
//! ρ(2n)/2  →  ζ^l(2n+1)  (upper bound)
//! 2ρ(2n+2) →  ζ^r(2n+1)  (lower bound)
//! ```
//!
//! and the estimate `ρ(2n+1) ≈ √(ρ(2n)·ρ(2n+2))`, mapped back to ζ(2n+1).

mod asymptotic;
mod lemma;

pub use asymptotic::{asymptotic_zeta, sfree_count_estimate, sfree_density};
pub use lemma::{lemma1_check, Lemma1Check};

use crate::error::{Error, Result};
use crate::numerics::{BigReal, PrecisionContext};
use crate::zeta::{rho, rho_from_zeta, zeta_even, zeta_from_rho, zeta_reference};

/// Digits used when measuring the estimator's error at index `n`; the error
/// behaves like `10^(−0.95n)`, so this keeps the reference 25+ digits below it.
pub fn error_digits(n: u32) -> u32 {
    40.max(n + 30)
}

/// Bounds, estimate and measured error for ζ(2n+1).
#[derive(Clone, Debug)]
pub struct OddEstimate {
    pub n: u32,
    pub zeta_l: BigReal,
    pub zeta_r: BigReal,
    pub zeta_gm: BigReal,
    pub reference: BigReal,
    /// `zeta_gm − reference`.
    pub signed_error: BigReal,
    pub abs_error: BigReal,
}

impl OddEstimate {
    pub fn argument(&self) -> u32 {
        2 * self.n + 1
    }
}

fn odd_arg(n: u32) -> f64 {
    f64::from(2 * n + 1)
}

fn rho_even(n: u32, ctx: PrecisionContext) -> Result<BigReal> {
    rho_from_zeta(f64::from(2 * n), &zeta_even(n, ctx).value)
}

/// `ρ(2n+1)/ρ(2n)` with ρ(2n+1) from the reference evaluator.
pub fn recurrence_ratio(n: u32, ctx: PrecisionContext) -> Result<BigReal> {
    check_index(n)?;
    let odd = rho(odd_arg(n), ctx)?;
    Ok(odd / rho_even(n, ctx)?)
}

/// `(ζ^l, ζ^r)` from `ρ(2n)/2` and `2ρ(2n+2)`; fails if `ζ^l > ζ^r > 1` does not hold.
pub fn zeta_bounds(n: u32, ctx: PrecisionContext) -> Result<(BigReal, BigReal)> {
    check_index(n)?;
    let lower_rho = rho_even(n, ctx)?;
    let upper_rho = rho_even(n + 1, ctx)?;
    bounds_from_rhos(n, &lower_rho, &upper_rho)
}

fn bounds_from_rhos(n: u32, rho_2n: &BigReal, rho_2n2: &BigReal) -> Result<(BigReal, BigReal)> {
    let s = odd_arg(n);
    let zeta_l = zeta_from_rho(s, &(rho_2n / 2))?;
    let zeta_r = zeta_from_rho(s, &(rho_2n2 * 2))?;
    if !(zeta_l > zeta_r && zeta_r > 1) {
        return Err(Error::BoundsViolated {
            n,
            zeta_l: zeta_l.to_sci_string(20),
            zeta_r: zeta_r.to_sci_string(20),
        });
    }
    Ok((zeta_l, zeta_r))
}

/// Geometric-mean estimate of ζ(2n+1), with bounds and the error against the
/// reference evaluator.
///
/// Runs at `max(ctx.digits, error_digits(n))` digits so the measured error is
/// meaningful for large `n`.
pub fn zeta_odd_geomean(n: u32, ctx: PrecisionContext) -> Result<OddEstimate> {
    check_index(n)?;
    let ctx = ctx.at_least(error_digits(n));
    let rho_2n = rho_even(n, ctx)?;
    let rho_2n2 = rho_even(n + 1, ctx)?;
    let (zeta_l, zeta_r) = bounds_from_rhos(n, &rho_2n, &rho_2n2)?;
    let rho_gm = (&rho_2n * &rho_2n2).sqrt();
    let zeta_gm = zeta_from_rho(odd_arg(n), &rho_gm)?;
    let reference = zeta_reference(odd_arg(n), ctx)?.value;
    let signed_error = &zeta_gm - &reference;
    let abs_error = signed_error.abs();
    Ok(OddEstimate { n, zeta_l, zeta_r, zeta_gm, reference, signed_error, abs_error })
}

fn check_index(n: u32) -> Result<()> {
    if n == 0 {
        Err(Error::Domain { value: "0".into(), expected: "n >= 1" })
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::Float;

    fn mpfr_zeta(s: u32, ctx: PrecisionContext) -> BigReal {
        BigReal::from_float(Float::with_val(ctx.bits() + 32, Float::zeta_u(s)), ctx)
    }

    #[test]
    fn ratio_values() {
        let ctx = PrecisionContext::new(40);
        let r1 = recurrence_ratio(1, ctx).unwrap();
        assert_eq!(r1.to_fixed_string(5), "0.50594");
        // oracle: ρ from MPFR's zeta
        for n in [1u32, 10, 30] {
            let rho_of = |s: u32| {
                let z = mpfr_zeta(s, ctx);
                let factor = BigReal::one(ctx) - BigReal::from_i64(2, ctx).powi(1 - s as i32);
                (z * factor).recip() - 1
            };
            let oracle = rho_of(2 * n + 1) / rho_of(2 * n);
            let got = recurrence_ratio(n, ctx).unwrap();
            assert!((got - oracle).abs() < BigReal::from_f64(1e-20, ctx), "n = {n}");
        }
        let gap10 = recurrence_ratio(10, ctx).unwrap() - BigReal::from_f64(0.5, ctx);
        assert_eq!(gap10.to_sci_string(3), "4.97e-5");
    }

    #[test]
    fn ratio_gap_shrinks_after_second_index() {
        let ctx = PrecisionContext::new(60);
        let half = BigReal::from_f64(0.5, ctx);
        let gaps: Vec<BigReal> = (1..=30)
            .map(|n| (recurrence_ratio(n, ctx).unwrap() - &half).abs())
            .collect();
        // the gap grows once, from n = 1 to n = 2, and then decays
        assert!(gaps[1] > gaps[0]);
        assert!(gaps[1..].windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn first_bounds() {
        let ctx = PrecisionContext::new(40);
        let (l, r) = zeta_bounds(1, ctx).unwrap();
        assert_eq!(l.to_fixed_string(6), "1.203449");
        assert_eq!(r.to_fixed_string(6), "1.199193");
        let z3 = mpfr_zeta(3, ctx);
        assert!(l > z3 && z3 > r);
    }

    #[test]
    fn bounds_tend_to_one() {
        let ctx = PrecisionContext::new(80);
        let (l, r) = zeta_bounds(60, ctx).unwrap();
        let tol = BigReal::from_f64(1e-30, ctx);
        assert!((l - 1).abs() < tol && (r - 1).abs() < tol);
    }

    #[test]
    fn bounds_violation_is_reported() {
        let ctx = PrecisionContext::new(30);
        let a = BigReal::from_f64(0.1, ctx);
        let b = BigReal::from_f64(0.5, ctx);
        // swapped neighbours put ζ^r above ζ^l
        assert!(matches!(bounds_from_rhos(1, &a, &b), Err(Error::BoundsViolated { n: 1, .. })));
    }

    #[test]
    fn table_rows() {
        let ctx = PrecisionContext::new(40);
        let e1 = zeta_odd_geomean(1, ctx).unwrap();
        assert_eq!(e1.zeta_gm.to_fixed_string(12), "1.201335874256");
        let e5 = zeta_odd_geomean(5, ctx).unwrap();
        assert_eq!(e5.zeta_gm.to_fixed_string(12), "1.000494555053");
        assert_eq!(e5.reference.to_fixed_string(12), "1.000494188604");
        let e10 = zeta_odd_geomean(10, ctx).unwrap();
        assert_eq!(e10.zeta_gm.to_fixed_string(12), "1.000000476941");
        assert_eq!(e10.abs_error.to_fixed_string(12), "0.000000000008");
    }

    #[test]
    fn ordering_and_error_sign() {
        let ctx = PrecisionContext::new(40);
        for n in 1..=10u32 {
            let e = zeta_odd_geomean(n, ctx).unwrap();
            assert!(e.zeta_l > e.zeta_gm && e.zeta_gm > e.zeta_r && e.zeta_r > 1, "n = {n}");
            assert!(e.zeta_l > e.reference && e.reference > e.zeta_r, "n = {n}");
            // only ζ(3) is underestimated
            assert_eq!(e.signed_error.is_sign_negative(), n == 1, "n = {n}");
            assert_eq!(e.argument(), 2 * n + 1);
        }
    }

    #[test]
    fn zero_index_rejected() {
        let ctx = PrecisionContext::new(20);
        assert!(zeta_odd_geomean(0, ctx).is_err());
        assert!(zeta_bounds(0, ctx).is_err());
        assert!(recurrence_ratio(0, ctx).is_err());
    }
}
