//! Exact Bernoulli numbers and polynomials, the two reduced families
//!
//! * `B_n⁺ = (−1)^(n+1)·B_{2n}` (always positive), and
//! * `B_n⁻ = (−1)^(n+1)·∫₀¹ B_{2n+1}(x)·cot(πx) dx`,
//!
//! and the auxiliary integrals `I_c`, `I_s` in exact closed form.
//!
//! Convention throughout: `B_1 = −1/2`.

mod auxiliary;
mod cache;
mod polynomial;

pub use auxiliary::{aux_integral_cos, aux_integral_sin, PiScaled};
pub use cache::BernoulliCache;
pub use polynomial::{BernoulliPolynomial, RealPolynomial};

use crate::error::Result;
use crate::numerics::{integrate_01, BigReal, EndpointLimits, PrecisionContext, Rational};

/// Exact `B_n` from the shared cache.
pub fn bernoulli_number(n: u32) -> Rational {
    BernoulliCache::global().get(n as usize)
}

pub fn bernoulli_polynomial(n: u32) -> BernoulliPolynomial {
    BernoulliPolynomial::new(n)
}

/// `B_n⁺ = (−1)^(n+1)·B_{2n}`. Panics for `n = 0`.
pub fn rbn_plus(n: u32) -> Rational {
    assert!(n >= 1, "reduced Bernoulli numbers start at n = 1");
    let b = bernoulli_number(2 * n);
    if n % 2 == 1 {
        b
    } else {
        -b
    }
}

/// `B_n⁻` by quadrature of `(−1)^(n+1)·B_{2n+1}(x)·cot(πx)`.
///
/// Near either endpoint `B_{2n+1}(x)·cot(πx) → (2n+1)·B_{2n}/π`, which is
/// passed as the endpoint limit. Panics for `n = 0`.
pub fn rbn_minus(n: u32, ctx: PrecisionContext) -> Result<BigReal> {
    assert!(n >= 1, "reduced Bernoulli numbers start at n = 1");
    let poly = bernoulli_polynomial(2 * n + 1).to_real(ctx);
    let sign = if n % 2 == 1 { 1 } else { -1 };
    let pi = BigReal::pi(ctx);
    let limit = BigReal::from_rational(&(rbn_plus(n) * Rational::from(2 * n as i64 + 1)), ctx) / &pi;
    integrate_01(
        |x| poly.eval(x) * (&pi * x).cot() * sign,
        &EndpointLimits::symmetric(limit),
        ctx,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: Σ_{k=0}^{n} C(n+1,k)·B_k = 0 with plain rational sums.
    fn oracle_bernoulli(max: usize) -> Vec<Rational> {
        let mut b: Vec<Rational> = vec![Rational::one()];
        for n in 1..=max {
            let mut sum = Rational::zero();
            for (k, bk) in b.iter().enumerate() {
                let c = rug::Integer::from(rug::Integer::binomial_u(n as u32 + 1, k as u32));
                sum = sum + Rational::from(c) * bk;
            }
            b.push(-(sum / Rational::from(n as i64 + 1)));
        }
        b
    }

    #[test]
    fn matches_brute_force_recurrence() {
        let oracle = oracle_bernoulli(60);
        for (n, expected) in oracle.iter().enumerate() {
            assert_eq!(&bernoulli_number(n as u32), expected, "B_{n}");
        }
        assert_eq!(bernoulli_number(12), Rational::new(-691, 2730));
    }

    #[test]
    fn sign_pattern_and_odd_zeros() {
        for k in 1..=150u32 {
            let b = bernoulli_number(2 * k);
            let expected = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(b.signum(), expected, "B_{}", 2 * k);
            assert!(bernoulli_number(2 * k + 1).is_zero());
            assert!(rbn_plus(k).signum() > 0);
        }
    }

    #[test]
    fn rbn_plus_values() {
        assert_eq!(rbn_plus(1), Rational::new(1, 6));
        assert_eq!(rbn_plus(2), Rational::new(1, 30));
        assert_eq!(rbn_plus(6), Rational::new(691, 2730));
    }

    #[test]
    fn rbn_plus_asymptotic_ratio_tends_to_one() {
        // rbn_plus(n)·(2π)^{2n}/(2(2n)!) = ζ(2n) ↓ 1
        let ctx = PrecisionContext::new(40);
        let two_pi = BigReal::pi(ctx) * 2;
        let mut prev_gap: Option<BigReal> = None;
        for n in 1..=30u32 {
            let fact = BigReal::from_integer(&rug::Integer::from(rug::Integer::factorial(2 * n)), ctx);
            let ratio = BigReal::from_rational(&rbn_plus(n), ctx) * two_pi.powi(2 * n as i32) / (fact * 2);
            let gap = &ratio - 1;
            assert!(gap > 0);
            if let Some(p) = &prev_gap {
                assert!(gap < *p);
            }
            prev_gap = Some(gap);
        }
        assert!(prev_gap.unwrap() < BigReal::from_f64(1e-17, ctx));
    }

    #[test]
    fn fourier_asymptotics_of_even_polynomials() {
        let ctx = PrecisionContext::new(40);
        let two_pi = BigReal::pi(ctx) * 2;
        for n in 2..=10u32 {
            let poly = bernoulli_polynomial(2 * n);
            let fact = BigReal::from_integer(&rug::Integer::from(rug::Integer::factorial(2 * n)), ctx);
            let sign = if n % 2 == 1 { 1 } else { -1 };
            let scale = two_pi.powi(2 * n as i32) / (fact * 2) * sign;
            let bound = BigReal::from_i64(2, ctx).powi(1 - 2 * n as i32);
            for q in 0..4i64 {
                let x = Rational::new(q, 4);
                let bx = BigReal::from_rational(&poly.eval_rational(&x), ctx);
                let cos = (&two_pi * BigReal::from_rational(&x, ctx)).cos();
                let dev = (&scale * bx - cos).abs();
                assert!(dev <= bound, "n = {n}, x = {q}/4");
            }
        }
    }

    #[test]
    fn rbn_minus_first_value() {
        // 2·3!/(2π)³·ζ(3) with ζ(3) = 1.2020569031595942853997381615114499907649862923405
        let ctx = PrecisionContext::new(40);
        let zeta3 = BigReal::parse("1.2020569031595942853997381615114499907649862923405", ctx).unwrap();
        let expected = zeta3 * 12 / (BigReal::pi(ctx) * 2).powi(3);
        let got = rbn_minus(1, ctx).unwrap();
        assert!((got.clone() - expected).abs() < BigReal::from_f64(1e-38, ctx));
        assert_eq!(got.to_fixed_string(8), "0.05815227");
    }
}
