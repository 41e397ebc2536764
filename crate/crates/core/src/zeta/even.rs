use rug::Integer;

use super::{Method, ZetaValue};
use crate::bernoulli::rbn_plus;
use crate::numerics::{BigReal, PrecisionContext, Rational};

/// Above this `n`, ζ(2n) is summed directly instead of going through `B_{2n}`.
pub const DEFAULT_EXACT_THRESHOLD: u32 = 512;

#[derive(Clone, Copy, Debug)]
pub struct EvenConfig {
    pub exact_threshold: u32,
}

impl Default for EvenConfig {
    fn default() -> Self {
        EvenConfig { exact_threshold: DEFAULT_EXACT_THRESHOLD }
    }
}

/// ζ(2n) for `n ≥ 1`.
pub fn zeta_even(n: u32, ctx: PrecisionContext) -> ZetaValue {
    zeta_even_with(n, ctx, &EvenConfig::default())
}

pub fn zeta_even_with(n: u32, ctx: PrecisionContext, config: &EvenConfig) -> ZetaValue {
    assert!(n >= 1, "zeta_even needs n >= 1");
    let direct = n > config.exact_threshold
        && direct_sum_terms(f64::from(2 * n), ctx.working_digits()).is_some();
    let value = if direct {
        zeta_even_direct_sum(n, ctx)
    } else {
        zeta_even_bernoulli(n, ctx)
    };
    ZetaValue::new(f64::from(2 * n), value, Method::ExactEven)
}

/// `ζ(2n) = (2π)^(2n)·B_n⁺ / (2·(2n)!)`.
fn zeta_even_bernoulli(n: u32, ctx: PrecisionContext) -> BigReal {
    let fact = Integer::from(Integer::factorial(2 * n)) * 2u32;
    let scaled = rbn_plus(n) / Rational::from(fact);
    let two_pi = BigReal::pi(ctx) * 2;
    BigReal::from_rational(&scaled, ctx) * two_pi.powi(2 * n as i32)
}

/// `Σ_{k=1}^{K} k^(−2n)` with `K` chosen so the tail is below the working
/// precision. Panics when that needs more than [`MAX_DIRECT_TERMS`] terms.
pub fn zeta_even_direct_sum(n: u32, ctx: PrecisionContext) -> BigReal {
    let exponent = -(2 * n as i32);
    let terms = direct_sum_terms(f64::from(2 * n), ctx.working_digits())
        .expect("direct summation is only used for large even arguments");
    (1..=terms)
        .rev()
        .map(|k| BigReal::from_u64(k, ctx).powi(exponent))
        .sum()
}

/// Upper limit on the number of directly summed terms.
pub const MAX_DIRECT_TERMS: u64 = 100_000;

/// Smallest `K` with `Σ_{k>K} k^(−s) ≤ (K+1)^(−s)·(1 + (K+1)/(s−1)) < 10^(−digits−2)`,
/// or `None` past [`MAX_DIRECT_TERMS`].
pub(crate) fn direct_sum_terms(s: f64, digits: u32) -> Option<u64> {
    let target = -(f64::from(digits) + 2.0);
    // (K+1)^(−s) alone must already be below the target
    let start = 10f64.powf(-target / s).floor() - 2.0;
    if start > MAX_DIRECT_TERMS as f64 {
        return None;
    }
    let mut k = start.max(1.0) as u64;
    while k <= MAX_DIRECT_TERMS {
        let next = (k + 1) as f64;
        let tail = -s * next.log10() + (1.0 + next / (s - 1.0)).log10();
        if tail < target {
            return Some(k);
        }
        k += 1;
    }
    None
}
