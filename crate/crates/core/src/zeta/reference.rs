//! Euler–Maclaurin evaluation of ζ(s) for real `s ≥ 2`:
//!
//! ```text
//! ζ(s) = Σ_{k=1}^{K−1} k^(−s) + K^(1−s)/(s−1) + K^(−s)/2
//!        + Σ_{j=1}^{J} B_{2j}/(2j)! · s(s+1)…(s+2j−2) · K^(−s−2j+1)
//! ```
//!
//! `K` and `J` are picked from magnitude estimates so that the first omitted
//! correction term is below `10^(−P−5)`.

use super::{as_integer, check_domain, Method, ZetaValue};
use crate::bernoulli::bernoulli_number;
use crate::error::{Error, Result};
use crate::numerics::{BigReal, PrecisionContext};

/// Hard cap on the number of directly summed terms `K`.
pub const MAX_SUMMATION_TERMS: u64 = 10_000_000;

const MAX_CORRECTIONS: u32 = 20_000;

/// Summation length `K` and number of Bernoulli corrections `J`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EulerMaclaurinPlan {
    pub terms: u64,
    pub corrections: u32,
}

/// Cheapest `(K, J)` whose first omitted term is below `10^(−target_digits)`.
pub fn euler_maclaurin_plan(s: f64, target_digits: u32) -> Result<EulerMaclaurinPlan> {
    let target = -f64::from(target_digits);
    let mut best: Option<(f64, EulerMaclaurinPlan)> = None;
    let mut k: u64 = 1;
    while k <= MAX_SUMMATION_TERMS {
        if let Some((cost, _)) = best {
            if k as f64 > cost {
                break;
            }
        }
        if let Some(j) = corrections_needed(s, k, target) {
            let cost = k as f64 + 4.0 * f64::from(j);
            if best.is_none_or(|(c, _)| cost < c) {
                best = Some((cost, EulerMaclaurinPlan { terms: k, corrections: j }));
            }
        }
        k = (k + 1).max((k as f64 * 1.05).ceil() as u64);
    }
    best.map(|(_, plan)| plan).ok_or(Error::ParameterSearch {
        s: s.to_string(),
        target_digits,
        k_cap: MAX_SUMMATION_TERMS,
    })
}

/// Smallest `J` such that correction `J+1` is below `10^target`, or `None`
/// when the asymptotic terms start growing first.
fn corrections_needed(s: f64, k: u64, target: f64) -> Option<u32> {
    let log_k = (k as f64).log10();
    let log_two_pi = (2.0 * std::f64::consts::PI).log10();
    // log10 of s(s+1)…(s+2j−2), built incrementally
    let mut log_poch = s.log10();
    let mut previous = f64::INFINITY;
    for j in 1..=MAX_CORRECTIONS {
        if j > 1 {
            let jf = f64::from(j);
            log_poch += (s + 2.0 * jf - 3.0).log10() + (s + 2.0 * jf - 2.0).log10();
        }
        let jf = f64::from(j);
        // |B_2j|/(2j)! = 2ζ(2j)/(2π)^(2j), ζ(2j) ≤ π²/6
        let log_coeff = 2.0f64.log10() + 0.2163 - 2.0 * jf * log_two_pi;
        let log_term = log_coeff + log_poch - (s + 2.0 * jf - 1.0) * log_k;
        if log_term < target {
            return Some(j - 1);
        }
        if log_term > previous {
            return None;
        }
        previous = log_term;
    }
    None
}

/// High-precision reference ζ(s) for real `s ≥ 2`.
pub fn zeta_reference(s: f64, ctx: PrecisionContext) -> Result<ZetaValue> {
    check_domain(s)?;
    let plan = euler_maclaurin_plan(s, ctx.digits() + 5)?;
    let value = euler_maclaurin(s, plan, ctx);
    Ok(ZetaValue::new(s, value, Method::Reference))
}

fn euler_maclaurin(s: f64, plan: EulerMaclaurinPlan, ctx: PrecisionContext) -> BigReal {
    let s_real = BigReal::from_f64(s, ctx);
    let neg_s = -&s_real;
    let int_exp = as_integer(s).and_then(|v| i32::try_from(-v).ok());
    let power = |k: u64| -> BigReal {
        match int_exp {
            Some(e) => BigReal::from_u64(k, ctx).powi(e),
            None => BigReal::int_pow(k, &neg_s),
        }
    };

    let big_k = plan.terms;
    let head = if big_k > 1 {
        (1..big_k).rev().map(power).sum::<BigReal>()
    } else {
        BigReal::zero(ctx)
    };

    let k_real = BigReal::from_u64(big_k, ctx);
    let k_neg_s = power(big_k);
    // K^(1−s)
    let k_one_minus_s = &k_neg_s * &k_real;
    let integral_tail = &k_one_minus_s / (&s_real - 1);
    let half = &k_neg_s / 2;

    let mut corrections = BigReal::zero(ctx);
    if plan.corrections > 0 {
        let inv_k2 = k_real.square().recip();
        let mut poch = s_real.clone();
        let mut k_pow = &k_neg_s / &k_real; // K^(−s−1)
        let mut factorial = BigReal::from_i64(2, ctx);
        for j in 1..=plan.corrections {
            if j > 1 {
                let jj = i64::from(j);
                poch = poch * (&s_real + (2 * jj - 3)) * (&s_real + (2 * jj - 2));
                k_pow = k_pow * &inv_k2;
                factorial = factorial * ((2 * jj - 1) * (2 * jj));
            }
            let b = BigReal::from_rational(&bernoulli_number(2 * j), ctx);
            corrections = corrections + b / &factorial * &poch * &k_pow;
        }
    }

    head + integral_tail + half + corrections
}
