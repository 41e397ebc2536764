use std::collections::BTreeMap;

use rug::Integer;

use crate::error::{Error, Result};
use crate::numerics::{BigReal, PrecisionContext};
use crate::zeta::{zeta_even, Method, ZetaValue};

/// Odd values already produced by the series, keyed by `m` in ζ(2m+1).
///
/// Each ζ(2n+1) consumes every lower odd value, so entries are filled in
/// increasing `m`.
#[derive(Clone, Debug, Default)]
pub struct SeriesState {
    pub known_odd: BTreeMap<u32, BigReal>,
    /// Index of the last retained term of the infinite sum (N₂).
    pub terms: u32,
}

impl SeriesState {
    pub fn new(terms: u32) -> Self {
        SeriesState { known_odd: BTreeMap::new(), terms }
    }
}

/// ζ(2n+1) from
///
/// ```text
/// (−1)^(n−1) (2π)^(2n) / ((2n)! [2^(2n)(2n−3) − 2n + 1]) ·
///   [ Σ_{m=1}^{n−1} (−1)^m C(2n−1, 2m−2) (2m)! (2^(2m) − 1)/(2π)^(2m) ζ(2m+1)
///     + 2 Σ_{k=0}^{N₂} ζ(2k) / ((2k+2n−1)(k+n)(2k+2n+1) 2^(2k)) ]
/// ```
///
/// with ζ(0) = −1/2. Lower odd values come from `state`, and the result is
/// stored back into it.
pub fn zeta_series_method(
    n: u32,
    terms: u32,
    ctx: PrecisionContext,
    state: &mut SeriesState,
) -> Result<ZetaValue> {
    if n == 0 {
        return Err(Error::Domain { value: "0".into(), expected: "n >= 1" });
    }
    if state.terms != terms {
        if state.known_odd.is_empty() {
            state.terms = terms;
        } else {
            return Err(Error::InvalidInput(format!(
                "series state was filled with {} terms, asked for {terms}",
                state.terms
            )));
        }
    }
    if let Some(m) = (1..n).find(|m| !state.known_odd.contains_key(m)) {
        return Err(Error::MissingOddValue { argument: 2 * n + 1, missing: 2 * m + 1 });
    }

    let two_pi = BigReal::pi(ctx) * 2;
    let two_n = 2 * n;

    let mut finite = BigReal::zero(ctx);
    for m in 1..n {
        let binom = Integer::from(Integer::binomial_u(two_n - 1, 2 * m - 2));
        let fact = Integer::from(Integer::factorial(2 * m));
        let pow4 = (Integer::from(1) << (2 * m)) - 1u32;
        let coeff = BigReal::from_integer(&(binom * fact * pow4), ctx) / two_pi.powi(2 * m as i32);
        let term = coeff * &state.known_odd[&m];
        finite = if m % 2 == 1 { finite - term } else { finite + term };
    }

    let mut tail = BigReal::zero(ctx);
    for k in 0..=terms {
        let zeta_2k = if k == 0 {
            BigReal::from_f64(-0.5, ctx)
        } else {
            zeta_even(k, ctx).value
        };
        let (k, n) = (i64::from(k), i64::from(n));
        let denom = Integer::from(2 * k + 2 * n - 1) * (k + n) * (2 * k + 2 * n + 1);
        let denom = BigReal::from_integer(&denom, ctx) * BigReal::from_i64(2, ctx).powi(2 * k as i32);
        tail = tail + zeta_2k / denom;
    }

    let bracket = (Integer::from(1) << two_n) * (i64::from(two_n) - 3) - i64::from(two_n) + 1;
    let fact = Integer::from(Integer::factorial(two_n));
    let mut prefactor =
        two_pi.powi(two_n as i32) / BigReal::from_integer(&(fact * bracket), ctx);
    if n.is_multiple_of(2) {
        prefactor = -prefactor;
    }
    let value = prefactor * (finite + tail * 2);
    state.known_odd.insert(n, value.clone());
    Ok(ZetaValue::new(f64::from(2 * n + 1), value, Method::Series))
}

/// ζ(3), ζ(5), …, ζ(2·n_max+1) by the series, each feeding the next.
pub fn zeta_series_sweep(n_max: u32, terms: u32, ctx: PrecisionContext) -> Result<Vec<ZetaValue>> {
    let mut state = SeriesState::new(terms);
    (1..=n_max)
        .map(|n| zeta_series_method(n, terms, ctx, &mut state))
        .collect()
}

/// `(4π²/45) / ((2N+3)(N+2)(2N+5)(4^N − 1/2))`, the closed-form bound on the
/// n = 1 remainder after `N` terms.
pub fn series_error_bound(terms: u32, ctx: PrecisionContext) -> BigReal {
    let n = i64::from(terms);
    let poly = Integer::from(2 * n + 3) * (n + 2) * (2 * n + 5);
    let four_pow = BigReal::from_i64(4, ctx).powi(terms as i32) - BigReal::from_f64(0.5, ctx);
    BigReal::pi(ctx).square() * 4 / 45 / (BigReal::from_integer(&poly, ctx) * four_pow)
}

/// `−2 lg2 (N+1) − 3 lg N`, the large-N behaviour of `lg` of the bound.
pub fn series_error_asymptote(terms: u32, ctx: PrecisionContext) -> BigReal {
    let lg2 = BigReal::from_i64(2, ctx).log10();
    let lg_n = BigReal::from_u64(u64::from(terms), ctx).log10();
    -(lg2 * 2 * i64::from(terms + 1)) - lg_n * 3
}
