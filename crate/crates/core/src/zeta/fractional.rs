use rayon::prelude::*;

use super::{zeta_best, zeta_even};
use crate::error::Result;
use crate::numerics::{BigReal, PrecisionContext};

/// Partial sums of `frac(ζ(n)) = ζ(n) − 1` for `2 ≤ n ≤ max_n`.
#[derive(Clone, Debug)]
pub struct FractionalSums {
    pub all: BigReal,
    pub even: BigReal,
    pub odd: BigReal,
}

pub fn fractional_sums(max_n: u32, ctx: PrecisionContext) -> Result<FractionalSums> {
    assert!(max_n >= 2, "fractional sums start at n = 2");
    let fracs: Vec<(u32, BigReal)> = (2..=max_n)
        .into_par_iter()
        .map(|n| {
            let z = if n % 2 == 0 { zeta_even(n / 2, ctx).value } else { zeta_best(f64::from(n), ctx)? };
            Ok((n, z - 1))
        })
        .collect::<Result<_>>()?;
    let mut even = BigReal::zero(ctx);
    let mut odd = BigReal::zero(ctx);
    // largest n first, smallest terms first
    for (n, f) in fracs.into_iter().rev() {
        if n % 2 == 0 {
            even = even + f;
        } else {
            odd = odd + f;
        }
    }
    let all = &even + &odd;
    Ok(FractionalSums { all, even, odd })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_term() {
        let ctx = PrecisionContext::new(30);
        let sums = fractional_sums(2, ctx).unwrap();
        assert_eq!(sums.all.to_fixed_string(6), "0.644934");
        assert!(sums.odd.is_zero());
    }

    #[test]
    fn converges_to_one_three_quarters_one_quarter() {
        let ctx = PrecisionContext::new(40);
        let sums = fractional_sums(100, ctx).unwrap();
        let tol = BigReal::from_i64(10, ctx).powi(-28);
        assert!((&sums.all - 1).abs() < tol);
        assert!((&sums.even - BigReal::from_f64(0.75, ctx)).abs() < tol);
        assert!((&sums.odd - BigReal::from_f64(0.25, ctx)).abs() < tol);

        // oracle: plain sums of k^-n with 400 terms miss at most 400^-1
        // per exponent, so only check the leading digits
        let mut direct = BigReal::zero(ctx);
        for n in 2..=100i32 {
            for k in 2..=60i64 {
                direct = direct + BigReal::from_i64(k, ctx).powi(-n);
            }
        }
        assert!((direct - &sums.all).abs() < BigReal::from_f64(0.02, ctx));
    }
}
