use crate::error::Result;
use crate::numerics::{BigReal, PrecisionContext};
use crate::zeta::{eta_from_zeta, zeta_even};

/// Both inequalities of the η lemma at index `n`:
///
/// 1. `4/η(2n+2) − 1/η(2n) > 3`
/// 2. `η(2n) > (2^(2n−1) − 2)/(2^(2n−1) − 1)`
#[derive(Clone, Debug)]
pub struct Lemma1Check {
    pub n: u32,
    pub lhs1: BigReal,
    pub holds1: bool,
    /// `lhs2 = η(2n)`.
    pub lhs2: BigReal,
    pub rhs2: BigReal,
    pub holds2: bool,
}

impl Lemma1Check {
    pub fn margin1(&self) -> BigReal {
        &self.lhs1 - 3
    }

    pub fn margin2(&self) -> BigReal {
        &self.lhs2 - &self.rhs2
    }
}

/// Evaluates both sides from exact even values. The first margin shrinks like
/// `10^(−0.95n)`, so the context is widened to `n + 30` digits when needed.
pub fn lemma1_check(n: u32, ctx: PrecisionContext) -> Result<Lemma1Check> {
    assert!(n >= 1, "lemma indices start at n = 1");
    let ctx = ctx.at_least(n + 30);
    let eta_2n = eta_from_zeta(f64::from(2 * n), &zeta_even(n, ctx).value)?;
    let eta_2n2 = eta_from_zeta(f64::from(2 * n + 2), &zeta_even(n + 1, ctx).value)?;
    let lhs1 = eta_2n2.recip() * 4 - eta_2n.recip();
    let holds1 = lhs1 > 3;
    let p = BigReal::from_i64(2, ctx).powi(2 * n as i32 - 1);
    let rhs2 = (&p - 2) / (&p - 1);
    let holds2 = eta_2n > rhs2;
    Ok(Lemma1Check { n, lhs1, holds1, lhs2: eta_2n, rhs2, holds2 })
}
