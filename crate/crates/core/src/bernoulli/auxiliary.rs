use std::fmt;

use rug::ops::Pow;
use rug::Integer;

use crate::numerics::{BigReal, PrecisionContext, Rational};

/// Exact value `coefficient · π^pi_power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiScaled {
    pub coefficient: Rational,
    pub pi_power: i32,
}

impl PiScaled {
    pub fn zero() -> Self {
        PiScaled { coefficient: Rational::zero(), pi_power: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn to_real(&self, ctx: PrecisionContext) -> BigReal {
        BigReal::from_rational(&self.coefficient, ctx) * BigReal::pi(ctx).powi(self.pi_power)
    }

    /// Multiplies by `factor · π^shift`, keeping zero canonical.
    pub fn scale(&self, factor: &Rational, shift: i32) -> Self {
        let coefficient = &self.coefficient * factor;
        if coefficient.is_zero() {
            PiScaled::zero()
        } else {
            PiScaled { coefficient, pi_power: self.pi_power + shift }
        }
    }
}

impl fmt::Display for PiScaled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "({})·π^{}", self.coefficient, self.pi_power)
        }
    }
}

/// `I_c(n,m) = ∫₀¹ B_{2n}(t)·cos(mπt) dt`: zero for odd `m`,
/// `(−1)^(n+1)·(2n)!/(mπ)^(2n)` for even `m`.
pub fn aux_integral_cos(n: u32, m: u32) -> PiScaled {
    closed_form(n, m, 2 * n)
}

/// `I_s(n,m) = ∫₀¹ B_{2n+1}(t)·sin(mπt) dt`: zero for odd `m`,
/// `(−1)^(n+1)·(2n+1)!/(mπ)^(2n+1)` for even `m`.
pub fn aux_integral_sin(n: u32, m: u32) -> PiScaled {
    closed_form(n, m, 2 * n + 1)
}

fn closed_form(n: u32, m: u32, order: u32) -> PiScaled {
    assert!(n >= 1 && m >= 1, "auxiliary integrals need n >= 1 and m >= 1");
    if m % 2 == 1 {
        return PiScaled::zero();
    }
    let fact = Integer::from(Integer::factorial(order));
    let denom = Integer::from(m).pow(order);
    let mut coefficient = Rational::new(fact, denom);
    if n.is_multiple_of(2) {
        coefficient = -coefficient;
    }
    PiScaled { coefficient, pi_power: -(order as i32) }
}
