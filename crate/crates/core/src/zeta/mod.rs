//! Exact even-argument values, the η and ρ transforms, the Euler–Maclaurin
//! reference evaluator and the fractional-part partial sums.

mod even;
mod fractional;
mod reference;
mod transforms;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use even::{zeta_even, zeta_even_direct_sum, zeta_even_with, EvenConfig, DEFAULT_EXACT_THRESHOLD, MAX_DIRECT_TERMS};
pub use fractional::{fractional_sums, FractionalSums};
pub use reference::{euler_maclaurin_plan, zeta_reference, EulerMaclaurinPlan, MAX_SUMMATION_TERMS};
pub use transforms::{eta_from_zeta, rho, rho_from_zeta, zeta_best, zeta_from_eta, zeta_from_rho};

use crate::error::{Error, Result};
use crate::numerics::BigReal;

/// How a zeta value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ExactEven,
    Reference,
    Geomean,
    BoundsL,
    BoundsR,
    Asymptotic,
    Integral,
    Series,
}

impl Method {
    pub const ALL: [Method; 8] = [
        Method::ExactEven,
        Method::Reference,
        Method::Geomean,
        Method::BoundsL,
        Method::BoundsR,
        Method::Asymptotic,
        Method::Integral,
        Method::Series,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ExactEven => "exact-even",
            Method::Reference => "reference",
            Method::Geomean => "geomean",
            Method::BoundsL => "bounds-l",
            Method::BoundsR => "bounds-r",
            Method::Asymptotic => "asymptotic",
            Method::Integral => "integral",
            Method::Series => "series",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown method {s:?}")))
    }
}

/// One evaluation of ζ at `argument`.
#[derive(Clone, Debug)]
pub struct ZetaValue {
    pub argument: f64,
    pub value: BigReal,
    pub method: Method,
    pub digits: u32,
}

impl ZetaValue {
    pub fn new(argument: f64, value: BigReal, method: Method) -> Self {
        let digits = value.ctx().digits();
        ZetaValue { argument, value, method, digits }
    }
}

/// Rejects arguments outside the supported real domain `s ≥ 2`.
pub fn check_domain(s: f64) -> Result<()> {
    if s.is_finite() && s >= 2.0 {
        Ok(())
    } else {
        Err(Error::Domain { value: s.to_string(), expected: "real s >= 2" })
    }
}

/// `Some(k)` when `s` is a (float-exact) integer.
pub fn as_integer(s: f64) -> Option<i64> {
    (s.fract() == 0.0 && s.abs() < 1e15).then_some(s as i64)
}
