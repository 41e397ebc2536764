//! Foundation layer: exact rationals, context-tagged multiprecision reals,
//! unit-interval quadrature and least-squares line fitting.

mod fit;
mod precision;
mod quadrature;
mod rational;
mod real;

pub use fit::{fit_line, FitResult};
pub use precision::{PrecisionContext, DEFAULT_GUARD_DIGITS};
pub use quadrature::{integrate_01, integrate_01_with, EndpointLimits, QuadratureConfig};
pub use rational::Rational;
pub use real::BigReal;
