//! Riemann zeta values at integer arguments in arbitrary precision.
//!
//! Odd values ζ(2n+1) are estimated from the two neighbouring even values
//! through the reciprocal function `ρ(s) = 1/η(s) − 1` and the geometric mean
//! `ρ(2n+1) ≈ √(ρ(2n)·ρ(2n+2))`. Two competitor evaluators (a Gauss–Hermite
//! integral and a rapidly convergent series) and an Euler–Maclaurin reference
//! are included for comparison, together with the table and figure runners
//! used by the command-line front-end.

pub mod bernoulli;
pub mod error;
pub mod harness;
pub mod methods;
pub mod numerics;
pub mod odd;
pub mod zeta;

pub use error::{Error, Result};
pub use numerics::{BigReal, PrecisionContext, Rational};
