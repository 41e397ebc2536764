//! Competing evaluators for ζ at odd integers: a Gauss–Hermite ratio of
//! integrals and a rapidly convergent series over even values.

mod hermite;
mod series;

pub use hermite::{hermite_rule, zeta_integral_method, zeta_integral_with_rule, HermiteRule};
pub use series::{
    series_error_asymptote, series_error_bound, zeta_series_method, zeta_series_sweep, SeriesState,
};
