use thiserror::Error;

/// Errors surfaced by the evaluators and the table harness.
#[derive(Debug, Error)]
pub enum Error {
    #[error("quadrature did not converge: last two estimates {previous} and {last}")]
    QuadratureNonConvergence { previous: String, last: String },

    #[error("least-squares fit needs at least two distinct abscissae, got {distinct}")]
    DegenerateFit { distinct: usize },

    #[error("argument {value} is outside the supported domain ({expected})")]
    Domain { value: String, expected: &'static str },

    #[error("no Euler-Maclaurin parameters reach 1e-{target_digits} at s = {s} within K <= {k_cap}")]
    ParameterSearch { s: String, target_digits: u32, k_cap: u64 },

    #[error("bound chain violated at n = {n}: zeta_l = {zeta_l}, zeta_r = {zeta_r}")]
    BoundsViolated { n: u32, zeta_l: String, zeta_r: String },

    #[error("Newton polishing of Hermite node {index} (order {order}) did not converge")]
    RootPolish { order: u32, index: usize },

    #[error("Hermite root isolation found {found} of {expected} positive roots")]
    RootIsolation { found: usize, expected: usize },

    #[error("series for zeta({argument}) needs the lower odd value zeta({missing})")]
    MissingOddValue { argument: u32, missing: u32 },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("cannot parse {input:?} as a real number")]
    Parse { input: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Short machine-readable tag for the error family.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::QuadratureNonConvergence { .. } => "quadrature_non_convergence",
            Error::DegenerateFit { .. } => "degenerate_fit",
            Error::Domain { .. } => "domain",
            Error::ParameterSearch { .. } => "parameter_search",
            Error::BoundsViolated { .. } => "bounds_violated",
            Error::RootPolish { .. } => "root_polish",
            Error::RootIsolation { .. } => "root_isolation",
            Error::MissingOddValue { .. } => "missing_odd_value",
            Error::InvalidInput(_) => "invalid_input",
            Error::Parse { .. } => "parse",
        }
    }
}
