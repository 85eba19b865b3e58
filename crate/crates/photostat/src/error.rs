//! Crate-wide error type.

/// Errors produced by the simulation and estimation routines.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its documented domain.
    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: &'static str, reason: String },

    /// Adaptive quadrature did not reach the requested tolerance.
    #[error("quadrature did not converge on [{lo}, {hi}] (requested tolerance {tolerance:e})")]
    QuadratureNonConvergence { lo: f64, hi: f64, tolerance: f64 },

    /// A pattern-function grid failed the discrete orthogonality self-test.
    #[error(
        "orthogonality self-test failed: defect {defect:e} exceeds {tolerance:e} \
         (grid too coarse or too narrow for the requested Fock index)"
    )]
    OrthogonalityFailure { defect: f64, tolerance: f64 },

    /// Histograms for different settings carry different run counts.
    #[error("histogram run counts differ across settings: {first} vs {second}")]
    MismatchedRuns { first: u64, second: u64 },

    /// A kernel references a setting with no matching histogram or distribution.
    #[error("kernel setting `{setting}` has no matching data")]
    MissingSetting { setting: String },

    /// A generating-function base came too close to the branch cut origin.
    #[error("generating-function branch hazard: per-setting base modulus {modulus:e} below 1e-6")]
    BranchHazard { modulus: f64 },

    /// A computed variance was negative beyond the numerical rounding floor.
    #[error("variance {value:e} is negative beyond the rounding floor")]
    NegativeVariance { value: f64 },

    /// A tabulated sampling CDF violated monotonicity.
    #[error("tabulated CDF non-monotone at index {index} (drop {drop:e})")]
    NonMonotoneCdf { index: usize, drop: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(name: &'static str, reason: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            reason: reason.into(),
        }
    }

    /// True for failures of a numerical contract (as opposed to bad input).
    pub fn is_numerical_contract_failure(&self) -> bool {
        matches!(
            self,
            Error::QuadratureNonConvergence { .. }
                | Error::OrthogonalityFailure { .. }
                | Error::BranchHazard { .. }
                | Error::NegativeVariance { .. }
                | Error::NonMonotoneCdf { .. }
        )
    }
}
