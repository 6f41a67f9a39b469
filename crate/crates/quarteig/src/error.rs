//! Error taxonomy shared by every module of the crate.

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The result cannot be represented at the requested argument
    /// (overflow of the unscaled value, for instance).
    #[error("range error: {0}")]
    Range(String),

    /// Parameters mu, nu must satisfy mu >= nu >= -1.
    #[error("ordering violation: require mu >= nu >= -1, got (mu, nu) = ({mu}, {nu})")]
    OrderingViolation { mu: i64, nu: i64 },

    /// Parameters mu, nu must have the same parity.
    #[error("parity mismatch: mu and nu must be integers of the same parity, got (mu, nu) = ({mu}, {nu})")]
    ParityMismatch { mu: i64, nu: i64 },

    /// The pair (-1, -1) is excluded from the parameter domain.
    #[error("excluded pair: (mu, nu) = (-1, -1) is not admissible")]
    BothMinusOne,

    /// A computation finished but its error estimate exceeds the target.
    #[error("accuracy error in {context}: estimated relative error {estimate:.3e} exceeds target {target:.3e}")]
    Accuracy {
        context: &'static str,
        estimate: f64,
        target: f64,
    },

    /// Adaptive quadrature ran out of subdivision depth. Carries the
    /// partial value and its error estimate.
    #[error("quadrature depth exhausted: partial value {partial:.17e}, error estimate {estimate:.3e}")]
    DepthExhausted { partial: f64, estimate: f64 },

    /// An integrand produced a non-finite sample.
    #[error("non-finite integrand sample at x = {at:.17e}")]
    NonFiniteSample { at: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
