use thiserror::Error;

/// Errors produced by the evaluation and verification layers.
#[derive(Debug, Error)]
pub enum Error {
    /// Input lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// Evaluation requested at (or too close to) a pole.
    #[error("pole error: {0}")]
    Pole(String),

    /// An iteration/term cap was reached before the tolerance was met.
    #[error("effort cap exceeded: {0}")]
    EffortExceeded(String),

    /// Quadrature refinement levels were exhausted without convergence.
    #[error("no convergence: {0}")]
    NonConvergence(String),

    /// Malformed arguments (bad flags, unparsable numbers, empty inputs).
    #[error("usage error: {0}")]
    Usage(String),

    /// A numeric kernel produced a non-finite value.
    #[error("numeric error: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;
