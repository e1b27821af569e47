use thiserror::Error;

/// Errors raised by the bound, oracle and certifier routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An evaluator returned NaN or an infinity.
    #[error("non-finite evaluation at x = {x}")]
    Evaluation { x: f64 },
    /// Adaptive refinement gave up before meeting its tolerance.
    #[error("convergence error: {0}")]
    Convergence(String),
    /// A class or monotonicity hypothesis was refuted by the samplers.
    #[error("{0}")]
    Hypothesis(String),
    /// Writing results failed.
    #[error("output error: {0}")]
    Output(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
