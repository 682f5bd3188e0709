use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// An argument violated a documented precondition.
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature ran out of subdivisions before meeting `abs_tol`.
    #[error(
        "tolerance not reached: error estimate {estimate:e} > {requested:e} after {subdivisions} subdivisions"
    )]
    ToleranceNotReached {
        estimate: f64,
        requested: f64,
        subdivisions: usize,
    },

    /// The ODE integrator could not make progress.
    #[error("step size underflow at t = {t} (h = {h:e})")]
    StepSizeUnderflow { t: f64, h: f64 },

    /// A hypothesis of the operator Hoffman bound does not hold.
    #[error("hypothesis violated: {0}")]
    Hypothesis(&'static str),

    /// Malformed graph input.
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// Edge-list parse failure, with the 1-based line number.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// The graph has no edges, so the Hoffman ratio is undefined.
    #[error("graph has no edges; the Hoffman bound is undefined")]
    Edgeless,
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}
