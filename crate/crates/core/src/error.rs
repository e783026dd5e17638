use thiserror::Error;

/// Errors raised by the integral routines and the verification harness.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument violates the precondition of the named function.
    #[error("{func}: {reason}")]
    Domain { func: &'static str, reason: String },

    /// The requested relative error is outside the range the algorithm supports.
    #[error("{func}: relative error {r:e} outside ({min:e}, {max:e}]")]
    Tolerance {
        func: &'static str,
        r: f64,
        min: f64,
        max: f64,
    },

    /// Iteration did not meet its stopping rule within the hard cap.
    #[error("{func}: no convergence after {cap} iterations")]
    NoConvergence { func: &'static str, cap: u32 },

    /// The phase of zero is undefined.
    #[error("phase of zero is undefined")]
    UndefinedPhase,

    /// Adaptive quadrature failed to reach its target.
    #[error("quadrature did not converge: estimated error {estimate:e} after {intervals} subintervals")]
    Quadrature { estimate: f64, intervals: usize },

    /// Malformed record in a check-value table.
    #[error("corpus line {line}: {msg}")]
    Corpus { line: usize, msg: String },
}

impl Error {
    pub(crate) fn domain(func: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            func,
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
