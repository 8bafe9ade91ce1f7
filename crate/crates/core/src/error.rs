use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A value lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid weights: {0}")]
    Weight(String),

    #[error("division by zero in {0}")]
    DivisionByZero(&'static str),

    /// Both ideal distances (or both similarity scores) vanish for an alternative.
    #[error("degenerate problem: closeness of alternative {alternative} is 0/0")]
    DegenerateProblem { alternative: usize },

    #[error("method {method} requires {expected} weights")]
    WeightKindMismatch {
        method: &'static str,
        expected: &'static str,
    },

    #[error("aggregation pair is not declared jointly injective; the induced order is not admissible")]
    NonAdmissible,

    #[error("invalid problem: {0}")]
    Problem(String),

    #[error("unknown check: {0}")]
    UnknownCheck(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
