use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),

    #[error("event does not belong to this algebra: {0}")]
    AlgebraMismatch(String),

    #[error("capacity exceeded: {what} is {actual}, cap is {cap}")]
    Capacity {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("invalid assessment: {0}")]
    InvalidAssessment(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("absoluteness violated: mu(S) = {0}, expected 0")]
    Absoluteness(String),

    #[error("measure is not normalized: max |mu(A)| = {0}, expected 1")]
    NotNormalized(String),

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("guess is not equivalent to the Hahn positive part: {0}")]
    GuessEquivalence(String),

    #[error("not absolutely continuous: prior is zero but posterior is positive at atom {0}")]
    AbsoluteContinuity(String),

    #[error("contract violated: {0}")]
    Contract(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("grid error: {0}")]
    Grid(String),

    #[error("cannot condition on a null event: {0}")]
    NullConditioning(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(err: serde_json::Error) -> Self {
        Error::Parse(err.to_string())
    }
}
