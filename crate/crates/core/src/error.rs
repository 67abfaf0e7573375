use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("parts are not weakly decreasing: {0}")]
    NotDecreasing(String),

    #[error("inner shape {inner} is not contained in outer shape {outer}")]
    NotContained { outer: String, inner: String },

    #[error("symbol universes do not match")]
    UniverseMismatch,

    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),

    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),

    #[error("factor {0} has non-positive inverse degree; geometric expansion is not graded-complete")]
    NotGraded(String),

    #[error("series is unbounded without a truncation order: {0}")]
    Unbounded(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("coset labelled by {mu} does not fit the window p={p}, q={q}")]
    WindowTooSmall { mu: String, p: usize, q: usize },

    #[error("weight is not admissible: {0}")]
    Weight(String),

    #[error("polynomial division left a nonzero remainder")]
    InexactDivision,

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
