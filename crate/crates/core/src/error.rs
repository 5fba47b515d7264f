use thiserror::Error;

/// Errors raised by the degeneration toolkit.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("weight system is not in the cone K: {0}")]
    NotInCone(String),

    #[error("weight system is not in the interior of K")]
    NotInterior,

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("pattern is not an FFLV pattern for the given weight")]
    NotInPolytope,

    #[error("face precondition fails: {0}")]
    FaceOrder(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("size limit exceeded: {what} = {size} > {limit}")]
    SizeLimit { what: String, size: usize, limit: usize },

    #[error("zero polynomial has no initial part")]
    ZeroPolynomial,

    #[error("grading has no value for index {0}")]
    MissingIndex(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
