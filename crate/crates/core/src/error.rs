use thiserror::Error;

/// Errors raised by the projective, closure and analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("the zero vector does not represent a projective point")]
    ZeroVector,
    #[error("join of a point with itself is undefined")]
    EqualPoints,
    #[error("meet of a line with itself is undefined")]
    EqualLines,
    #[error("point cap of {cap} exceeded (level would reach {attempted} points)")]
    PointCapExceeded { cap: usize, attempted: usize },
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("invalid caps: {0}")]
    InvalidCaps(String),
    #[error("the point store is not stabilized")]
    NotStabilized,
    #[error("at least {needed} points are required, got {got}")]
    TooFewPoints { needed: usize, got: usize },
    #[error("the four points do not form a quadrangle")]
    NotAQuadrangle,
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
