use thiserror::Error;

/// Errors raised by the numeric and exact kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at input: {0}")]
    PoleAtInput(String),
    #[error("point is not in the upper half plane: {0}")]
    NotUpperHalfPlane(String),
    #[error("exact point requires an exact (rational) matrix")]
    NonExactMatrix,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("curve is singular (g2^3 = 27 g3^2)")]
    SingularCurve,
    #[error("recursion length {requested} exceeds ceiling {ceiling}")]
    CeilingExceeded { requested: usize, ceiling: usize },
    #[error("point outside the solution's domain: {0}")]
    OutsideDomain(String),
    #[error("coefficients are not degenerate (discriminant {0} != 0)")]
    NotDegenerate(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("requested tolerance {requested:e} unreachable, achieved {achieved:e}")]
    PrecisionUnreachable { requested: f64, achieved: f64 },
    #[error("unsupported argument: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
