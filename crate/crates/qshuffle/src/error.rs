use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot evaluate a polynomial with negative exponents at q = 0")]
    ZeroEvaluationPoint,
    #[error("generator index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("q = {0} is not admissible")]
    InadmissibleQ(String),
    #[error("{outer}/{inner} is not a horizontal strip")]
    NotAHorizontalStrip { outer: String, inner: String },
    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
    #[error("q = {0} is below 1, so 1/q is not a probability")]
    SubunitQ(String),
    #[error("eigenbasis is degenerate: {0}")]
    DegenerateBasis(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
