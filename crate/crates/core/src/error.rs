use thiserror::Error;

/// Errors produced by the polynomial engine and the combinatorial maps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring descriptor mismatch: {left} vs {right} X-variables")]
    RingMismatch { left: usize, right: usize },
    #[error("pole: {0} is assigned 0 but occurs with a negative exponent")]
    Pole(String),
    #[error("specialization leaves the coefficient ring: {0}")]
    NonInvertible(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial is not divisible by the given divisor")]
    Indivisible,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("operator expansion for order {order} exceeds the cap {cap}")]
    Capacity { order: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
