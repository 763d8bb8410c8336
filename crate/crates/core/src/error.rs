use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported radical: sqrt({0})")]
    UnsupportedRadical(String),
    #[error("pole of a rational function at the chosen value of t")]
    Pole,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("ring mismatch: {0:?} vs {1:?}")]
    RingMismatch(crate::superalg::Ring, crate::superalg::Ring),
    #[error("operation {op} is not defined on ring {ring:?}")]
    NotInRing { op: &'static str, ring: crate::superalg::Ring },
    #[error("parity mismatch: A(sigma)[{0},{1}] is zero")]
    ParityMismatch(i64, i64),
    #[error("invalid corepresentation index: {0}")]
    InvalidIndex(String),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("inconsistent structure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
