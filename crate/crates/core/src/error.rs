use thiserror::Error;

/// Errors raised by the engine. Identity failures are not errors; they are
/// reported through [`crate::report::Report`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has zero constant term and cannot be inverted")]
    ZeroConstantTerm,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("expected a {expected} structure, found {found}")]
    KindMismatch { expected: String, found: String },
    #[error("bilinear map is not alternating at ({0}, {1})")]
    NotAlternating(usize, usize),
    #[error("base structure fails its defining identity: {0}")]
    InvalidBase(String),
    #[error("order {requested} exceeds truncation order {order}")]
    OrderOutOfRange { requested: usize, order: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("division by zero: {0}")]
    Pole(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("unknown parameter {param:?} for {entry}")]
    UnknownParameter { entry: String, param: String },
}

pub type Result<T> = std::result::Result<T, Error>;
