use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalars or matrices belong to different fields")]
    FieldMismatch,
    #[error("k-th root of zero requested")]
    ZeroBase,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("cannot parse scalar {0:?}")]
    ParseScalar(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ad_e0 is zero, the algebra would be Abelian")]
    ZeroOperator,
    #[error("ad_e0 must act on a space of dimension at least 1")]
    EmptyOperator,
    #[error("algebra is decomposable")]
    NotIndecomposable,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("alpha must be nonzero")]
    ZeroAlpha,
    #[error("operation not available for this algebra class: {0}")]
    WrongAlgebraClass(&'static str),
    #[error("polynomial has {got} variables, algebra has {expected}")]
    VariableCountMismatch { expected: usize, got: usize },
    #[error("internal cross-check failed: {0}")]
    InternalCrossCheckFailure(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
