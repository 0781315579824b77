use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("division requires at least one divisor")]
    EmptyDivisors,
    #[error("divisors must be nonzero")]
    ZeroDivisor,
    #[error("ideal generators must be nonzero and nonempty")]
    InvalidGenerators,
    #[error("invalid ordering matrix: {0}")]
    InvalidOrderMatrix(String),
    #[error("invalid weight vector: {0}")]
    InvalidWeight(String),
    #[error("ideal is not zero-dimensional: the staircase is infinite")]
    NotZeroDimensional,
    #[error("design points must be pairwise distinct (rows {first} and {second} coincide)")]
    DuplicatePoint { first: usize, second: usize },
    #[error("design must contain at least one point")]
    EmptyDesign,
    #[error("generators have an empty zero set: the design is empty")]
    EmptyVariety,
    #[error("fraction point at row {row} does not belong to the base design")]
    FractionNotInBase { row: usize },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("wrong cardinality: expected {expected}, found {found}")]
    WrongCardinality { expected: usize, found: usize },
    #[error("exponent set is not downward closed: {0}")]
    NotDownwardClosed(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("internal error: {0}")]
    Internal(String),
}
