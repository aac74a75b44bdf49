use thiserror::Error;

/// Errors raised across the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("polynomial division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("polynomial is not divisible")]
    NotDivisible,
    #[error("polynomial is not a perfect {0}-th power")]
    NotAPower(u32),
    #[error("duplicate line: `{0}` is projectively equal to `{1}`")]
    DuplicateLine(String, String),
    #[error("line `{0}` has a zero covector")]
    ZeroCovector(String),
    #[error("unknown line label `{0}`")]
    UnknownLine(String),
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("classes do not partition the arrangement: {0}")]
    NotAPartition(String),
    #[error("non-positive multiplicity on line {0}")]
    NonPositiveMultiplicity(String),
    #[error("class polynomials do not span a pencil: {0}")]
    NotAPencil(String),
    #[error("degenerate pencil: {0}")]
    DegeneratePencil(String),
    #[error("invalid orbifold data: {0}")]
    InvalidOrbifoldData(String),
    #[error("fibration is not small: {0}")]
    NotSmall(String),
    #[error("expected exactly one multiple fiber, found {0}")]
    MultipleMultipleFibers(usize),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
