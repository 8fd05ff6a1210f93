use thiserror::Error;

/// Domain errors. Display strings start with the variant name so the CLI can
/// surface them verbatim.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("InvalidRank: rank must be at least 1, got {0}")]
    InvalidRank(i64),
    #[error("NotRectangular: rows must be nonempty and of equal length")]
    NotRectangular,
    #[error("NotSemistandard: violation at row {row}, column {col}")]
    NotSemistandard { row: usize, col: usize },
    #[error("LetterOutOfRange: letter {letter} not in 1..={max}")]
    LetterOutOfRange { letter: i64, max: i64 },
    #[error("TooManyRows: {rows} rows exceed the bound {max}")]
    TooManyRows { rows: usize, max: usize },
    #[error("NonIntegerCoordinates: coordinate array has fractional entries")]
    NonIntegerCoordinates,
    #[error("ConstraintViolated: {0}")]
    ConstraintViolated(String),
    #[error("ShapeMismatch: {0}")]
    ShapeMismatch(String),
    #[error("NotHighestWeight: path is not highest weight")]
    NotHighestWeight,
    #[error("NotRationalHighestWeight: rational path is not highest weight")]
    NotRationalHighestWeight,
    #[error("BudgetExceeded: enumeration exceeded the budget of {0} candidates")]
    BudgetExceeded(u64),
    #[error("PositionOutOfRange: position {pos} not in 1..={max}")]
    PositionOutOfRange { pos: usize, max: usize },
    #[error("VerificationFailed: {0}")]
    VerificationFailed(String),
    #[error("NotAdmissible: negative vacancy number at level {level}, length {length}")]
    NotAdmissible { level: usize, length: String },
    #[error("RiggingOutOfRange: rigging {rigging} at level {level}, length {length} outside [0, {vacancy}]")]
    RiggingOutOfRange {
        level: usize,
        length: String,
        rigging: String,
        vacancy: String,
    },
    #[error("NoBoxToRemove: L^(1) has no row of length 1")]
    NoBoxToRemove,
    #[error("SelectionFailed: {0}")]
    SelectionFailed(String),
    #[error("PreconditionViolated: {0}")]
    PreconditionViolated(String),
    #[error("NotIntegral: operation requires integral data")]
    NotIntegral,
    #[error("ReconstructionInvalid: {0}")]
    ReconstructionInvalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
