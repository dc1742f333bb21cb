//! Error type shared by the whole crate.

use thiserror::Error;

/// Everything that can go wrong when building or manipulating codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{0} is not a prime power")]
    NotAPrimePower(u64),
    #[error("field order {0} exceeds the supported maximum of 2^16")]
    FieldTooLarge(u64),
    #[error("division by zero in the field")]
    DivisionByZero,
    #[error("element encoding {value} is out of range for a field of order {q}")]
    OutOfRange { value: u32, q: u32 },
    #[error("ambient dimensions differ: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("invalid dimension k={k} for ambient dimension n={n}")]
    InvalidDimension { k: usize, n: usize },
    #[error("invalid type vector: {0}")]
    InvalidTypeVector(String),
    #[error("subspaces are not nested at level {level}")]
    NotNested { level: usize },
    #[error("dimension {actual} at level {level} does not match the expected {expected}")]
    DimensionMismatch {
        level: usize,
        expected: usize,
        actual: usize,
    },
    #[error("sequences have incompatible types or lengths")]
    TypeMismatch,
    #[error("level index {index} out of range for {levels} levels")]
    IndexOutOfRange { index: usize, levels: usize },
    #[error("a code must contain at least one word")]
    EmptyCode,
    #[error("the operation needs a code with at least two flags")]
    TooFewFlags,
    #[error("erasure pattern is not realizable: {0}")]
    InfeasiblePattern(String),
    #[error("loss probability {0} is outside [0, 1]")]
    InvalidProbability(f64),
    #[error("received subspace at level {level} is not contained in the sent one")]
    NotASubflag { level: usize },
    #[error("the code is not coherent: {0}")]
    NotCoherent(String),
    #[error("could not build {wanted} distinct flags after {attempts} attempts")]
    Unsatisfiable { wanted: usize, attempts: usize },
    #[error("parse error at line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("invalid flag {index} in file: {source}")]
    InvalidFlag {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    /// Stable identifier for machine-readable CLI output and exit reporting.
    pub fn class(&self) -> &'static str {
        match self {
            Error::NotAPrimePower(_) => "not-a-prime-power",
            Error::FieldTooLarge(_) => "field-too-large",
            Error::DivisionByZero => "division-by-zero",
            Error::OutOfRange { .. } => "out-of-range",
            Error::AmbientMismatch(..) => "ambient-mismatch",
            Error::FieldMismatch => "field-mismatch",
            Error::InvalidDimension { .. } => "invalid-dimension",
            Error::InvalidTypeVector(_) => "invalid-type-vector",
            Error::NotNested { .. } => "not-nested",
            Error::DimensionMismatch { .. } => "dimension-mismatch",
            Error::TypeMismatch => "type-mismatch",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::EmptyCode => "empty-code",
            Error::TooFewFlags => "too-few-flags",
            Error::InfeasiblePattern(_) => "infeasible-pattern",
            Error::InvalidProbability(_) => "invalid-probability",
            Error::NotASubflag { .. } => "not-a-subflag",
            Error::NotCoherent(_) => "not-coherent",
            Error::Unsatisfiable { .. } => "unsatisfiable",
            Error::Syntax { .. } => "syntax",
            Error::InvalidFlag { source, .. } => source.class(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
