use crate::scalar::ScalarError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("generator index outside the alphabet")]
    AlphabetMismatch,
    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("relation `{stated}` orients to `{derived}` under the monomial order")]
    OrientationMismatch { stated: String, derived: String },
    #[error("rule is not decreasing in the monomial order: {0}")]
    NonTerminating(String),
    #[error("no braiding data for {0}")]
    CoverageGap(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("basis too large: {0} elements")]
    BasisTooLarge(usize),
    #[error("twist needs a finite basis or an explicit degree bound")]
    UnboundedTwist,
    #[error("module data needs a finite-dimensional host")]
    InfiniteHost,
    #[error("missing section or entry: {0}")]
    Missing(String),
}

pub type Result<T> = std::result::Result<T, Error>;
