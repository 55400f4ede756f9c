use thiserror::Error;

/// Errors produced by the library. CLI exit codes are derived from
/// [`Error::is_parse_error`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("invalid modulus {0}: must be a prime below 2^32")]
    InvalidModulus(u64),
    #[error("row index {index} out of range 1..={rows}")]
    IndexOutOfRange { index: usize, rows: usize },
    #[error("invalid row operation: {0}")]
    InvalidOp(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("kernel is the whole space; nothing to extend")]
    FullKernel,
    #[error("assembled basis matrix is singular")]
    SingularBasis,
    #[error(
        "matrix is nonsingular (rank {rank} = n): a nilpotent row-equivalent witness \
         exists only for singular square matrices"
    )]
    NonSingular { rank: usize },
    #[error("matrices are not row equivalent (their RREFs differ)")]
    NotRowEquivalent,
    #[error("invalid catalog parameters: {0}")]
    InvalidParams(String),
    #[error("fixture could not be resolved: {0}")]
    FixtureUnresolved(String),
    #[error("certificate check failed: {0}")]
    CertificateViolation(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::InvalidModulus(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
