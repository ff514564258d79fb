use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QcError {
    #[error("circulant size mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("cell ({row}, {col}): exponents {a} and {b} coincide mod {n}")]
    ExponentCollision { row: usize, col: usize, a: i64, b: i64, n: usize },
    #[error("entry ({row}, {col}) has coefficient {coeff}, not a binary matrix")]
    NotBinary { row: usize, col: usize, coeff: u64 },
    #[error("matrix is not bound to a circulant size")]
    Unbound,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("{0}")]
    Invalid(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, QcError>;

impl From<std::io::Error> for QcError {
    fn from(e: std::io::Error) -> Self {
        QcError::Io(e.to_string())
    }
}
