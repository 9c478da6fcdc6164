use thiserror::Error;

/// Errors raised by triangular matrix algebra.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("matrix order must be at least 1")]
    EmptyOrder,
    #[error("order mismatch: {lhs} vs {rhs}")]
    OrderMismatch { lhs: usize, rhs: usize },
    #[error("singular matrix: zero diagonal entry at index {index}")]
    Singular { index: usize },
    #[error("leading block of order {requested} out of range for order {order}")]
    OutOfRange { requested: usize, order: usize },
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, found: usize, expected: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error("index {index} out of domain for {what}")]
    InvalidIndex { what: &'static str, index: usize },
    #[error("{what}({index}) = {value} is not an integer")]
    NonIntegral { what: &'static str, index: usize, value: String },
    #[error("{what}({index}) = {value} is not positive")]
    NonPositive { what: &'static str, index: usize, value: String },
    #[error("cross-check {check} failed at n = {n}")]
    CrossCheck { check: &'static str, n: usize },
    #[error("unknown {kind} `{name}`; valid: {valid}")]
    Unknown { kind: &'static str, name: String, valid: String },
    #[error("functional {name} has {available} moments, polynomial needs {needed}")]
    InsufficientMoments { name: String, available: usize, needed: usize },
    #[error("weight {name}({index}) is zero")]
    ZeroWeight { name: String, index: usize },
    #[error("Seidel array has {rows} rows, diagonal {n} needs {needed}")]
    ArrayTooShort { rows: usize, n: usize, needed: usize },
    #[error("cannot parse rational `{0}`")]
    ParseRational(String),
    #[error("malformed input: {0}")]
    Format(String),
}

impl Error {
    pub(crate) fn unknown<I, S>(kind: &'static str, name: &str, valid: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let valid = valid
            .into_iter()
            .map(|s| s.as_ref().to_string())
            .collect::<Vec<_>>()
            .join(", ");
        Error::Unknown { kind, name: name.to_string(), valid }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
