use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The requested parameters lie outside the range where the formula holds.
    #[error("out of domain: {0}")]
    OutOfDomain(String),

    #[error("operator dimension {dim} exceeds the size cap {cap}")]
    SizeCap { dim: usize, cap: usize },

    /// A proven structural property failed to hold. Indicates a bug.
    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! invalid {
    ($($arg:tt)*) => {
        $crate::error::Error::InvalidArgument(format!($($arg)*))
    };
}
pub(crate) use invalid;
