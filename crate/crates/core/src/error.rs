use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Input list is not sorted, has duplicates or has nonpositive entries.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// `a + b` lies in the candidate set while neither `a` nor `b` does.
    #[error("not a gapset: {a} + {b} is a gap but neither {a} nor {b} is")]
    NotAGapset { a: i64, b: i64 },

    #[error("generators have gcd {0}, the generated monoid has infinite complement")]
    NotCofinite(i64),

    #[error("value {0} exceeds the supported range (at most 2^31 - 2)")]
    OutOfRange(i64),

    #[error(
        "pseudo-Frobenius numbers are undefined for the semigroup of all nonnegative integers"
    )]
    EmptyPseudoFrobenius,

    /// A documented precondition of an operation does not hold.
    #[error("precondition violated: {0}")]
    Domain(String),

    #[error("{what} = {value} exceeds the configured ceiling {max}")]
    Ceiling {
        what: &'static str,
        value: i64,
        max: i64,
    },

    #[error("not the pseudo-Frobenius set of a high-type almost symmetric semigroup: {0}")]
    InvalidPseudoFrobenius(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
