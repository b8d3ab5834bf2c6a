use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Unknown names, malformed JSON, inconsistent sizes.
    #[error("structural error: {0}")]
    Structure(String),
    /// Arguments that are well formed but do not satisfy a precondition.
    #[error("argument error: {0}")]
    Argument(String),
    #[error("division error: {0}")]
    Division(String),
    /// A mathematical invariant failed (non-invariant input, denominator that did not clear).
    #[error("invariant violation: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! bail {
    ($kind:ident, $($arg:tt)*) => {
        return Err($crate::error::Error::$kind(format!($($arg)*)))
    };
}
pub(crate) use bail;

impl Error {
    /// Short machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Structure(_) => "structure",
            Error::Argument(_) => "argument",
            Error::Division(_) => "division",
            Error::Invariant(_) => "invariant",
            Error::Parse(_) => "parse",
        }
    }

    /// The message without the variant prefix.
    pub fn message(&self) -> &str {
        match self {
            Error::Structure(m) | Error::Argument(m) | Error::Division(m) | Error::Invariant(m) | Error::Parse(m) => m,
        }
    }
}
