use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid slope: both coordinates are zero")]
    InvalidSlope,

    #[error("map is not unimodular (determinant {det})")]
    NotUnimodular { det: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// `pair` is 1-based.
    #[error("pair {pair} {reason}")]
    Validation { pair: usize, reason: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("prefix index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("unsupported regime: {0}")]
    UnsupportedRegime(String),

    #[error("edge-rounding not applicable: {0}")]
    NotApplicable(String),

    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::UnsupportedRegime(_) | Error::NotApplicable(_) => 1,
            Error::InternalInvariant(_) => 3,
            _ => 2,
        }
    }

    pub(crate) fn positive_only(what: &str) -> Self {
        Error::UnsupportedRegime(format!(
            "{what} requires every cabling coefficient P_i > 0 in the preferred framing"
        ))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
