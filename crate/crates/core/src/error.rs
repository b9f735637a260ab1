use thiserror::Error;

/// Errors produced anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// `index` is 1-based and points at the first offending entry.
    #[error("not a bijection of [1..{len}]: bad value {value} at index {index}")]
    NotABijection {
        index: usize,
        value: usize,
        len: usize,
    },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// `position` is a 0-based character offset into the input.
    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("{0} is outside the trichotomy (not a (231,1432:231)-avoider)")]
    NotInTrichotomy(String),

    #[error("{0} is not unimodal")]
    NotUnimodal(String),

    #[error("{function} is undefined for n = {n} (requires n >= {min})")]
    Domain {
        function: &'static str,
        n: usize,
        min: usize,
    },

    #[error("chain {0} has no structural or closed-form counterpart")]
    UnsupportedChain(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }
}
