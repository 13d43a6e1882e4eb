use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid element {element}: {reason}")]
    InvalidElement { element: String, reason: String },

    #[error("invalid composition {composition}: {reason}")]
    InvalidComposition { composition: String, reason: String },

    #[error("{upper} does not cover {lower}")]
    NotACover { lower: String, upper: String },

    #[error("unknown element {0}")]
    UnknownElement(String),

    #[error("invalid poset: {0}")]
    InvalidPoset(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("poset height {height} exceeds the render limit {limit}")]
    TooLarge { height: usize, limit: usize },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
