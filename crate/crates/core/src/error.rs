use std::path::PathBuf;

use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error)]
pub enum ForgeError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{path}:{line}: {msg}")]
    Parse {
        path: PathBuf,
        line: usize,
        msg: String,
    },

    #[error("duplicate sentence id `{0}`")]
    DuplicateId(String),

    #[error("unknown sentiment label `{0}`")]
    UnknownLabel(String),

    #[error("invalid token `{0}`: {1}")]
    InvalidToken(String, String),

    #[error("sentence `{id}`: {msg}")]
    Sentence { id: String, msg: String },

    #[error("out-of-vocabulary source word `{0}`")]
    OutOfVocabulary(String),

    #[error("{0}")]
    Invalid(String),
}

impl ForgeError {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        ForgeError::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, line: usize, msg: impl Into<String>) -> Self {
        ForgeError::Parse {
            path: path.into(),
            line,
            msg: msg.into(),
        }
    }

    pub(crate) fn sentence(id: impl Into<String>, msg: impl Into<String>) -> Self {
        ForgeError::Sentence {
            id: id.into(),
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, ForgeError>;
