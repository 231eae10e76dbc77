use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input file (TSV corpus, run store, config store).
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Input file contained no documents.
    #[error("no documents")]
    NoDocuments,

    /// Every document was filtered away.
    #[error("empty corpus after preprocessing")]
    EmptyAfterPreprocess,

    /// A precondition on arguments or state was violated.
    #[error("{0}")]
    InvalidInput(String),

    /// A model evaluation failed inside an optimization run.
    #[error("evaluation failed: {0}")]
    Evaluation(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
