use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("I/O error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("read error: {0}")]
    Read(#[from] std::io::Error),

    #[error("malformed {what}: {reason}")]
    Malformed { what: &'static str, reason: String },

    #[error("title has no tokens; record unusable")]
    EmptyTitle,

    #[error("unknown POS tag `{0}`")]
    UnknownTag(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("entity `{entity}` has only {titles} usable titles; need at least {needed}")]
    InsufficientEvidence {
        entity: String,
        titles: usize,
        needed: usize,
    },

    #[error("document frequency is zero; pattern is absent from the IDF universe")]
    ZeroDocumentFrequency,

    #[error("entity `{0}` has no posts to profile")]
    UnprofileableEntity(String),

    #[error("duplicate document path `{0}`")]
    DuplicatePath(String),

    #[error("query has no searchable terms after preprocessing")]
    EmptyQuery,

    #[error("training data has no examples of class `{0}`")]
    MissingClass(String),

    #[error("training data needs at least two classes, found {0}")]
    TooFewClasses(usize),

    #[error("training diverged at epoch {epoch} (loss {loss}); lower the learning rate")]
    Diverged { epoch: usize, loss: f64 },

    #[error("entity `{0}` has no gold judgments")]
    UnjudgedEntity(String),

    #[error("missing artifact {0}; run the producing stage first")]
    MissingArtifact(PathBuf),

    #[error(
        "stale artifact {path}: built with config {found}, current config is {expected} (use --force to override)"
    )]
    StaleArtifact {
        path: PathBuf,
        expected: String,
        found: String,
    },

    #[error("config error: {0}")]
    Config(String),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn malformed(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Malformed {
            what,
            reason: reason.into(),
        }
    }

    /// True when the failure stems from how the tool was invoked rather than
    /// from the data it was pointed at.
    pub fn is_user_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidArgument(_)
                | Error::MissingArtifact(_)
                | Error::StaleArtifact { .. }
                | Error::Config(_)
                | Error::EmptyQuery
        )
    }
}
