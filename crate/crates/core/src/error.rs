use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid word {word:?}: {reason}")]
    InvalidWord { word: String, reason: String },

    #[error("operation `{0}` needs a group with decidable word problem")]
    UndecidableContext(&'static str),

    #[error("operation `{op}` needs a one-dimensional context (Z or a rank-one free group)")]
    NotOneDimensional { op: &'static str },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid alphabet: {0}")]
    InvalidAlphabet(String),

    #[error("unknown symbol {0:?}")]
    UnknownSymbol(String),

    #[error("inconsistent pattern presentation: {u:?} and {v:?} name the same element but carry different symbols")]
    Inconsistent { u: String, v: String },

    #[error("consistency of a presentation could not be certified within the fuel budget")]
    ConsistencyUnknown,

    #[error("restriction target is not a subset of the pattern support")]
    NotASubset,

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("invalid local rule: {0}")]
    InvalidRule(String),

    #[error("the subshift is empty")]
    EmptySubshift,

    #[error("language oracle violation: the partial pattern on {cells} cells is accepted but none of its one-cell extensions is")]
    OracleViolation { cells: usize },

    #[error("language list is not certified; pass the unsound override to use it anyway")]
    UncertifiedLanguage,

    #[error("certificate rejected: {0}")]
    CertificateRejected(String),

    #[error("malformed document: {0}")]
    Document(String),

    #[error("name collision: an object named {0:?} is already loaded")]
    NameCollision(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
