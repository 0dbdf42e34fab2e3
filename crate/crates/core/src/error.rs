use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse word {word:?}: {reason}")]
    Parse { word: String, reason: String },

    #[error("{word} is not an inversion pattern: value {missing} is skipped")]
    NotAPattern { word: String, missing: u32 },

    #[error("the empty pattern has no containment semantics")]
    EmptyPattern,

    #[error("{word} is not an inversion sequence: entry {position} is {value}")]
    NotAnInversionSequence {
        word: String,
        position: usize,
        value: u32,
    },

    #[error("sequence {0} contains 201 or 210, so it has no little value")]
    NotAvoider(String),

    #[error("series error: {0}")]
    Series(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
