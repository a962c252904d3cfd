use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),

    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(char),

    #[error("letter id {0} is out of range for the alphabet")]
    LetterOutOfRange(u32),

    #[error("words are declared over different alphabets")]
    AlphabetMismatch,

    #[error("operation needs a binary alphabet, found {0} symbols")]
    NotBinary(usize),

    #[error("cannot parse {what}: {reason}")]
    Parse { what: &'static str, reason: String },

    #[error("work budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("equal words have no distinguisher")]
    NoDistinguisher,

    #[error("closed formula needs interior blocks of length >= 2; block {index} has length 1")]
    ReductionRequired { index: usize },

    #[error("no isolated letter with both neighbours of length >= 2")]
    NoIsolatedPattern,

    #[error("adjacent isolated letters must be removed first (blocks {index} and {})", index + 1)]
    PairsRemaining { index: usize },

    #[error("value out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
