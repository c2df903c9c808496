use thiserror::Error;

/// Errors for invalid inputs and internal consistency violations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vector: {0}")]
    InvalidVector(String),
    #[error("invalid T-link parameters: {0}")]
    InvalidTLink(String),
    #[error("invalid shuffle: {0}")]
    InvalidShuffle(String),
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("braid word has negative letters; positive word required")]
    NegativeLetter,
    #[error("strand count {0} too small; need at least 2")]
    TooFewStrands(usize),
    #[error("genus formula violated: 2 - {components} - ({chi}) is {reason}")]
    GenusFormula {
        chi: i64,
        components: usize,
        reason: &'static str,
    },
    #[error("inexact Laurent division: {0}")]
    InexactDivision(String),
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("{0}")]
    Io(String),
}
