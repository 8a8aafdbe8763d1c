use thiserror::Error;

/// Errors raised by the computational modules.
///
/// `Hypothesis` is a mathematical condition of a theorem that the supplied
/// data does not meet. Every other variant is malformed or out-of-contract
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("structural mismatch: {0}")]
    Structure(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypothesis failed: {0}")]
    Hypothesis(String),
    #[error("euler class vanishes identically: trivial character {0} has positive multiplicity")]
    VanishingEuler(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn is_hypothesis(&self) -> bool {
        matches!(self, Error::Hypothesis(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
