use std::time::Duration;

use thiserror::Error;

/// Rejections raised while validating a framework under construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("invalid element name `{0}` (names are a letter followed by letters, digits or `_`)")]
    InvalidId(String),
    #[error("duplicate element id `{0}`")]
    DuplicateId(String),
    #[error("attack `{attack}` has source `{src}`, which is not a declared argument")]
    DanglingSource { attack: String, src: String },
    #[error("attack `{attack}` has target `{target}`, which is not a declared element")]
    DanglingTarget { attack: String, target: String },
    #[error("attack `{0}` is part of a target cycle that never reaches an argument")]
    CyclicTargetChain(String),
}

/// Rejections raised by queries and solvers over already-built structures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("no attack named `{0}`")]
    UnknownAttack(String),
    #[error("`{0}` is not an argument")]
    NotAnArgument(String),
    #[error("framework has attacks targeting attacks; an argument-to-argument framework is required")]
    NotPlainAf,
    #[error("{elements} elements exceed the enumeration bound of {bound}")]
    TooLargeToEnumerate { elements: usize, bound: usize },
    #[error("solving exceeded the configured time budget of {0:?}")]
    TimedOut(Duration),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("invalid extended framework: {0}")]
    InvalidEaf(String),
    #[error("invalid higher-order framework: {0}")]
    InvalidHoaf(String),
}
