use thiserror::Error;

/// Errors produced by the algebra and representation engines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    #[error("generator index {0} out of range 1..={1}")]
    IndexOutOfRange(usize, usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("singular matrix")]
    SingularMatrix,
    #[error("matrix dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("group too large: closure exceeded bound {0}")]
    GroupTooLarge(usize),
    #[error("ill-defined action: one group element received two distinct action matrices")]
    IllDefinedAction,
    #[error("not a right ideal")]
    NotRightIdeal,
    #[error("not a two-sided ideal")]
    NotTwoSided,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup does not act trivially")]
    NotInKernel,
    #[error("invalid filter: {0}")]
    InvalidFilter(String),
    #[error("map does not define an epimorphism onto the acting group")]
    NotEpimorphism,
    #[error("point budget exceeded: {needed} points > budget {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("representation file: {0}")]
    RepFile(String),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
