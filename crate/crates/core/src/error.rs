use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("not in class: {0}")]
    NotInClass(String),

    #[error("not in L: {0}")]
    NotInLanguage(String),

    #[error("not in SIO: component {index} ({component}) is not a zigzag path")]
    NotInSio { index: usize, component: String },

    #[error("non-invertible series: constant term {0}")]
    NonInvertible(String),

    #[error("use monotone census: pattern {0} has no leading pair letter")]
    UseMonotoneCensus(String),

    #[error("type mismatch: {0}")]
    TypeMismatch(String),

    #[error("symmetry {0} does not fix the class")]
    UnsupportedSymmetry(String),

    #[error("budget exhausted; largest completed size is {completed}")]
    BudgetExceeded { completed: usize },
}
