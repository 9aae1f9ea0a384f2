use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("negative argument {0} where a nonnegative value is required")]
    Negative(i64),
    #[error("index ({row}, {col}) is out of range for a matrix of order {order}")]
    IndexOutOfRange { order: usize, row: i64, col: i64 },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("the parameter r = -1 makes (1-r)/(1+r) undefined")]
    SingularParameter,
    #[error("generator matrices have mismatched sizes ({expected} vs {found})")]
    SizeMismatch { expected: usize, found: usize },
    #[error("empty generator list")]
    NoGenerators,
    #[error("n = {n} exceeds the compute budget of {max}")]
    BudgetExceeded { n: u32, max: u32 },
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
}
