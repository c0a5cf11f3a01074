use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation on the zero operator")]
    ZeroOperator,
    #[error("`{0}` is reserved and cannot be used as a parameter")]
    ReservedSymbol(String),
    #[error("`{0}` is not a valid identifier")]
    InvalidSymbol(String),
    #[error("too many parameters (at most {0})")]
    TooManySymbols(usize),
    #[error("operator is not in Rec: denominator vanishes at n = {0}")]
    NotRec(u64),
    #[error("sequence prefix too short: need {need}, have {have}")]
    InsufficientPrefix { need: usize, have: usize },
    #[error("exact division failed: {0}")]
    NotDivisible(&'static str),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("inadmissible parameter: {0}")]
    Inadmissible(String),
    #[error("unknown basis `{0}`")]
    UnknownFamily(String),
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
