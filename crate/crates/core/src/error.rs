use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid extension degree {0}")]
    InvalidDegree(u32),
    #[error("field order p^d is too large for this implementation (p = {p}, d = {d})")]
    FieldTooLarge { p: u64, d: u32 },
    #[error("value {value} out of range [0, {bound})")]
    OutOfRange { value: u64, bound: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a unit in the quotient ring")]
    NotAUnit,
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("convention mismatch: both operands must use the same convention")]
    ConventionMismatch,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("iteration budget of {0} steps exceeded")]
    BudgetExceeded(u64),
    #[error("state space of {states} vectors exceeds the brute-force cap {cap}")]
    CapExceeded { states: String, cap: u64 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
