use thiserror::Error;

use crate::roots::NotRepresentableReason;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("base {0} is not supported (expected 2..=36)")]
    InvalidBase(u32),

    #[error("digit {digit} is out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },

    #[error("the repeating block must contain at least one digit")]
    EmptyPeriod,

    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("value has fractional digits and is not a base-{0} integer")]
    NotAnInteger(u32),

    #[error("divisor {divisor} shares a factor with base {base}; unit-clearing required")]
    NotAUnit { divisor: String, base: u32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("operands use different bases ({0} and {1})")]
    BaseMismatch(u32, u32),

    #[error("digit stream has no continuation at level {0}")]
    NoContinuation(usize),

    #[error("no root exists: {0}")]
    NotRepresentable(NotRepresentableReason),

    #[error("input out of scope: {0}")]
    OutOfScope(String),

    #[error("search depth {depth} exceeds the exhaustive bound {bound}")]
    SearchTooDeep { depth: usize, bound: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),
}
