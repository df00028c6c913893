use thiserror::Error;

use crate::Natural;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("digit string is empty")]
    EmptyDigits,
    #[error("digit {0} is outside 0..=9")]
    InvalidDigit(u8),
    #[error("multi-digit string has a leading zero")]
    LeadingZero,
    #[error("{0} is not a palindrome")]
    NotPalindrome(Natural),
    #[error("no positive palindrome lies below {0}")]
    NoPalindromeBelow(Natural),
    #[error("digit length must be at least 1")]
    ZeroDigitLength,
    #[error("palindrome ranks start at 1")]
    ZeroRank,
    #[error("invalid range: {0}")]
    InvalidRange(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("ratio {0} is an integer; use the integer-ratio operations")]
    IntegerRatio(String),
    #[error("L + R = {0} makes the approximate index bound undefined")]
    DegenerateExponent(usize),
    #[error("digit length {requested} exceeds the enumeration bound {bound}")]
    EnumerationBound { requested: usize, bound: usize },
    #[error("input exceeds the oracle bound {0}")]
    OracleBound(Natural),
    #[error("theory violation: {0}")]
    TheoryViolation(String),
}
