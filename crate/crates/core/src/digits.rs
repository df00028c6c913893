//! Base-10 digit representation of unbounded naturals and the palindrome
//! predicate.
//!
//! Digits are stored most-significant first, so for an odd-length palindrome
//! `a1 … an a0 an … a1` the pivot `a0` sits at index `len / 2`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

/// Unbounded non-negative integer.
pub type Natural = BigUint;

/// Decimal digits, most-significant first, without leading zeros.
///
/// Zero is the single digit `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitString(Vec<u8>);

impl DigitString {
    pub fn from_natural(n: &Natural) -> Self {
        DigitString(n.to_radix_be(10))
    }

    /// Validates a raw digit vector.
    pub fn new(digits: Vec<u8>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::EmptyDigits);
        }
        if let Some(&bad) = digits.iter().find(|&&d| d > 9) {
            return Err(Error::InvalidDigit(bad));
        }
        if digits.len() > 1 && digits[0] == 0 {
            return Err(Error::LeadingZero);
        }
        Ok(DigitString(digits))
    }

    pub fn to_natural(&self) -> Natural {
        Natural::from_radix_be(&self.0, 10).expect("digits validated on construction")
    }

    pub fn digits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; a digit string holds at least one digit.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Middle digit of an odd-length string.
    pub fn pivot(&self) -> Option<u8> {
        (self.0.len() % 2 == 1).then(|| self.0[self.0.len() / 2])
    }

    pub fn is_symmetric(&self) -> bool {
        is_symmetric(&self.0)
    }

    pub fn into_digits(self) -> Vec<u8> {
        self.0
    }
}

impl TryFrom<Vec<u8>> for DigitString {
    type Error = Error;

    fn try_from(digits: Vec<u8>) -> Result<Self> {
        DigitString::new(digits)
    }
}

impl fmt::Display for DigitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.0 {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

pub fn from_natural(n: &Natural) -> DigitString {
    DigitString::from_natural(n)
}

pub fn to_natural(ds: &DigitString) -> Natural {
    ds.to_natural()
}

fn is_symmetric(digits: &[u8]) -> bool {
    digits.iter().eq(digits.iter().rev())
}

/// Digits of a machine word, least-significant first.
fn small_digits(mut v: u64, buf: &mut [u8; 20]) -> usize {
    let mut len = 0;
    loop {
        buf[len] = (v % 10) as u8;
        len += 1;
        v /= 10;
        if v == 0 {
            return len;
        }
    }
}

pub fn is_palindrome(n: &Natural) -> bool {
    match n.to_u64() {
        Some(v) => is_palindrome_u64(v),
        None => is_symmetric(&n.to_radix_be(10)),
    }
}

pub fn is_palindrome_u64(v: u64) -> bool {
    let mut buf = [0u8; 20];
    let len = small_digits(v, &mut buf);
    is_symmetric(&buf[..len])
}

/// Number of decimal digits; `digit_count(0) == 1`.
pub fn digit_count(n: &Natural) -> usize {
    match n.to_u64() {
        Some(v) => digit_count_u64(v),
        None => n.to_radix_be(10).len(),
    }
}

pub fn digit_count_u64(v: u64) -> usize {
    if v == 0 {
        1
    } else {
        v.ilog10() as usize + 1
    }
}

pub fn pow10(exp: usize) -> Natural {
    num_traits::pow(Natural::from(10u32), exp)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn from_natural_examples() {
        assert_eq!(from_natural(&nat(0)).digits(), &[0]);
        assert_eq!(from_natural(&nat(17371)).digits(), &[1, 7, 3, 7, 1]);
        assert_eq!(from_natural(&nat(1000)).digits(), &[1, 0, 0, 0]);
    }

    #[test]
    fn to_natural_examples() {
        assert_eq!(DigitString::new(vec![0]).unwrap().to_natural(), nat(0));
        assert_eq!(
            DigitString::new(vec![1, 6, 4, 6, 1]).unwrap().to_natural(),
            nat(16461)
        );
        assert_eq!(DigitString::new(vec![9, 9]).unwrap().to_natural(), nat(99));
    }

    #[test]
    fn rejects_malformed_digit_strings() {
        assert_eq!(DigitString::new(vec![0, 1]), Err(Error::LeadingZero));
        assert_eq!(DigitString::new(vec![]), Err(Error::EmptyDigits));
        assert_eq!(DigitString::new(vec![1, 10]), Err(Error::InvalidDigit(10)));
    }

    #[test]
    fn palindrome_examples() {
        assert!(is_palindrome(&nat(16461)));
        assert!(is_palindrome(&nat(7)));
        assert!(!is_palindrome(&nat(10)));
        assert!(is_palindrome(&nat(0)));
        let big: Natural = "1234567890123456789009876543210987654321".parse().unwrap();
        assert!(is_palindrome(&big));
        assert!(!is_palindrome(&(big + 1u32)));
    }

    #[test]
    fn digit_count_examples() {
        assert_eq!(digit_count(&nat(9)), 1);
        assert_eq!(digit_count(&nat(10)), 2);
        assert_eq!(digit_count(&nat(3459543)), 7);
        assert_eq!(digit_count(&nat(0)), 1);
        assert_eq!(digit_count(&pow10(40)), 41);
    }

    #[test]
    fn digit_count_steps_at_powers_of_ten() {
        for k in 1..30 {
            let p = pow10(k);
            assert_eq!(digit_count(&(p.clone() - 1u32)), k);
            assert_eq!(digit_count(&p), k + 1);
        }
    }

    #[test]
    fn pivot_of_odd_strings() {
        assert_eq!(from_natural(&nat(3459543)).pivot(), Some(9));
        assert_eq!(from_natural(&nat(1221)).pivot(), None);
    }
}
