//! Naive reference implementations for differential testing.
//!
//! Nothing here touches `digits` or `palindrome_seq`: digits are peeled off
//! by repeated division and the reversal is rebuilt as a number, and every
//! search is a plain linear scan.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Natural;

pub const DEFAULT_ORACLE_BOUND: u64 = 100_000_000;

/// Limits on how far the linear scans are allowed to run.
#[derive(Debug, Clone)]
pub struct Oracle {
    bound: Natural,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            bound: Natural::from(DEFAULT_ORACLE_BOUND),
        }
    }
}

fn reverse_u128(mut v: u128) -> u128 {
    let mut rev = 0u128;
    while v > 0 {
        rev = rev * 10 + v % 10;
        v /= 10;
    }
    rev
}

/// `n` equals the number obtained by reading its digits backwards.
pub fn oracle_is_palindrome(n: &Natural) -> bool {
    // Reversal of a value below 10^38 stays below 10^38.
    if let Some(v) = n.to_u128().filter(|&v| v < 10u128.pow(38)) {
        return reverse_u128(v) == v;
    }
    let ten = BigUint::from(10u32);
    let mut rest = n.clone();
    let mut rev = BigUint::zero();
    while !rest.is_zero() {
        let (q, r) = rest.div_rem(&ten);
        rev = rev * 10u32 + r;
        rest = q;
    }
    &rev == n
}

pub fn oracle_is_palindrome_u64(v: u64) -> bool {
    reverse_u128(v as u128) == v as u128
}

/// Digit count by repeated division.
pub fn oracle_digit_count(n: &Natural) -> usize {
    let ten = BigUint::from(10u32);
    let mut rest = n.clone();
    let mut count = 1;
    while rest >= ten {
        rest /= 10u32;
        count += 1;
    }
    count
}

impl Oracle {
    pub fn with_bound(bound: Natural) -> Self {
        Oracle { bound }
    }

    pub fn bound(&self) -> &Natural {
        &self.bound
    }

    fn check(&self, value: &Natural) -> Result<()> {
        if value > &self.bound {
            return Err(Error::OracleBound(self.bound.clone()));
        }
        Ok(())
    }

    /// Smallest palindrome above `n`, found by counting upward.
    pub fn next_palindrome(&self, n: &Natural) -> Result<Natural> {
        self.check(n)?;
        let mut m = n + 1u32;
        while !oracle_is_palindrome(&m) {
            m += 1u32;
        }
        Ok(m)
    }

    /// Largest positive palindrome below `n`, found by counting downward.
    pub fn prev_palindrome(&self, n: &Natural) -> Result<Natural> {
        self.check(n)?;
        if n <= &Natural::from(1u32) {
            return Err(Error::NoPalindromeBelow(n.clone()));
        }
        let mut m = n - 1u32;
        while !oracle_is_palindrome(&m) {
            m -= 1u32;
        }
        Ok(m)
    }

    /// Every palindrome in `[lo, hi]`, ascending, by testing each integer.
    pub fn enumerate(&self, lo: &Natural, hi: &Natural) -> Result<Vec<Natural>> {
        if hi < lo {
            return Ok(Vec::new());
        }
        self.check(&(hi - lo))?;
        if let (Some(lo), Some(hi)) = (lo.to_u64(), hi.to_u64()) {
            return Ok((lo..=hi)
                .filter(|&v| oracle_is_palindrome_u64(v))
                .map(Natural::from)
                .collect());
        }
        let mut out = Vec::new();
        let mut m = lo.clone();
        while &m <= hi {
            if oracle_is_palindrome(&m) {
                out.push(m.clone());
            }
            m += 1u32;
        }
        Ok(out)
    }

    /// 1-based index of `p` among positive palindromes, by counting them.
    pub fn rank(&self, p: &Natural) -> Result<Natural> {
        if p.is_zero() || !oracle_is_palindrome(p) {
            return Err(Error::NotPalindrome(p.clone()));
        }
        let all = self.enumerate(&Natural::from(1u32), p)?;
        Ok(Natural::from(all.len()))
    }

    /// The `index`-th positive palindrome, by stepping upward from 0.
    pub fn unrank(&self, index: &Natural) -> Result<Natural> {
        if index.is_zero() {
            return Err(Error::ZeroRank);
        }
        self.check(index)?;
        let mut m = Natural::zero();
        let mut seen = Natural::zero();
        while &seen < index {
            m += 1u32;
            if oracle_is_palindrome(&m) {
                seen += 1u32;
            }
        }
        Ok(m)
    }
}

pub fn oracle_next_palindrome(n: &Natural) -> Result<Natural> {
    Oracle::default().next_palindrome(n)
}

pub fn oracle_enumerate(lo: &Natural, hi: &Natural) -> Result<Vec<Natural>> {
    Oracle::default().enumerate(lo, hi)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(v: u64) -> Natural {
        Natural::from(v)
    }

    #[test]
    fn predicate_examples() {
        assert!(oracle_is_palindrome(&nat(16461)));
        assert!(!oracle_is_palindrome(&nat(12)));
        assert!(oracle_is_palindrome(&nat(5)));
        assert!(!oracle_is_palindrome(&nat(10)));
        let big: Natural = "100000000000000000000000000000000000000000001"
            .parse()
            .unwrap();
        assert!(oracle_is_palindrome(&big));
        assert!(!oracle_is_palindrome(&(big * 10u32)));
    }

    #[test]
    fn successor_examples() {
        assert_eq!(oracle_next_palindrome(&nat(17371)).unwrap(), nat(17471));
        assert_eq!(oracle_next_palindrome(&nat(998)).unwrap(), nat(999));
        assert_eq!(oracle_next_palindrome(&nat(999)).unwrap(), nat(1001));
    }

    #[test]
    fn enumerate_examples() {
        let ones: Vec<_> = (1..=9).map(nat).collect();
        assert_eq!(oracle_enumerate(&nat(1), &nat(9)).unwrap(), ones);
        let twos: Vec<_> = (1..=9).map(|d| nat(11 * d)).collect();
        assert_eq!(oracle_enumerate(&nat(10), &nat(100)).unwrap(), twos);
        assert_eq!(
            oracle_enumerate(&nat(100), &nat(130)).unwrap(),
            vec![nat(101), nat(111), nat(121)]
        );
    }

    #[test]
    fn bounds_are_enforced() {
        let oracle = Oracle::with_bound(nat(1000));
        assert_eq!(
            oracle.next_palindrome(&nat(5000)),
            Err(Error::OracleBound(nat(1000)))
        );
        assert!(oracle.enumerate(&nat(0), &nat(2000)).is_err());
        assert!(oracle.enumerate(&nat(5000), &nat(5500)).is_ok());
    }

    #[test]
    fn rank_helpers() {
        let oracle = Oracle::default();
        assert_eq!(oracle.rank(&nat(101)).unwrap(), nat(19));
        assert_eq!(oracle.unrank(&nat(10)).unwrap(), nat(11));
        assert_eq!(oracle.prev_palindrome(&nat(11)).unwrap(), nat(9));
        assert_eq!(oracle_digit_count(&nat(0)), 1);
        assert_eq!(oracle_digit_count(&nat(3459543)), 7);
    }
}
