//! The increasing sequence of positive palindromes.
//!
//! The successor works on the digit string: mirror the left half onto the
//! right, and if that does not exceed the input, increment the pivot (the
//! middle digit, or the left digit of the middle pair for even lengths),
//! turning 9s into 0s and carrying outward, then mirror again.

use std::fmt;

use num_traits::{One, ToPrimitive};

use crate::digits::{digit_count, is_palindrome, pow10, Natural};
use crate::error::{Error, Result};

/// A positive palindromic natural.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Palindrome(Natural);

impl Palindrome {
    pub fn new(value: Natural) -> Result<Self> {
        if value < Natural::one() || !is_palindrome(&value) {
            return Err(Error::NotPalindrome(value));
        }
        Ok(Palindrome(value))
    }

    pub fn value(&self) -> &Natural {
        &self.0
    }

    pub fn into_natural(self) -> Natural {
        self.0
    }

    pub fn digit_count(&self) -> usize {
        digit_count(&self.0)
    }

    // Callers guarantee the digits are symmetric and nonzero.
    fn from_digits_unchecked(digits: &[u8]) -> Self {
        Palindrome(Natural::from_radix_be(digits, 10).expect("decimal digits"))
    }
}

impl fmt::Display for Palindrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<Palindrome> for Natural {
    fn from(p: Palindrome) -> Natural {
        p.0
    }
}

/// Two consecutive palindromes and the distance between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapRecord {
    pub lower: Palindrome,
    pub upper: Palindrome,
    pub gap: Natural,
    pub digit_length_lower: usize,
}

/// Copies the left half onto the right half.
fn mirror(digits: &mut [u8]) {
    let len = digits.len();
    for i in 0..len / 2 {
        digits[len - 1 - i] = digits[i];
    }
}

/// Index of the digit the successor increments: the pivot for odd lengths,
/// the left member of the middle pair for even lengths.
fn pivot_index(len: usize) -> usize {
    (len - 1) / 2
}

/// Smallest palindrome strictly greater than `n`.
pub fn next_palindrome(n: &Natural) -> Palindrome {
    let digits = n.to_radix_be(10);
    let len = digits.len();

    // 9…9 is the only input whose successor is longer: 10^len + 1.
    if digits.iter().all(|&d| d == 9) {
        let mut out = vec![0u8; len + 1];
        out[0] = 1;
        out[len] = 1;
        return Palindrome::from_digits_unchecked(&out);
    }

    let mut candidate = digits.clone();
    mirror(&mut candidate);
    if candidate > digits {
        return Palindrome::from_digits_unchecked(&candidate);
    }

    // The left half cannot be all 9s here, otherwise the mirror would have
    // been 9…9 >= n with equality only for the all-9s input handled above.
    let mut i = pivot_index(len);
    loop {
        if candidate[i] == 9 {
            candidate[i] = 0;
            i -= 1;
        } else {
            candidate[i] += 1;
            break;
        }
    }
    mirror(&mut candidate);
    Palindrome::from_digits_unchecked(&candidate)
}

/// Largest palindrome strictly less than `n`; requires `n >= 2`.
pub fn prev_palindrome(n: &Natural) -> Result<Palindrome> {
    if n <= &Natural::one() {
        return Err(Error::NoPalindromeBelow(n.clone()));
    }
    let digits = n.to_radix_be(10);
    let len = digits.len();

    let mut candidate = digits.clone();
    mirror(&mut candidate);
    if candidate < digits {
        return Ok(Palindrome::from_digits_unchecked(&candidate));
    }

    let mut i = pivot_index(len);
    loop {
        if candidate[i] == 0 {
            candidate[i] = 9;
            i -= 1;
        } else {
            candidate[i] -= 1;
            break;
        }
    }
    if candidate[0] == 0 {
        // The half was 10…0; drop to the largest palindrome one digit shorter.
        return Ok(Palindrome::from_digits_unchecked(&vec![9u8; len - 1]));
    }
    mirror(&mut candidate);
    Ok(Palindrome::from_digits_unchecked(&candidate))
}

/// `|P_L|`, the number of `L`-digit palindromes: `9 * 10^(ceil(L/2) - 1)`.
pub fn count_with_digits(len: usize) -> Result<Natural> {
    if len == 0 {
        return Err(Error::ZeroDigitLength);
    }
    Ok(pow10(len.div_ceil(2) - 1) * 9u32)
}

fn count_below_length(len: usize) -> Natural {
    (1..len)
        .map(|l| count_with_digits(l).expect("l >= 1"))
        .sum()
}

/// 1-based position of `p` among the positive palindromes.
pub fn rank(p: &Natural) -> Result<Natural> {
    let p = Palindrome::new(p.clone())?;
    let digits = p.value().to_radix_be(10);
    let len = digits.len();
    let half_len = len.div_ceil(2);
    let half = Natural::from_radix_be(&digits[..half_len], 10).expect("decimal digits");
    Ok(count_below_length(len) + (half - pow10(half_len - 1)) + 1u32)
}

/// The `index`-th positive palindrome (1-based).
pub fn unrank(index: &Natural) -> Result<Palindrome> {
    if index.to_u8() == Some(0) {
        return Err(Error::ZeroRank);
    }
    let mut remaining = index - 1u32;
    let mut len = 1;
    loop {
        let count = count_with_digits(len)?;
        if remaining < count {
            break;
        }
        remaining -= count;
        len += 1;
    }
    let half_len = len.div_ceil(2);
    let half = pow10(half_len - 1) + remaining;
    let mut digits = half.to_radix_be(10);
    digits.resize(len, 0);
    mirror(&mut digits);
    Ok(Palindrome::from_digits_unchecked(&digits))
}

/// Smallest positive palindrome `>= n`.
pub fn first_palindrome_at_least(n: &Natural) -> Palindrome {
    if n <= &Natural::one() {
        return Palindrome(Natural::one());
    }
    next_palindrome(&(n - 1u32))
}

/// Ascending palindromes starting at the smallest one `>= start`.
#[derive(Debug, Clone)]
pub struct PalindromeIter {
    next: Palindrome,
}

impl Iterator for PalindromeIter {
    type Item = Palindrome;

    fn next(&mut self) -> Option<Palindrome> {
        let following = next_palindrome(self.next.value());
        Some(std::mem::replace(&mut self.next, following))
    }
}

pub fn palindromes_from(start: &Natural) -> PalindromeIter {
    PalindromeIter {
        next: first_palindrome_at_least(start),
    }
}

/// Palindromes in the closed interval `[lo, hi]`, ascending.
pub fn palindromes_in(lo: &Natural, hi: &Natural) -> Vec<Palindrome> {
    let hi = hi.clone();
    palindromes_from(lo)
        .take_while(|p| p.value() <= &hi)
        .collect()
}

/// Gaps between each palindrome in `[lo, hi)` and its successor.
pub fn gaps_in_range(lo: &Natural, hi: &Natural) -> Result<Vec<GapRecord>> {
    if lo >= hi {
        return Err(Error::InvalidRange(format!(
            "lo {lo} must be below hi {hi}"
        )));
    }
    let mut records = Vec::new();
    let mut lower = first_palindrome_at_least(lo);
    while lower.value() < hi {
        let upper = next_palindrome(lower.value());
        records.push(GapRecord {
            gap: upper.value() - lower.value(),
            digit_length_lower: lower.digit_count(),
            lower,
            upper: upper.clone(),
        });
        lower = upper;
    }
    Ok(records)
}
