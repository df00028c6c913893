//! Arithmetic progressions of palindromes.
//!
//! There are only `9 * 10^m` palindromes with `2m+1` digits, while an AP
//! with difference below `10^m` puts more than that many terms into
//! `[10^(2m), 10^(2m+1))`. [`termination_cap`] turns that count into an
//! explicit index bound and [`ap_scan`] checks it.

use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::digits::{digit_count, is_palindrome, pow10, Natural};
use crate::error::{Error, Result};
use crate::palindrome_seq::{palindromes_in, Palindrome};

/// First term and (positive) common difference of an AP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct APSpec {
    first: Natural,
    difference: Natural,
}

impl APSpec {
    pub fn new(first: Natural, difference: Natural) -> Result<Self> {
        if first.is_zero() {
            return Err(Error::PreconditionFailed(
                "AP first term must be >= 1".into(),
            ));
        }
        if difference.is_zero() {
            return Err(Error::PreconditionFailed(
                "AP difference must be >= 1".into(),
            ));
        }
        Ok(APSpec { first, difference })
    }

    pub fn first(&self) -> &Natural {
        &self.first
    }

    pub fn difference(&self) -> &Natural {
        &self.difference
    }

    pub fn term(&self, index: &Natural) -> Natural {
        &self.first + index * &self.difference
    }
}

/// Where a progression first leaves the palindromes.
///
/// `failing_index` is 0-based; every term before it is a palindrome.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanReport {
    pub failing_index: Natural,
    pub failing_term: Natural,
    pub terms_checked: Natural,
    pub cap_used: Natural,
}

/// Result of a scan bounded by a caller-chosen cap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScanOutcome {
    Failed(ScanReport),
    CapExceeded {
        terms_checked: Natural,
        cap: Natural,
    },
}

/// A progression whose every term is a palindrome.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct APWitness {
    pub first: Natural,
    pub difference: Natural,
    pub length: u64,
    pub last: Natural,
}

impl APWitness {
    fn new(first: Natural, difference: Natural, length: u64) -> Self {
        let last = &first + &difference * (length - 1);
        APWitness {
            first,
            difference,
            length,
            last,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = Natural> + '_ {
        (0..self.length).map(move |i| &self.first + &self.difference * i)
    }

    /// Re-checks every term.
    pub fn verify(&self) -> bool {
        self.length >= 2
            && self.last == &self.first + &self.difference * (self.length - 1)
            && self.terms().all(|t| is_palindrome(&t))
    }
}

/// Index by which any AP must have produced a non-palindrome.
///
/// With `m` the least integer such that `10^m > d` and `10^(2m) >= a`, the
/// AP crosses `[10^(2m), 10^(2m+1))` with more than `9 * 10^m` terms, which
/// is the number of palindromes there. Consecutive palindromes in that
/// window are not evenly spaced, so the terms cannot all be palindromes.
/// The returned value is `ceil((10^(2m+1) - a) / d) + 1`.
pub fn termination_cap(ap: &APSpec) -> Natural {
    let mut m = digit_count(&ap.difference);
    while pow10(2 * m) < ap.first {
        m += 1;
    }
    let span = pow10(2 * m + 1) - &ap.first;
    span.div_ceil(&ap.difference) + 1u32
}

fn scan(ap: &APSpec, limit: &Natural) -> Option<ScanReport> {
    let mut index = Natural::zero();
    let mut term = ap.first.clone();
    while &index < limit {
        if !is_palindrome(&term) {
            return Some(ScanReport {
                terms_checked: &index + 1u32,
                failing_index: index,
                failing_term: term,
                cap_used: limit.clone(),
            });
        }
        term += &ap.difference;
        index += 1u32;
    }
    None
}

/// Smallest index whose term is not a palindrome.
///
/// Fails with [`Error::TheoryViolation`] if nothing is found below
/// [`termination_cap`], which would mean the cap argument is wrong.
pub fn ap_scan(ap: &APSpec) -> Result<ScanReport> {
    let cap = termination_cap(ap);
    scan(ap, &cap).ok_or_else(|| {
        Error::TheoryViolation(format!(
            "AP (first {}, difference {}) stayed palindromic for {cap} terms",
            ap.first, ap.difference
        ))
    })
}

/// Like [`ap_scan`] but stops early at `limit` terms when that is below the
/// proven cap.
pub fn ap_scan_limited(ap: &APSpec, limit: &Natural) -> Result<ScanOutcome> {
    let cap = termination_cap(ap);
    if limit >= &cap {
        return ap_scan(ap).map(ScanOutcome::Failed);
    }
    Ok(match scan(ap, limit) {
        Some(report) => ScanOutcome::Failed(report),
        None => ScanOutcome::CapExceeded {
            terms_checked: limit.clone(),
            cap: limit.clone(),
        },
    })
}

/// Positive divisors of `n`, ascending.
pub(crate) fn divisors(n: &Natural) -> Vec<Natural> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = Natural::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            let pair = n / &i;
            if pair != i {
                large.push(pair);
            }
            small.push(i.clone());
        }
        i += 1u32;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Longest all-palindrome AP running from `first` to `last`.
///
/// `last` is a term only when the difference divides `last - first`, so only
/// divisors are tried. Every divisor gives a different length, and the
/// smallest qualifying divisor gives the longest progression.
pub fn longest_palindromic_ap(first: &Natural, last: &Natural) -> Result<APWitness> {
    if first >= last {
        return Err(Error::InvalidRange(format!(
            "first {first} must be below last {last}"
        )));
    }
    Palindrome::new(first.clone())?;
    Palindrome::new(last.clone())?;

    let span = last - first;
    for d in divisors(&span) {
        let mut term = first + &d;
        let mut steps = 1u64;
        let mut all_palindromic = true;
        while &term < last {
            if !is_palindrome(&term) {
                all_palindromic = false;
                break;
            }
            term += &d;
            steps += 1;
        }
        if all_palindromic {
            return Ok(APWitness::new(first.clone(), d, steps + 1));
        }
    }
    unreachable!("the full span always qualifies as a divisor")
}

/// Every maximal all-palindrome AP with terms in `[1, max_value]` and at
/// least `min_length` terms, sorted by first term then difference.
pub fn exhaustive_ap_search(max_value: &Natural, min_length: u64) -> Result<Vec<APWitness>> {
    if max_value.is_zero() {
        return Err(Error::PreconditionFailed("max_value must be >= 1".into()));
    }
    if min_length < 3 {
        return Err(Error::PreconditionFailed("min_length must be >= 3".into()));
    }
    let pals: Vec<Natural> = palindromes_in(&Natural::one(), max_value)
        .into_iter()
        .map(Natural::from)
        .collect();
    let steps_needed = min_length - 1;

    let per_first: Vec<Vec<APWitness>> = pals
        .par_iter()
        .enumerate()
        .map(|(i, a)| {
            let mut found = Vec::new();
            for b in &pals[i + 1..] {
                let d = b - a;
                if a + &d * steps_needed > *max_value {
                    break;
                }
                if a > &d && is_palindrome(&(a - &d)) {
                    continue;
                }
                let mut length = 2u64;
                let mut term = b + &d;
                while term <= *max_value && is_palindrome(&term) {
                    length += 1;
                    term += &d;
                }
                if length >= min_length {
                    found.push(APWitness::new(a.clone(), d, length));
                }
            }
            found
        })
        .collect();
    Ok(per_first.into_iter().flatten().collect())
}
