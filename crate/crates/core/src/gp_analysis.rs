//! Geometric progressions of palindromes.
//!
//! Covers the failure of non-integer ratios, the digit-growth index, exact
//! counts of `L`-digit palindromes divisible by `q` against the main term
//! `|P_L| / q`, the `alpha < 1` comparison, the exponent `B` for which
//! `r^B` outgrows the first term, and an empirical scan.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::ap_analysis::{ScanOutcome, ScanReport};
use crate::digits::{digit_count, is_palindrome, pow10, Natural};
use crate::error::{Error, Result};
use crate::palindrome_seq::count_with_digits;

pub const DEFAULT_GP_CAP: u64 = 10_000;
pub const DEFAULT_MAX_ENUM_LEN: usize = 13;

/// 2 * 3 * 5 * 11; a value satisfies the coprimality hypothesis iff it
/// shares no factor with this.
const EXCLUDED_PRIMORIAL: u32 = 330;

/// A reduced positive fraction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational {
    numerator: Natural,
    denominator: Natural,
}

impl Rational {
    pub fn new(numerator: Natural, denominator: Natural) -> Result<Self> {
        if numerator.is_zero() || denominator.is_zero() {
            return Err(Error::PreconditionFailed(
                "ratio numerator and denominator must be >= 1".into(),
            ));
        }
        let g = numerator.gcd(&denominator);
        Ok(Rational {
            numerator: numerator / &g,
            denominator: denominator / g,
        })
    }

    pub fn numerator(&self) -> &Natural {
        &self.numerator
    }

    pub fn denominator(&self) -> &Natural {
        &self.denominator
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::PreconditionFailed(format!("expected <p>/<q>, got {s:?}"));
        let (p, q) = s.split_once('/').ok_or_else(bad)?;
        let parse = |part: &str| {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            part.parse::<Natural>().map_err(|_| bad())
        };
        Rational::new(parse(p)?, parse(q)?)
    }
}

/// First term and integer ratio of a GP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GPSpec {
    first: Natural,
    ratio: Natural,
}

impl GPSpec {
    pub fn new(first: Natural, ratio: Natural) -> Result<Self> {
        if first.is_zero() {
            return Err(Error::PreconditionFailed(
                "GP first term must be >= 1".into(),
            ));
        }
        if ratio < Natural::from(2u32) {
            return Err(Error::PreconditionFailed("GP ratio must be >= 2".into()));
        }
        Ok(GPSpec { first, ratio })
    }

    pub fn first(&self) -> &Natural {
        &self.first
    }

    pub fn ratio(&self) -> &Natural {
        &self.ratio
    }

    /// `L`, the digit count of the first term.
    pub fn first_len(&self) -> usize {
        digit_count(&self.first)
    }

    /// `R`, the digit count of the ratio.
    pub fn ratio_len(&self) -> usize {
        digit_count(&self.ratio)
    }

    pub fn term(&self, index: u32) -> Natural {
        &self.first * num_traits::pow(self.ratio.clone(), index as usize)
    }
}

/// True when `n` is coprime to each of 2, 3, 5 and 11.
pub fn coprime_to_excluded_primes(n: &Natural) -> bool {
    n.gcd(&Natural::from(EXCLUDED_PRIMORIAL)).is_one()
}

/// Smallest `s >= 1` for which `a * (p/q)^s` is not an integer.
///
/// With `gcd(p, q) = 1` this is the least `s` with `q^s` not dividing `a`.
pub fn integrality_failure_index(a: &Natural, r: &Rational) -> Result<u64> {
    if a.is_zero() {
        return Err(Error::PreconditionFailed("first term must be >= 1".into()));
    }
    if r.denominator.is_one() {
        return Err(Error::IntegerRatio(r.to_string()));
    }
    let mut s = 1u64;
    let mut power = r.denominator.clone();
    while (a % &power).is_zero() {
        s += 1;
        power *= &r.denominator;
    }
    Ok(s)
}

/// Exact and approximate indices at which the GP reaches `lambda * L`
/// digits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinIndex {
    pub exact: u64,
    /// `ceil(lambda * L / (L + R - 2))`, absent when `L + R = 2`.
    pub approx_bound: Option<Natural>,
}

pub fn approx_index_bound(gp: &GPSpec, lambda: u64) -> Result<Natural> {
    let (l, r) = (gp.first_len(), gp.ratio_len());
    if l + r <= 2 {
        return Err(Error::DegenerateExponent(l + r));
    }
    let numerator = Natural::from(lambda) * l;
    Ok(numerator.div_ceil(&Natural::from(l + r - 2)))
}

pub fn min_index_for_digits(gp: &GPSpec, lambda: u64) -> Result<MinIndex> {
    if lambda == 0 {
        return Err(Error::PreconditionFailed("lambda must be >= 1".into()));
    }
    let target = lambda as usize * gp.first_len();
    let mut k = 0u64;
    let mut term = gp.first.clone();
    while digit_count(&term) < target {
        term *= &gp.ratio;
        k += 1;
    }
    Ok(MinIndex {
        exact: k,
        approx_bound: approx_index_bound(gp, lambda).ok(),
    })
}

/// Outcome of comparing `alpha = 10^(L/2) / r^(L/(L+R-2))` with 1.
///
/// `alpha < 1` exactly when `r^2 > 10^(L+R-2)`; both sides are kept.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaComparison {
    pub below_one: bool,
    pub first_len: usize,
    pub ratio_len: usize,
    pub power_of_ten: Natural,
    pub ratio_squared: Natural,
}

pub fn alpha_ratio(gp: &GPSpec) -> Result<AlphaComparison> {
    let (l, r) = (gp.first_len(), gp.ratio_len());
    if l + r <= 2 {
        return Err(Error::DegenerateExponent(l + r));
    }
    let power_of_ten = pow10(l + r - 2);
    let ratio_squared = &gp.ratio * &gp.ratio;
    Ok(AlphaComparison {
        below_one: ratio_squared > power_of_ten,
        first_len: l,
        ratio_len: r,
        power_of_ten,
        ratio_squared,
    })
}

/// Smallest `B >= 1` such that `r^B` has more digits than the first term.
pub fn subsequence_exponent(gp: &GPSpec) -> u64 {
    let l = gp.first_len();
    let mut b = 1u64;
    let mut power = gp.ratio.clone();
    while digit_count(&power) <= l {
        power *= &gp.ratio;
        b += 1;
    }
    b
}

/// Smallest index whose term is not a palindrome, giving up after `cap`
/// terms.
pub fn gp_scan(gp: &GPSpec, check_gcd: bool, cap: u64) -> Result<ScanOutcome> {
    if check_gcd {
        if !coprime_to_excluded_primes(&gp.first) {
            return Err(Error::PreconditionFailed(format!(
                "first term {} shares a factor with 2, 3, 5 or 11",
                gp.first
            )));
        }
        if !coprime_to_excluded_primes(&gp.ratio) {
            return Err(Error::PreconditionFailed(format!(
                "ratio {} shares a factor with 2, 3, 5 or 11",
                gp.ratio
            )));
        }
    }
    let mut term = gp.first.clone();
    for index in 0..cap {
        if !is_palindrome(&term) {
            return Ok(ScanOutcome::Failed(ScanReport {
                failing_index: Natural::from(index),
                failing_term: term,
                terms_checked: Natural::from(index + 1),
                cap_used: Natural::from(cap),
            }));
        }
        term *= &gp.ratio;
    }
    Ok(ScanOutcome::CapExceeded {
        terms_checked: Natural::from(cap),
        cap: Natural::from(cap),
    })
}

/// `|P_L(q)|` next to the main term `|P_L| / q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisibilityCount {
    pub digit_length: usize,
    pub modulus: Natural,
    pub exact_count: Natural,
    pub main_term: Ratio<Natural>,
}

impl DivisibilityCount {
    /// `|exact - main| / main`, exactly.
    pub fn relative_deviation(&self) -> Ratio<Natural> {
        // main = |P_L| / q, so |exact - main| / main = |exact * q - |P_L|| / |P_L|.
        let total = count_with_digits(self.digit_length).expect("digit length >= 1");
        let scaled = &self.exact_count * &self.modulus;
        let diff = if scaled >= total {
            scaled - &total
        } else {
            &total - scaled
        };
        Ratio::new(diff, total)
    }

    pub fn relative_deviation_f64(&self) -> f64 {
        let dev = self.relative_deviation();
        dev.numer().to_f64().unwrap_or(f64::INFINITY) / dev.denom().to_f64().unwrap_or(1.0)
    }

    /// `|exact - main| / main <= percent / 100`, decided exactly.
    pub fn within_percent(&self, percent: u32) -> bool {
        let dev = self.relative_deviation();
        dev.numer() * 100u32 <= dev.denom() * percent
    }
}

/// Enumeration limits for [`count_palindromes_divisible_with`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityConfig {
    pub max_digit_length: usize,
}

impl Default for DensityConfig {
    fn default() -> Self {
        DensityConfig {
            max_digit_length: DEFAULT_MAX_ENUM_LEN,
        }
    }
}

pub fn count_palindromes_divisible(len: usize, q: &Natural) -> Result<DivisibilityCount> {
    count_palindromes_divisible_with(len, q, DensityConfig::default())
}

/// Counts `L`-digit palindromes divisible by `q` by walking every free half
/// (the leading `ceil(L/2)` digits) and tracking the residue of the mirrored
/// value.
pub fn count_palindromes_divisible_with(
    len: usize,
    q: &Natural,
    config: DensityConfig,
) -> Result<DivisibilityCount> {
    if len == 0 {
        return Err(Error::ZeroDigitLength);
    }
    if q < &Natural::from(2u32) {
        return Err(Error::PreconditionFailed("modulus must be >= 2".into()));
    }
    if len > config.max_digit_length {
        return Err(Error::EnumerationBound {
            requested: len,
            bound: config.max_digit_length,
        });
    }

    let total = count_with_digits(len)?;
    let exact_count = match q.to_u64() {
        Some(small) => Natural::from(count_half_space_u64(len, small)),
        None => count_half_space_big(len, q),
    };
    Ok(DivisibilityCount {
        digit_length: len,
        modulus: q.clone(),
        exact_count,
        main_term: Ratio::new(total, q.clone()),
    })
}

/// Contribution of one unit in half-position `j` to the full palindrome:
/// `10^(L-1-j) + 10^j`, or just `10^j` at the pivot.
fn half_weights(len: usize) -> Vec<Natural> {
    (0..len.div_ceil(2))
        .map(|j| {
            let mirror = len - 1 - j;
            if mirror == j {
                pow10(j)
            } else {
                pow10(mirror) + pow10(j)
            }
        })
        .collect()
}

fn count_from_u64(pos: usize, residue: u128, weights: &[u128], q: u128) -> u64 {
    let w = weights[pos];
    if pos + 1 == weights.len() {
        return (0..10u128)
            .filter(|d| (residue + d * w).is_multiple_of(q))
            .count() as u64;
    }
    (0..10u128)
        .map(|d| count_from_u64(pos + 1, (residue + d * w) % q, weights, q))
        .sum()
}

fn count_half_space_u64(len: usize, q: u64) -> u64 {
    let q = q as u128;
    let weights: Vec<u128> = half_weights(len)
        .iter()
        .map(|w| (w % q).to_u128().expect("residue below a u64 modulus"))
        .collect();
    if weights.len() == 1 {
        return (1..10u128)
            .filter(|d| (d * weights[0]).is_multiple_of(q))
            .count() as u64;
    }
    // The leading digit is 1..=9 and the second 0..=9; split the work there.
    let prefixes: Vec<(u128, u128)> = (1..10u128)
        .flat_map(|a| (0..10u128).map(move |b| (a, b)))
        .collect();
    prefixes
        .par_iter()
        .map(|&(a, b)| {
            let residue = (a * weights[0] + b * weights[1]) % q;
            if weights.len() == 2 {
                u64::from(residue == 0)
            } else {
                count_from_u64(2, residue, &weights, q)
            }
        })
        .sum()
}

fn count_from_big(pos: usize, residue: &Natural, weights: &[Natural], q: &Natural) -> u64 {
    let first_digit = if pos == 0 { 1u32 } else { 0 };
    (first_digit..10u32)
        .map(|d| {
            let next = (residue + &weights[pos] * d) % q;
            if pos + 1 == weights.len() {
                u64::from(next.is_zero())
            } else {
                count_from_big(pos + 1, &next, weights, q)
            }
        })
        .sum()
}

fn count_half_space_big(len: usize, q: &Natural) -> Natural {
    let weights: Vec<Natural> = half_weights(len).iter().map(|w| w % q).collect();
    Natural::from(count_from_big(0, &Natural::zero(), &weights, q))
}
