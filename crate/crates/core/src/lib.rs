//! Palindromic numbers in arithmetic and geometric progressions.
//!
//! ```
//! use palinseq::{next_palindrome, Natural};
//!
//! let p = next_palindrome(&Natural::from(3459543u32));
//! assert_eq!(p.value(), &Natural::from(3460643u32));
//! ```

pub mod ap_analysis;
pub mod cli;
pub mod digits;
pub mod error;
pub mod gp_analysis;
pub mod oracle;
pub mod palindrome_seq;

pub use ap_analysis::{
    ap_scan, exhaustive_ap_search, longest_palindromic_ap, termination_cap, APSpec, APWitness,
    ScanOutcome, ScanReport,
};
pub use digits::{digit_count, from_natural, is_palindrome, to_natural, DigitString, Natural};
pub use error::{Error, Result};
pub use gp_analysis::{
    alpha_ratio, count_palindromes_divisible, gp_scan, integrality_failure_index,
    min_index_for_digits, subsequence_exponent, AlphaComparison, DivisibilityCount, GPSpec,
    MinIndex, Rational,
};
pub use palindrome_seq::{
    count_with_digits, gaps_in_range, next_palindrome, prev_palindrome, rank, unrank, GapRecord,
    Palindrome,
};
