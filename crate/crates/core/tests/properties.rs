use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

use palinseq::gp_analysis::approx_index_bound;
use palinseq::oracle::{oracle_enumerate, oracle_is_palindrome, Oracle};
use palinseq::palindrome_seq::palindromes_in;
use palinseq::{
    ap_scan, count_palindromes_divisible, count_with_digits, digit_count, exhaustive_ap_search,
    from_natural, gaps_in_range, gp_scan, integrality_failure_index, is_palindrome,
    longest_palindromic_ap, min_index_for_digits, next_palindrome, prev_palindrome, rank,
    to_natural, unrank, APSpec, GPSpec, Natural, Rational, ScanOutcome,
};

fn nat(v: u64) -> Natural {
    Natural::from(v)
}

fn pow10(k: usize) -> Natural {
    num_traits::pow(nat(10), k)
}

/// Decimal strings of 1..=45 digits with no leading zero.
fn big_natural() -> impl Strategy<Value = Natural> {
    (1u8..=9, proptest::collection::vec(0u8..=9, 0..45)).prop_map(|(lead, rest)| {
        let mut d = vec![lead];
        d.extend(rest);
        Natural::from_radix_be(&d, 10).unwrap()
    })
}

fn big_palindrome() -> impl Strategy<Value = Natural> {
    (
        1u8..=9,
        proptest::collection::vec(0u8..=9, 0..22),
        any::<bool>(),
    )
        .prop_map(|(lead, rest, odd)| {
            let mut half = vec![lead];
            half.extend(rest);
            let mut d = half.clone();
            let tail = if odd {
                &half[..half.len() - 1]
            } else {
                &half[..]
            };
            d.extend(tail.iter().rev());
            Natural::from_radix_be(&d, 10).unwrap()
        })
}

proptest! {
    #[test]
    fn digit_round_trip(n in big_natural()) {
        let ds = from_natural(&n);
        prop_assert_eq!(to_natural(&ds), n.clone());
        prop_assert_eq!(ds.len(), digit_count(&n));
        prop_assert_ne!(ds.digits()[0], 0);
    }

    #[test]
    fn predicate_matches_oracle(n in big_natural(), p in big_palindrome()) {
        prop_assert_eq!(is_palindrome(&n), oracle_is_palindrome(&n));
        prop_assert!(is_palindrome(&p));
        prop_assert!(oracle_is_palindrome(&p));
        let bumped = &p + 1u32;
        prop_assert_eq!(is_palindrome(&bumped), oracle_is_palindrome(&bumped));
    }

    #[test]
    fn successor_and_predecessor_bracket(n in big_natural()) {
        let next = next_palindrome(&n);
        prop_assert!(next.value() > &n);
        // nothing palindromic strictly between n and next(n)
        let back = prev_palindrome(next.value()).unwrap();
        prop_assert!(back.value() <= &n);
        prop_assert_eq!(next_palindrome(back.value()), next.clone());
        if n >= nat(2) {
            let prev = prev_palindrome(&n).unwrap();
            prop_assert!(prev.value() < &n);
            prop_assert!(next_palindrome(prev.value()).value() >= &n);
        }
    }

    #[test]
    fn prev_undoes_next_on_palindromes(p in big_palindrome()) {
        let next = next_palindrome(&p);
        let back = prev_palindrome(next.value()).unwrap();
        prop_assert_eq!(back.value(), &p);
    }

    #[test]
    fn rank_unrank_inverse_large(p in big_palindrome()) {
        let r = rank(&p).unwrap();
        let back = unrank(&r).unwrap();
        prop_assert_eq!(back.value(), &p);
        prop_assert_eq!(rank(next_palindrome(&p).value()).unwrap(), r + 1u32);
    }

    #[test]
    fn gap_ranges_tile(lo in 0u64..200_000, a in 1u64..50_000, b in 1u64..50_000) {
        let (lo, mid, hi) = (nat(lo), nat(lo + a), nat(lo + a + b));
        let whole = gaps_in_range(&lo, &hi).unwrap();
        let mut parts = gaps_in_range(&lo, &mid).unwrap();
        parts.extend(gaps_in_range(&mid, &hi).unwrap());
        prop_assert_eq!(&whole, &parts);
        for g in &whole {
            prop_assert!(!g.gap.is_zero());
            prop_assert_eq!(&next_palindrome(g.lower.value()), &g.upper);
        }
    }

    #[test]
    fn integrality_index_is_exact(a in 1u64..=10_000, p in 1u64..=500, q in 2u64..=100) {
        prop_assume!(p.gcd(&q) == 1);
        let s = integrality_failure_index(&nat(a), &Rational::new(nat(p), nat(q)).unwrap()).unwrap();
        let r = Ratio::new(nat(p), nat(q));
        let term = |k: u64| Ratio::from_integer(nat(a)) * num_traits::pow(r.clone(), k as usize);
        prop_assert!(term(s - 1).is_integer());
        prop_assert!(!term(s).is_integer());
    }

    #[test]
    fn min_index_bounds(a in 1u64..1_000_000, r in 2u64..100_000, lambda in 1u64..20) {
        let gp = GPSpec::new(nat(a), nat(r)).unwrap();
        let m = min_index_for_digits(&gp, lambda).unwrap();
        let (l, rl) = (gp.first_len() as u64, gp.ratio_len() as u64);
        // digits(a r^k) <= L + kR, so k >= (lambda - 1) L / R
        prop_assert!(m.exact >= ((lambda - 1) * l).div_ceil(rl));
        prop_assert!(digit_count(&gp.term(m.exact as u32)) as u64 >= lambda * l);
        if m.exact > 0 {
            prop_assert!((digit_count(&gp.term(m.exact as u32 - 1)) as u64) < lambda * l);
        }
        let next = min_index_for_digits(&gp, lambda + 1).unwrap();
        prop_assert!(next.exact >= m.exact);
        prop_assert_eq!(m.approx_bound, approx_index_bound(&gp, lambda).ok());
    }

    #[test]
    fn gp_scan_reports_reverify(a in 1u64..100_000, r in 2u64..1000) {
        let gp = GPSpec::new(nat(a), nat(r)).unwrap();
        if let ScanOutcome::Failed(rep) = gp_scan(&gp, false, 200).unwrap() {
            let i = rep.failing_index.to_u32().unwrap();
            prop_assert_eq!(&gp.term(i), &rep.failing_term);
            prop_assert!(!oracle_is_palindrome(&rep.failing_term));
            for k in 0..i {
                prop_assert!(oracle_is_palindrome(&gp.term(k)));
            }
        }
    }

    #[test]
    fn ap_scan_reports_reverify(a in 1u64..1_000_000, d in 1u64..100_000) {
        let ap = APSpec::new(nat(a), nat(d)).unwrap();
        let rep = ap_scan(&ap).unwrap();
        prop_assert!(rep.failing_index < rep.cap_used);
        prop_assert_eq!(&ap.term(&rep.failing_index), &rep.failing_term);
        prop_assert!(!oracle_is_palindrome(&rep.failing_term));
        let mut i = Natural::zero();
        while i < rep.failing_index {
            prop_assert!(oracle_is_palindrome(&ap.term(&i)));
            i += 1u32;
        }
    }

    #[test]
    fn density_matches_filtering(len in 1usize..=6, q in 2u64..=300) {
        let lo = pow10(len - 1);
        let hi = pow10(len) - 1u32;
        let slow = oracle_enumerate(&lo, &hi)
            .unwrap()
            .into_iter()
            .filter(|p| (p % q).is_zero())
            .count();
        let c = count_palindromes_divisible(len, &nat(q)).unwrap();
        prop_assert_eq!(c.exact_count.clone(), nat(slow as u64));
        prop_assert!(c.exact_count <= count_with_digits(len).unwrap());
    }
}

#[test]
fn successor_matches_linear_scan_exhaustively() {
    let oracle = Oracle::default();
    for n in 0..20_000u64 {
        let slow = oracle.next_palindrome(&nat(n)).unwrap();
        assert_eq!(next_palindrome(&nat(n)).value(), &slow, "n = {n}");
    }
}

#[test]
fn rank_unrank_inverse_exhaustive() {
    for i in 1..=100_000u64 {
        let p = unrank(&nat(i)).unwrap();
        assert_eq!(rank(p.value()).unwrap(), nat(i));
    }
}

#[test]
fn counts_match_enumeration() {
    for len in 1..=7usize {
        let all = oracle_enumerate(&pow10(len - 1), &(pow10(len) - 1u32)).unwrap();
        assert_eq!(count_with_digits(len).unwrap(), nat(all.len() as u64));
    }
}

/// Gap after a `(2m+1)`-digit palindrome whose half ends in `j` nines.
fn predicted_gap(p: &Natural) -> Natural {
    let digits = p.to_radix_be(10);
    let m = digits.len() / 2;
    let half = &digits[..=m];
    let j = half.iter().rev().take_while(|&&d| d == 9).count();
    if j == 0 {
        pow10(m)
    } else {
        pow10(m - j) * 11u32
    }
}

#[test]
fn odd_length_gaps_follow_carry_length() {
    // Exhaustive for 3, 5 and 7 digits.
    for m in 1..=3usize {
        let pals = palindromes_in(&pow10(2 * m), &(pow10(2 * m + 1) - 1u32));
        let mut min_gap: Option<Natural> = None;
        for w in pals.windows(2) {
            let gap = w[1].value() - w[0].value();
            assert_eq!(gap, predicted_gap(w[0].value()), "after {}", w[0]);
            min_gap = Some(min_gap.map_or(gap.clone(), |g| g.min(gap)));
        }
        // 10 for three digits, 11 (a9…9a -> (a+1)0…0(a+1)) from five digits on.
        let expected = if m == 1 { nat(10) } else { nat(11) };
        assert_eq!(min_gap.unwrap(), expected, "m = {m}");
    }
}

#[test]
fn odd_length_gaps_sampled_for_longer_lengths() {
    let mut rng_state = 0x9e37_79b9_7f4a_7c15u64;
    let mut next_rand = || {
        rng_state ^= rng_state << 13;
        rng_state ^= rng_state >> 7;
        rng_state ^= rng_state << 17;
        rng_state
    };
    for m in 4..=7usize {
        for _ in 0..2000 {
            let lo = pow10(2 * m);
            let offset = nat(next_rand()) % (pow10(2 * m + 1) - &lo - 1u32);
            let p = next_palindrome(&(&lo + offset));
            if palinseq::digit_count(p.value()) != 2 * m + 1 {
                continue;
            }
            let q = next_palindrome(p.value());
            if palinseq::digit_count(q.value()) != 2 * m + 1 {
                continue;
            }
            assert_eq!(q.value() - p.value(), predicted_gap(p.value()), "after {p}");
        }
        // 19…91 -> 20…02
        let mut d = vec![9u8; 2 * m + 1];
        d[0] = 1;
        d[2 * m] = 1;
        let p = Natural::from_radix_be(&d, 10).unwrap();
        let gap = next_palindrome(&p).value() - &p;
        assert_eq!(gap, nat(11));
        assert!(gap < pow10(m));
    }
}

#[test]
fn longest_ap_matches_brute_force_small() {
    let pals: Vec<u64> = palindromes_in(&nat(1), &nat(3000))
        .iter()
        .map(|p| p.value().to_u64().unwrap())
        .collect();
    for (i, &a) in pals.iter().enumerate().step_by(7) {
        for &l in pals[i + 1..].iter().step_by(5) {
            let w = longest_palindromic_ap(&nat(a), &nat(l)).unwrap();
            let brute = (1..=l - a)
                .find(|&d| {
                    let mut t = a + d;
                    while t < l && oracle_is_palindrome(&nat(t)) {
                        t += d;
                    }
                    t == l
                })
                .unwrap();
            assert_eq!(w.difference, nat(brute), "({a}, {l})");
            assert!(w.verify());
        }
    }
}

#[test]
fn exhaustive_search_matches_naive() {
    let max = 1200u64;
    let fast: Vec<(u64, u64, u64)> = exhaustive_ap_search(&nat(max), 3)
        .unwrap()
        .into_iter()
        .map(|w| {
            (
                w.first.to_u64().unwrap(),
                w.difference.to_u64().unwrap(),
                w.length,
            )
        })
        .collect();
    let pal = |v: u64| oracle_is_palindrome(&nat(v));
    let mut naive = Vec::new();
    for a in (1..=max).filter(|&a| pal(a)) {
        for d in 1..=max {
            if a > d && pal(a - d) {
                continue;
            }
            let len = (0..)
                .take_while(|k| a + k * d <= max && pal(a + k * d))
                .count() as u64;
            if len >= 3 {
                naive.push((a, d, len));
            }
        }
    }
    assert_eq!(fast, naive);
}
