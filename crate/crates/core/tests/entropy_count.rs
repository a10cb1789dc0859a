use interp_core::entropy_count::{
    analytic_limit, brute_force_count, brute_force_count_with_limit, brute_force_histograms, count_from_histogram,
    count_low_weight, entropy_h, growth_rate_profile, sandwich_bounds, DEFAULT_ENUMERATION_LIMIT,
};
use interp_core::rational::Rational;
use interp_core::Error;
use num_bigint::BigUint;
use proptest::prelude::*;

fn r(p: u64, q: u64) -> Rational {
    Rational::new(p, q)
}

/// Counts words of length `m` over `k` symbols with at most `⌊δm⌋` nonzero symbols
/// by direct enumeration.
fn enumerate(m: u32, delta: Rational, k: u32) -> u64 {
    let top = (delta * Rational::from(m as u64)).floor().to_integer();
    let mut n = 0;
    for code in 0..(k as u64).pow(m) {
        let mut c = code;
        let mut nz = 0;
        for _ in 0..m {
            nz += (c % k as u64 != 0) as u64;
            c /= k as u64;
        }
        n += (nz <= top) as u64;
    }
    n
}

#[test]
fn small_closed_forms() {
    assert_eq!(count_low_weight(4, r(1, 2), 2).unwrap().count, BigUint::from(11u32));
    assert_eq!(count_low_weight(3, r(1, 3), 3).unwrap().count, BigUint::from(7u32));
    assert!(count_low_weight(10, r(3, 4), 2).is_err());
    assert_eq!(count_low_weight(7, r(0, 1), 5).unwrap().count, BigUint::from(1u32));
}

#[test]
fn entropy_values() {
    assert!((entropy_h(0.5).unwrap() - std::f64::consts::LN_2).abs() < 1e-12);
    assert_eq!(entropy_h(0.0).unwrap(), 0.0);
    assert!(entropy_h(1.5).is_err());
    let l = analytic_limit(r(1, 3), 3).unwrap();
    assert!((l - (entropy_h(1.0 / 3.0).unwrap() + (2.0f64).ln() / 3.0)).abs() < 1e-12);
}

#[test]
fn brute_force_limit_refuses() {
    let e = brute_force_count(30, r(1, 2), 4).unwrap_err();
    assert!(matches!(e, Error::EnumerationLimit { limit, .. } if limit == DEFAULT_ENUMERATION_LIMIT));
    assert_eq!(brute_force_count_with_limit(6, r(1, 2), 3, 1_000).unwrap(), enumerate(6, r(1, 2), 3));
}

#[test]
fn histograms_match_closed_form() {
    let h = brute_force_histograms(12, 3, DEFAULT_ENUMERATION_LIMIT).unwrap();
    for m in 1..=12u64 {
        for (p, q) in [(0, 1), (1, 4), (1, 3), (1, 2)] {
            let closed = count_low_weight(m, r(p, q), 3).unwrap().count;
            assert_eq!(BigUint::from(count_from_histogram(&h[m as usize], r(p, q))), closed);
        }
    }
}

#[test]
fn profile_approaches_limit_from_below() {
    let prof = growth_rate_profile(r(1, 2), 2, &[10, 50, 100, 200, 400]).unwrap();
    assert!(prof.gap_shrinks());
    assert!(prof.infimum_nonincreasing());
    assert!(prof.points.iter().all(|p| p.gap < 0.0));
    assert!(prof.final_rate().unwrap() > 0.68);
    assert!(growth_rate_profile(r(1, 2), 2, &[10, 10]).is_err());
}

#[test]
fn log_count_is_not_subadditive() {
    let c = |m| count_low_weight(m, r(1, 2), 2).unwrap().count;
    assert!(c(2) > &c(1) * &c(1));
}

proptest! {
    #[test]
    fn closed_form_matches_enumeration(m in 1u32..9, p in 0u64..6, k in 2u32..5) {
        let d = r(p, 10);
        prop_assert_eq!(count_low_weight(m as u64, d, k).unwrap().count, BigUint::from(enumerate(m, d, k)));
    }

    #[test]
    fn count_is_monotone(m in 1u64..200, p1 in 0u64..=5, p2 in 0u64..=5, k in 2u32..6) {
        let (a, b) = (p1.min(p2), p1.max(p2));
        let lo = count_low_weight(m, r(a, 10), k).unwrap().count;
        let hi = count_low_weight(m, r(b, 10), k).unwrap().count;
        prop_assert!(lo <= hi);
        prop_assert!(count_low_weight(m, r(a, 10), k).unwrap().count <= count_low_weight(m + 1, r(a, 10), k).unwrap().count);
    }

    #[test]
    fn superadditive_at_integral_points(a in 1u64..40, b in 1u64..40, q in 2u64..6, k in 2u32..5) {
        let (m1, m2) = (a * q, b * q);
        let d = r(1, q);
        let c = |m| count_low_weight(m, d, k).unwrap().count;
        prop_assert!(c(m1 + m2) >= c(m1) * c(m2));
    }

    #[test]
    fn sandwich_contains_count(m in 1u64..300, p in 0u64..=5, k in 2u32..6) {
        let d = r(p, 10);
        let (lo, hi) = sandwich_bounds(m, d, k).unwrap();
        let c = count_low_weight(m, d, k).unwrap().count;
        prop_assert!(lo <= c && c <= hi);
    }
}
