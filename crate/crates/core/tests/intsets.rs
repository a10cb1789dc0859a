use interp_core::intsets::{
    banach_density_at, banach_density_profile, gap_sequence, gap_syndeticity_table, max_window_count,
    piecewise_syndetic_certificate, syndetic_certificate, thick_certificate, IntegerSetModel, Witness,
};
use interp_core::rational::{ContinuedFraction, Rational};
use interp_core::Error;
use proptest::prelude::*;

fn powers() -> IntegerSetModel {
    IntegerSetModel::powers(2).unwrap()
}

fn runs(starts: impl Iterator<Item = (u64, u64)>, bound: u64) -> IntegerSetModel {
    let mut e: Vec<u64> = starts.flat_map(|(a, len)| a..a + len).filter(|&v| v <= bound).collect();
    e.sort_unstable();
    e.dedup();
    IntegerSetModel::explicit(e, bound).unwrap()
}

#[test]
fn gap_sequences() {
    let evens = IntegerSetModel::arithmetic(2, 0).unwrap();
    assert_eq!(gap_sequence(&evens, 10).unwrap(), vec![2, 2, 2, 2]);
    assert_eq!(gap_sequence(&powers(), 64).unwrap(), vec![2, 4, 8, 16, 32]);
    let st = IntegerSetModel::sturmian(ContinuedFraction::sqrt2_minus_one(12)).unwrap();
    let gaps = gap_sequence(&st, 50).unwrap();
    assert!(!gaps.is_empty() && gaps.iter().all(|g| *g == 2 || *g == 3));
    let empty = IntegerSetModel::explicit([], 10).unwrap();
    assert_eq!(gap_sequence(&empty, 10), Err(Error::EmptyWindow { bound: 10 }));
}

#[test]
fn syndetic_examples() {
    let evens = IntegerSetModel::arithmetic(2, 0).unwrap();
    assert!(syndetic_certificate(&evens, 100, 2).unwrap().holds());
    let c = syndetic_certificate(&powers(), 100, 10).unwrap();
    assert!(!c.holds());
    assert_eq!(c.witness, Witness::Gap { start: 32, end: 64 });
    let s: IntegerSetModel = "kind=ap a=3 b=0 | kind=explicit values=1 window=60".parse().unwrap();
    assert!(syndetic_certificate(&s, 60, 3).unwrap().holds());
}

#[test]
fn thick_examples() {
    let no_tens = IntegerSetModel::arithmetic(10, 0).unwrap().complement(100).unwrap();
    assert!(thick_certificate(&no_tens, 100, 8).unwrap().holds());
    let evens = IntegerSetModel::arithmetic(2, 0).unwrap();
    assert!(!thick_certificate(&evens, 100, 2).unwrap().holds());
    let squares = runs((1..=10).map(|n| (n * n, n)), 100);
    let c = thick_certificate(&squares, 100, 5).unwrap();
    assert!(c.holds());
    assert_eq!(c.witness, Witness::Run { start: 25, len: 5 });
}

#[test]
fn gap_table_examples() {
    assert!(gap_syndeticity_table(&powers(), 10_000, 5).unwrap().holds());
    let evens = IntegerSetModel::arithmetic(2, 0).unwrap();
    assert!(!gap_syndeticity_table(&evens, 1000, 2).unwrap().holds());
    assert!(!gap_syndeticity_table(&IntegerSetModel::naturals(), 100, 1).unwrap().holds());
}

#[test]
fn piecewise_syndetic_examples() {
    let f9 = 362_880u64;
    let bound = 3_628_800u64;
    let facts = runs((1..=10u64).map(|n| ((1..=n).product::<u64>(), n + 1)), bound);
    let c = piecewise_syndetic_certificate(&facts, bound, 1, 10).unwrap();
    assert!(c.holds());
    assert_eq!(c.witness, Witness::Interval { start: f9, end: f9 + 9 });
    assert!(!piecewise_syndetic_certificate(&powers(), 1_000_000, 4, 100).unwrap().holds());
    let all = IntegerSetModel::naturals();
    assert!(piecewise_syndetic_certificate(&all, 500, 3, 500).unwrap().holds());
}

#[test]
fn density_examples() {
    let thirds = IntegerSetModel::arithmetic(3, 0).unwrap();
    let prof = banach_density_profile(&thirds, 3000, 1024).unwrap();
    assert_eq!(prof.exact, Some(Rational::new(1, 3)));
    let d = IntegerSetModel::sturmian(ContinuedFraction::sqrt2_minus_one(10)).unwrap();
    assert_eq!(banach_density_profile(&d, 10_000, 64).unwrap().exact, Some(ContinuedFraction::sqrt2_minus_one(10).value()));
    let p = banach_density_at(&powers(), 1 << 20, 1024).unwrap();
    assert!(p.count <= 11);
}

#[test]
fn certificates_serialize_with_named_fields() {
    let c = syndetic_certificate(&powers(), 100, 10).unwrap();
    let v: serde_json::Value = serde_json::to_value(&c).unwrap();
    assert_eq!(v["predicate"], "syndetic");
    assert_eq!(v["verdict"], "fails-at-scale");
    assert_eq!(v["scale"]["g"], 10);
    assert_eq!(v["witness"]["type"], "gap");
}

fn small_set() -> impl Strategy<Value = (Vec<u64>, u64)> {
    (20u64..300).prop_flat_map(|n| (prop::collection::btree_set(1..=n, 1..(n as usize)), Just(n)))
        .prop_map(|(s, n)| (s.into_iter().collect(), n))
}

proptest! {
    #[test]
    fn certificates_replay((e, n) in small_set(), g in 1u64..10, l in 1u64..20) {
        let s = IntegerSetModel::explicit(e, n).unwrap();
        let g = g.min(n);
        prop_assert!(syndetic_certificate(&s, n, g).unwrap().replay(&s).unwrap());
        let l = l.min(n);
        prop_assert!(thick_certificate(&s, n, l).unwrap().replay(&s).unwrap());
        if g <= l {
            prop_assert!(piecewise_syndetic_certificate(&s, n, g, l).unwrap().replay(&s).unwrap());
        }
        prop_assert!(gap_syndeticity_table(&s, n, g).unwrap().replay(&s).unwrap());
    }

    #[test]
    fn window_monotonicity((e, n) in small_set(), g in 1u64..8, l in 1u64..12, extra in 1u64..100) {
        let s = IntegerSetModel::explicit(e, n + extra).unwrap();
        let (g, l) = (g.min(n), l.min(n).max(g.min(n)));
        if thick_certificate(&s, n, l).unwrap().holds() {
            prop_assert!(thick_certificate(&s, n + extra, l).unwrap().holds());
        }
        if piecewise_syndetic_certificate(&s, n, g, l).unwrap().holds() {
            prop_assert!(piecewise_syndetic_certificate(&s, n + extra, g, l).unwrap().holds());
        }
        if !syndetic_certificate(&s, n, g).unwrap().holds() {
            prop_assert!(!syndetic_certificate(&s, n + extra, g).unwrap().holds());
        }
    }

    #[test]
    fn thick_complement_is_not_syndetic((e, n) in small_set(), l in 2u64..10) {
        let s = IntegerSetModel::explicit(e.clone(), n).unwrap();
        let c = thick_certificate(&s, n, l.min(n)).unwrap();
        if let (true, Witness::Run { start, .. }) = (c.holds(), c.witness) {
            let mut end = start;
            while e.binary_search(&(end + 1)).is_ok() {
                end += 1;
            }
            if end < n {
                let comp = s.complement(end + 1).unwrap();
                prop_assert!(!syndetic_certificate(&comp, end + 1, l.min(n) - 1).unwrap().holds());
            }
        }
    }

    #[test]
    fn window_counts_are_subadditive(a in 2u64..40, b in 0u64..40, n1 in 1u64..60, n2 in 1u64..60) {
        let s = IntegerSetModel::arithmetic(a, b).unwrap();
        let bound = 2000;
        let e = s.elements(bound).unwrap();
        let f = |n| max_window_count(&e, bound, n).0;
        prop_assert!(f(n1 + n2) <= f(n1) + f(n2));
    }

    #[test]
    fn window_count_matches_scan((e, n) in small_set(), w in 1u64..20) {
        let w = w.min(n);
        let scan = (1..=n - w + 1).map(|s| e.iter().filter(|&&x| s <= x && x < s + w).count() as u64).max().unwrap();
        prop_assert_eq!(max_window_count(&e, n, w).0, scan);
    }
}

#[test]
fn progression_profile_converges() {
    let s = IntegerSetModel::arithmetic(7, 3).unwrap();
    let prof = banach_density_profile(&s, 20_000, 4096).unwrap();
    let last = prof.points.last().unwrap();
    assert!((last.value() - 1.0 / 7.0).abs() < 1.0 / 4096.0 + 1e-12);
    assert!(prof.points.iter().all(|p| (0.0..=1.0).contains(&p.value())));
}
