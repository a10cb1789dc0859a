use interp_core::recurrence::{
    build_f, dyadic_valuation, in_f_by_digits, index_of, index_set, ip_closure, j_generators, verify_shift_ip,
    verify_sum_free, IpSetSpec,
};
use proptest::prelude::*;

#[test]
fn small_elements() {
    let f = build_f(2000).unwrap();
    assert_eq!(f.values(), vec![11, 102, 1001, 1011]);
    assert_eq!(build_f(200).unwrap().values(), vec![11, 102]);
    assert!(f.check_structure());
    assert!(f.contains(1011).unwrap());
    assert!(f.contains(3000).is_err());
}

#[test]
fn count_to_ten_million() {
    let f = build_f(10_000_000).unwrap();
    assert_eq!(f.values().len(), 11);
    assert!(verify_sum_free(&f.values(), 10_000_000).holds);
    for n in 1..=3 {
        assert!(verify_shift_ip(&f, n, 3, 10_000_000).unwrap().holds);
    }
}

#[test]
fn index_family() {
    assert_eq!(index_set(1, 10).unwrap(), vec![1, 3, 5, 7, 9]);
    assert_eq!(index_set(3, 40).unwrap(), vec![4, 12, 20, 28, 36]);
    assert_eq!(index_of(12).unwrap(), 3);
    assert!(index_of(0).is_err());
    assert_eq!(dyadic_valuation(40), 3);
    assert_eq!(j_generators(2, 10_000).unwrap(), vec![100, 1_000_000].into_iter().filter(|&g| g <= 10_000).collect::<Vec<_>>());
}

#[test]
fn shift_ip_depths() {
    let f = build_f(2_000_000).unwrap();
    let d2 = verify_shift_ip(&f, 1, 2, 2_000_000).unwrap();
    assert_eq!(d2.checked.len(), 6);
    assert!(d2.holds);
    let d3 = verify_shift_ip(&f, 1, 3, 2_000_000).unwrap();
    assert!(d3.checked.contains(&101_010));
}

#[test]
fn sum_free_reports_counterexample() {
    let v = verify_sum_free(&[3, 5, 8], 20);
    assert!(!v.holds);
    assert_eq!(v.counterexample, Some((3, 5, 8)));
    assert!(IpSetSpec::new(vec![3, 2], 1).is_err());
    assert_eq!(IpSetSpec::new(vec![1, 10], 2).unwrap().elements(100), vec![1, 10, 11]);
}

proptest! {
    #[test]
    fn oracles_agree(x in 1u64..3_000_000) {
        let f = build_f(3_000_000).unwrap();
        prop_assert_eq!(f.contains(x).unwrap(), in_f_by_digits(x));
    }

    #[test]
    fn closure_is_closed_under_disjoint_sums(gens in prop::collection::btree_set(1u64..1000, 1..6), depth in 1usize..4) {
        let g: Vec<u64> = gens.into_iter().collect();
        let c = ip_closure(&g, depth, u64::MAX);
        prop_assert!(g.iter().all(|x| c.binary_search(x).is_ok()));
        prop_assert!(c.windows(2).all(|w| w[0] < w[1]));
        let full = ip_closure(&g, g.len(), u64::MAX);
        prop_assert!(c.iter().all(|x| full.binary_search(x).is_ok()));
    }
}
