use motif_core::genmodel::{rel_hamming, shift_distance};
use motif_core::matchkit::match_predicate_with;
use motif_core::{derive_and_validate, MatchKind, ParamOverrides};
use proptest::prelude::*;

const KINDS: [MatchKind; 5] = [
    MatchKind::WeakLeft,
    MatchKind::Left,
    MatchKind::WeakRight,
    MatchKind::Right,
    MatchKind::Full,
];

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn predicates_are_monotone_in_beta(
        x1 in prop::collection::vec(0u8..4, 32),
        x2 in prop::collection::vec(0u8..4, 32),
        w in 4usize..32,
        v in 1usize..12,
        b1 in 0.0f64..0.5,
        db in 0.0f64..0.5,
    ) {
        for k in KINDS {
            if match_predicate_with(k, &x1, &x2, w, v, b1).unwrap() {
                prop_assert!(match_predicate_with(k, &x1, &x2, w, v, b1 + db).unwrap());
            }
        }
    }

    #[test]
    fn rel_hamming_is_a_normalised_symmetric_distance(
        pair in (1usize..64).prop_flat_map(|n| (prop::collection::vec(0u8..4, n), prop::collection::vec(0u8..4, n))),
    ) {
        let (a, b) = pair;
        let d = rel_hamming(&a, &b).unwrap();
        prop_assert_eq!(d, rel_hamming(&b, &a).unwrap());
        prop_assert_eq!(d == 0.0, a == b);
        let matches = a.iter().zip(&b).filter(|(x, y)| x == y).count();
        prop_assert!((d - (1.0 - matches as f64 / a.len() as f64)).abs() < 1e-12);
    }

    #[test]
    fn shift_distance_is_min_of_endpoint_gaps(
        i1 in -100i64..100, l1 in 0i64..50, i2 in -100i64..100, l2 in 0i64..50,
    ) {
        let d = shift_distance(i1, i1 + l1, i2, i2 + l2).unwrap();
        prop_assert_eq!(d, shift_distance(i2, i2 + l2, i1, i1 + l1).unwrap());
        prop_assert!(d <= i1.abs_diff(i2) && d <= (i1 + l1).abs_diff(i2 + l2));
        prop_assert!(d == i1.abs_diff(i2) || d == (i1 + l1).abs_diff(i2 + l2));
    }

    #[test]
    fn derived_window_respects_floor_and_override(n in 4usize..1 << 20, w in prop::option::of(4usize..64)) {
        let o = ParamOverrides { window_override: w, ..Default::default() };
        let p = derive_and_validate(4, 10, &o, n).unwrap();
        let expect = w.unwrap_or_else(|| ((2.0 * (n as f64).log2()).ceil() as usize).max(4));
        prop_assert_eq!(p.window(), expect);
        prop_assert_eq!(derive_and_validate(4, 10, &p.overrides(), n).unwrap(), p);
    }
}
