use proptest::prelude::*;
use slicetorus::diagram::{from_braid, parse_pd, DiagramJson, PlanarDiagram};
use slicetorus::exec::Mode;
use slicetorus::invariants::{
    determinant, determinant_from_jones, jones_khovanov, jones_polynomial, signature_gl,
};

fn braid() -> impl Strategy<Value = PlanarDiagram> {
    (2..=4usize).prop_flat_map(|n| {
        let gen = (1..n as i32).prop_flat_map(|i| prop_oneof![Just(i), Just(-i)]);
        prop::collection::vec(gen, 1..=9).prop_map(move |w| from_braid(n, &w).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn mirror_negates_signature(d in braid()) {
        prop_assert_eq!(signature_gl(&d.mirror()).unwrap(), -signature_gl(&d).unwrap());
    }

    #[test]
    fn determinant_routes_agree(d in braid()) {
        prop_assert_eq!(determinant(&d).unwrap(), determinant_from_jones(&d, Mode::Sequential));
    }

    #[test]
    fn simplification_preserves_invariants(d in braid()) {
        let s = d.greedy_simplify();
        prop_assert!(s.crossing_count() <= d.crossing_count());
        prop_assert_eq!(s.component_count(), d.component_count());
        prop_assert_eq!(determinant(&s).unwrap(), determinant(&d).unwrap());
        prop_assert_eq!(jones_polynomial(&s, Mode::Sequential), jones_polynomial(&d, Mode::Sequential));
    }

    #[test]
    fn modes_agree(d in braid()) {
        prop_assert_eq!(jones_khovanov(&d, Mode::Parallel), jones_khovanov(&d, Mode::Sequential));
    }

    #[test]
    fn json_round_trip(d in braid()) {
        let j = DiagramJson::from_diagram(&d);
        let back = j.to_diagram().unwrap();
        prop_assert_eq!(back.canonical_key(), d.canonical_key());
        let again = parse_pd(&d.to_pd_string()).unwrap();
        prop_assert_eq!(again.crossing_count(), d.crossing_count());
    }

    #[test]
    fn writhe_is_signed_count(d in braid()) {
        prop_assert_eq!(d.writhe(), d.positive_count() as i64 - d.negative_count() as i64);
        prop_assert_eq!(d.mirror().writhe(), -d.writhe());
    }
}
