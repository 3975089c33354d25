mod common;

use serde_json::Value;
use slicetorus::catalog::{shipped_catalog, PROP_TREE_9_42};
use slicetorus::diagram::{torus_knot, PlanarDiagram};
use slicetorus::exec::Mode;
use slicetorus::invariants::{determinant, jones_polynomial, signature_gl};
use slicetorus::lspace::*;
use slicetorus::Error;

use common::*;

fn shipped() -> Value {
    serde_json::from_str(PROP_TREE_9_42).unwrap()
}

fn verify_value(v: &Value) -> slicetorus::Result<LSpaceVerdict> {
    verify_lspace_tree(&ResolutionTree::from_json(&v.to_string())?)
}

#[test]
fn shipped_tree_verifies() {
    let t = ResolutionTree::from_json(PROP_TREE_9_42).unwrap();
    let v = verify_lspace_tree(&t).unwrap();
    assert!(v.is_lspace_over_f2);
    assert_eq!((v.dim_upper, v.h1_order), (7, 7));
    let d = knot("9_42");
    assert_eq!(signature_gl(&d).unwrap(), 2);
    assert_eq!(qm_from_lspace(&d, &v).unwrap(), -1);
    assert_eq!(qm_from_lspace(&d.mirror(), &v).unwrap(), 1);
    // round trip through the writer
    let again = ResolutionTree::from_json(&t.to_json()).unwrap();
    assert_eq!(again, t);
    assert_eq!(t.node_count(), 9);
}

#[test]
fn tree_nodes_are_the_named_links() {
    let t = ResolutionTree::from_json(PROP_TREE_9_42).unwrap();
    let root = &t.diagram;
    assert_eq!(root.canonical_key(), knot("9_42").canonical_key());
    let [a0, a1] = &*t.split.as_ref().unwrap().children;
    // 8_19 is T(3,4) up to mirror; compare Jones polynomials
    let v = jones_polynomial(&a0.diagram, Mode::Parallel);
    let t34 = torus_knot(3, 4).unwrap();
    assert!(
        v == jones_polynomial(&t34, Mode::Parallel)
            || v == jones_polynomial(&t34.mirror(), Mode::Parallel)
    );
    assert_eq!(
        jones_polynomial(&knot("8_19"), Mode::Parallel),
        jones_polynomial(&t34, Mode::Parallel)
    );
    assert_eq!(determinant(&a0.diagram).unwrap(), 3);
    // 7n1, L6n1, L4a1: component count and determinant agree with the link table
    let [_, b1] = &*a1.split.as_ref().unwrap().children;
    let [_, c1] = &*b1.split.as_ref().unwrap().children;
    for (node, name) in [(a1, "L7n1"), (b1, "L6n1"), (c1, "L4a1")] {
        let mut d = node.diagram.clone();
        d.clear_dots();
        let l = knot(name);
        assert_eq!(d.component_count(), l.component_count(), "{name}");
        assert_eq!(determinant(&d).unwrap(), determinant(&l).unwrap(), "{name}");
        assert_eq!(node.det, determinant(&l).unwrap(), "{name}");
    }
    assert_eq!(determinant(&knot("7n1")).unwrap(), 4);
}

fn child<'a>(v: &'a mut Value, path: &[usize]) -> &'a mut Value {
    let mut cur = v;
    for &i in path {
        cur = &mut cur["children"][i];
    }
    cur
}

#[test]
fn corrupted_trees_are_rejected() {
    let mut v = shipped();
    v["det"] = 8.into();
    assert!(matches!(
        verify_value(&v),
        Err(Error::DeterminantMismatch {
            recorded: 8,
            computed: 7,
            ..
        })
    ));

    let mut v = shipped();
    child(&mut v, &[1, 1])["det"] = 5.into();
    match verify_value(&v) {
        Err(Error::DeterminantMismatch { node, .. }) => assert_eq!(node, "root.1.1"),
        other => panic!("{other:?}"),
    }

    let mut v = shipped();
    v["site"] = serde_json::json!([5]);
    assert!(matches!(
        verify_value(&v),
        Err(Error::StructuralMismatch(_))
    ));

    let mut v = shipped();
    v["site"] = serde_json::json!([40]);
    assert!(matches!(
        verify_value(&v),
        Err(Error::InvalidSite {
            index: 40,
            count: 9
        })
    ));

    let mut v = shipped();
    v["children"].as_array_mut().unwrap().pop();
    assert!(verify_value(&v).is_err());

    let mut v = shipped();
    child(&mut v, &[1])["pd"] = child(&mut shipped(), &[0])["pd"].clone();
    assert!(matches!(
        verify_value(&v),
        Err(Error::StructuralMismatch(_)) | Err(Error::DeterminantMismatch { .. })
    ));

    let mut v = shipped();
    child(&mut v, &[0])["just"] = "alt".into();
    assert!(matches!(verify_value(&v), Err(Error::UnjustifiableLeaf(_))));

    let mut v = shipped();
    child(&mut v, &[0])["just"] = "magic".into();
    assert!(matches!(verify_value(&v), Err(Error::Syntax(_))));

    let mut v = shipped();
    child(&mut v, &[1, 0])["just"] = "alt".into();
    assert!(matches!(verify_value(&v), Err(Error::UnjustifiableLeaf(_))));
}

#[test]
fn qa_certificates_for_table_knots() {
    for e in entries_upto(9)
        .into_iter()
        .filter(|e| e.flags.quasi_alternating && e.name != "0_1")
    {
        let d = e.diagram().unwrap();
        match qa_certify(&d).unwrap() {
            QaOutcome::Certified(t) => {
                verify_qa_certificate(&t).unwrap_or_else(|err| panic!("{}: {err}", e.name));
                assert_eq!(t.det, e.det.unwrap());
            }
            other => panic!("{}: {other:?}", e.name),
        }
    }
}

#[test]
fn qa_certificates_for_ten_crossing_non_alternating() {
    let ten: Vec<_> = shipped_catalog()
        .into_iter()
        .filter(|e| e.name.starts_with("10_") && e.flags.quasi_alternating && !e.flags.alternating)
        .collect();
    assert!(!ten.is_empty());
    for e in ten {
        let out = qa_certify(&e.diagram().unwrap()).unwrap();
        assert!(matches!(out, QaOutcome::Certified(_)), "{}", e.name);
    }
}

#[test]
fn qa_negative_controls() {
    for name in ["9_42", "9_46"] {
        assert!(
            matches!(
                qa_certify(&knot(name)).unwrap(),
                QaOutcome::Inconclusive { .. }
            ),
            "{name}"
        );
    }
    assert!(matches!(
        qa_certify(&PlanarDiagram::unlink(2)),
        Err(Error::ZeroDeterminant)
    ));
}

#[test]
fn tampered_qa_certificate_fails() {
    let QaOutcome::Certified(t) = qa_certify(&knot("8_20")).unwrap() else {
        panic!()
    };
    let mut v: Value = serde_json::from_str(&t.to_json()).unwrap();
    v["det"] = 10.into();
    let bad = ResolutionTree::from_json(&v.to_string()).unwrap();
    assert!(verify_qa_certificate(&bad).is_err());
}

#[test]
fn unknot_detection() {
    assert!(is_unknot(&PlanarDiagram::unknot()));
    assert!(!is_unknot(&knot("3_1")));
    assert!(!is_unknot(&knot("L2a1")));
    // a twisted unknot that R1/R2 moves alone do not simplify
    let d = knot("8_20")
        .resolve(slicetorus::diagram::CrossingSite::new(0, 0))
        .unwrap();
    if d.component_count() == 1 && determinant(&d).unwrap() == 1 {
        assert!(is_unknot(&d));
    }
}

#[test]
fn not_an_lspace_verdict() {
    let v = LSpaceVerdict {
        is_lspace_over_f2: false,
        dim_upper: 9,
        h1_order: 7,
        report: vec![],
    };
    assert!(matches!(
        qm_from_lspace(&knot("9_42"), &v),
        Err(Error::NotLSpace)
    ));
}
