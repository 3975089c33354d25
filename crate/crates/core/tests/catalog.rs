mod common;

use slicetorus::catalog::*;
use slicetorus::exec::Mode;
use slicetorus::invariants::{signature_gl, torus_signature, TorusKnotParams};
use slicetorus::lspace::LSpaceVerdict;
use slicetorus::Error;

use common::*;

const HEADER: &str = "name,pd,signature,g4,det,alternating,quasi_alternating,quasipositive,positive,braid_positive,strongly_quasipositive,slice\n";

fn entry(name: &str) -> CatalogEntry {
    shipped_catalog()
        .into_iter()
        .find(|e| e.name == name)
        .unwrap()
}

#[test]
fn ingest_counts_and_errors() {
    assert_eq!(entries_upto(9).len(), 85);
    assert_eq!(shipped_catalog().len(), 250);
    assert!(parse_catalog("").unwrap().is_empty());
    assert!(parse_catalog(HEADER).unwrap().is_empty());
    let chain =
        format!("{HEADER}3_1,\"PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]\",-2,1,3,Y,Y,Y,Y,N,N,N\n");
    assert!(matches!(
        parse_catalog(&chain),
        Err(Error::Catalog { row: 2, .. })
    ));
    let slice =
        format!("{HEADER}3_1,\"PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]\",-2,1,3,Y,Y,Y,Y,Y,Y,Y\n");
    assert!(parse_catalog(&slice).is_err());
    let short = format!("{HEADER}3_1,PD[]\n");
    assert!(parse_catalog(&short).is_err());
}

#[test]
fn recomputed_signature_matches_catalog() {
    for e in entries_upto(9) {
        let d = e.normalized_diagram().unwrap();
        let s = signature_gl(&d).unwrap();
        assert!(s <= 0, "{}", e.name);
        assert_eq!(s, -e.signature.abs(), "{}", e.name);
        assert_eq!(
            signature_gl(&e.diagram().unwrap()).unwrap(),
            e.signature,
            "{}",
            e.name
        );
    }
}

#[test]
fn rule_examples() {
    let d = derive(&entry("9_46"), None).unwrap();
    assert_eq!((d.q_m.exact(), d.theta.exact()), (Some(0), Some(0)));
    let d = derive(&entry("8_19"), None).unwrap();
    assert_eq!((d.q_m.exact(), d.theta.exact()), (Some(3), Some(3)));
    let d = derive(&entry("10_132"), None).unwrap();
    assert_eq!(d.theta, DerivedValue::Interval(0, 1));
    assert_eq!(d.q_m, DerivedValue::Interval(-1, 1));
    assert!(d.provenance.iter().any(|p| p.starts_with("undetermined")));
    let d = derive(&entry("10_136"), None).unwrap();
    assert_eq!(d.theta, DerivedValue::Exact(1));
    assert_eq!(d.q_m, DerivedValue::Interval(-1, 1));
    let d = derive(&entry("10_139"), None).unwrap();
    assert_eq!(d.q_m, DerivedValue::Exact(4));
    let d = derive(&entry("10_153"), None).unwrap();
    assert_eq!((d.q_m.exact(), d.theta.exact()), (Some(0), Some(0)));
}

#[test]
fn lspace_evidence_fixes_9_42() {
    let e = entry("9_42");
    let none = derive(&e, None).unwrap();
    assert_eq!(none.theta, DerivedValue::Exact(1));
    assert_eq!(none.q_m, DerivedValue::Interval(-1, 1));
    let ev = Evidence::shipped().unwrap();
    let v = ev.for_entry(&e).expect("tree matches the catalog diagram");
    let d = derive(&e, Some(v)).unwrap();
    assert_eq!((d.q_m.exact(), d.theta.exact()), (Some(1), Some(1)));
    assert!(ev.for_entry(&entry("9_46")).is_none());
}

#[test]
fn evidence_never_widens() {
    let yes = LSpaceVerdict {
        is_lspace_over_f2: true,
        dim_upper: 1,
        h1_order: 1,
        report: vec![],
    };
    let no = LSpaceVerdict {
        is_lspace_over_f2: false,
        ..yes.clone()
    };
    for e in shipped_catalog() {
        let base = derive(&e, None).unwrap();
        for v in [&yes, &no] {
            match derive(&e, Some(v)) {
                Ok(d) => {
                    for (a, b) in [(&base.q_m, &d.q_m), (&base.theta, &d.theta)] {
                        let (lo, hi) = a.bounds().unwrap();
                        let (lo2, hi2) = b.bounds().unwrap();
                        assert!(lo <= lo2 && hi2 <= hi, "{}", e.name);
                    }
                }
                Err(err) => assert!(matches!(err, Error::Contradiction { .. }), "{}", e.name),
            }
        }
    }
}

#[test]
fn contradictions_are_reported() {
    let mut e = entry("3_1");
    e.g4 = 3;
    e.flags.quasi_alternating = true;
    e.flags.quasipositive = true;
    // quasipositive forces 3, quasi-alternating forces 1
    assert!(matches!(derive(&e, None), Err(Error::Contradiction { .. })));
    let rows = vec![
        (e.clone(), derive(&e, None)),
        (entry("4_1"), derive(&entry("4_1"), None)),
    ];
    let (text, errors) = render_table(&rows);
    assert_eq!(errors.len(), 1);
    assert!(text.contains("3_1,1,error,error,3,alt,BP"));
    assert!(text.contains("4_1,0,0,0,1,alt,-"));
}

#[test]
fn formal_sums() {
    let t311 = torus_signature(TorusKnotParams::new(3, 11).unwrap());
    assert_eq!(t311, -16);
    let t311 = KnotValues {
        q_m: Some(10),
        sigma: t311,
        g4: 10,
    };
    let t23 = KnotValues {
        q_m: Some(1),
        sigma: -2,
        g4: 1,
    };
    let k0 = formal_sum(&[(-1, t311), (10, t23)]).unwrap();
    assert_eq!((k0.q_m, k0.sigma), (0, -4));
    assert_eq!(k0.theta.bounds().unwrap().0, 2);
    for n in 1..=5 {
        let s = formal_sum(&[(-n, t311), (10 * n, t23)]).unwrap();
        assert_eq!(s.q_m, 0);
        assert_eq!(s.theta.bounds().unwrap().0, 2 * n);
    }
    let inv = formal_sum(&[(1, t23), (-1, t23)]).unwrap();
    assert_eq!((inv.q_m, inv.sigma), (0, 0));
    let unknown = KnotValues {
        q_m: None,
        sigma: 0,
        g4: 1,
    };
    assert!(formal_sum(&[(1, unknown)]).is_err());
}

#[test]
fn rendering_is_stable() {
    assert_eq!(render_table(&[]).0.trim_end(), TABLE_HEADER.join(","));
    let cat = shipped_catalog();
    let ev = Evidence::shipped().unwrap();
    let a: Vec<_> = cat
        .iter()
        .cloned()
        .zip(derive_all(&cat, &ev, Mode::Parallel))
        .collect();
    let b: Vec<_> = cat
        .iter()
        .cloned()
        .zip(derive_all(&cat, &ev, Mode::Sequential))
        .collect();
    assert_eq!(render_table(&a), render_table(&b));
    let t = render_table(&a).0;
    assert!(t.contains("10_132,0,\"[-1,1]\",\"[0,1]\",1,non-q.alt,-"));
}

#[test]
fn diff_reports_cells() {
    let fixture =
        "name,neg_sigma_half,q_m,theta,g4,qalt,positivity\n3_1,1,1,1,1,alt,BP\n4_1,0,0,0,1,alt,-\n";
    let ours =
        "name,neg_sigma_half,q_m,theta,g4,qalt,positivity\n3_1,1,1,1,1,alt,P\n4_1,0,0,1,1,alt,-\n";
    let d = diff_table(ours, fixture).unwrap();
    assert_eq!(d.compared, 2);
    assert_eq!(
        d.mismatches,
        vec!["4_1 theta: got 1, expected 0".to_string()]
    );
    assert_eq!(d.positivity.len(), 1);
    assert!(!d.is_clean());
    let d = diff_table(fixture, fixture).unwrap();
    assert!(d.is_clean());
}

#[test]
fn lookup_forms() {
    assert_eq!(lookup("unknot").unwrap().crossing_count(), 0);
    assert_eq!(lookup("T(2,3)").unwrap().crossing_count(), 3);
    assert_eq!(
        lookup("m3_1").unwrap(),
        lookup("3_1").unwrap().mirror().with_name("m3_1")
    );
    assert_eq!(
        lookup("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]")
            .unwrap()
            .crossing_count(),
        3
    );
    assert_eq!(lookup("7n1").unwrap().component_count(), 2);
    assert!(matches!(lookup("11_1"), Err(Error::UnknownKnot(_))));
}
