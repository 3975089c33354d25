mod common;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Zero};
use slicetorus::catalog::shipped_catalog;
use slicetorus::diagram::torus_knot;
use slicetorus::exactalg::RingTag;
use slicetorus::exec::Mode;
use slicetorus::invariants::*;
use slicetorus::Error;

use common::*;

#[test]
fn signature_matches_catalog() {
    for e in shipped_catalog() {
        let d = e.diagram().unwrap();
        assert_eq!(signature_gl(&d).unwrap(), e.signature, "{}", e.name);
        assert_eq!(
            signature_gl(&d.mirror()).unwrap(),
            -e.signature,
            "mirror {}",
            e.name
        );
    }
}

#[test]
fn signature_independent_of_colouring() {
    for e in entries_upto(8).into_iter().filter(|e| e.name != "0_1") {
        let d = e.diagram().unwrap();
        let cb = d.checkerboard().unwrap();
        let a = goeritz_with(&d, &cb);
        let b = goeritz_with(&d, &cb.swapped());
        assert_eq!(
            symmetric_signature(&a.matrix) - a.mu,
            symmetric_signature(&b.matrix) - b.mu,
            "{}",
            e.name
        );
    }
}

#[test]
fn determinant_two_routes() {
    for e in shipped_catalog() {
        let d = e.diagram().unwrap();
        let g = determinant(&d).unwrap();
        assert_eq!(g, determinant_from_jones(&d, Mode::Parallel), "{}", e.name);
        if let Some(k) = e.det {
            assert_eq!(g, k, "{}", e.name);
        }
    }
}

#[test]
fn jones_known_values() {
    // figure-eight: t^2 - t + 1 - t^-1 + t^-2, in s = t^(1/2)
    let v = jones_polynomial(&knot("4_1"), Mode::Sequential);
    assert_eq!(v.render("s"), "s^4 - s^2 + 1 - s^-2 + s^-4");
    // V(mirror)(s) = V(s^-1)
    for (name, d) in property_set() {
        let a = jones_polynomial(&d, Mode::Sequential);
        let b = jones_polynomial(&d.mirror(), Mode::Sequential);
        let flipped = Laurent(a.0.iter().map(|(&e, c)| (-e, c.clone())).collect());
        assert_eq!(flipped, b, "{name}");
    }
    // V(1) = 1 for knots
    let one = Complex::new(BigRational::one(), BigRational::zero());
    let v = jones_at(&knot("9_42"), &one, Mode::Parallel).unwrap();
    assert_eq!(v, one);
    assert!(jones_at(
        &knot("3_1"),
        &Complex::new(BigRational::zero(), BigRational::zero()),
        Mode::Parallel
    )
    .is_err());
}

#[test]
fn torus_signature_two_routes() {
    for (p, q) in [
        (2, 3),
        (2, 5),
        (2, 7),
        (3, 4),
        (3, 5),
        (2, 9),
        (3, 7),
        (4, 5),
    ] {
        let d = torus_knot(p, q).unwrap();
        let t = TorusKnotParams::new(p, q).unwrap();
        assert_eq!(signature_gl(&d).unwrap(), torus_signature(t), "T({p},{q})");
    }
    assert!(matches!(
        TorusKnotParams::new(2, 4),
        Err(Error::NotCoprime(2, 4))
    ));
    assert!(TorusKnotParams::new(1, 3).is_err());
}

#[test]
fn torus_slice_torus_values() {
    for (p, q) in [(2, 3), (2, 5), (3, 4), (2, 7), (3, 5)] {
        let d = torus_knot(p, q).unwrap();
        let want = torus_slice_torus_value(TorusKnotParams::new(p, q).unwrap());
        assert_eq!(want, (p - 1) * (q - 1) / 2);
        assert_eq!(ss_tilde(&d, RingTag::ZH).unwrap(), want, "T({p},{q})");
        assert_eq!(rasmussen_s(&d, RingTag::Q).unwrap(), 2 * want, "T({p},{q})");
    }
}

#[test]
fn nine_42_slice_torus_values() {
    let d = knot("9_42");
    assert_eq!(ss_tilde(&d, RingTag::ZH).unwrap(), 0);
    assert_eq!(ss_tilde(&d.mirror(), RingTag::ZH).unwrap(), 0);
    assert_eq!(rasmussen_s(&d, RingTag::Q).unwrap(), 0);
    assert_eq!(rasmussen_s(&d, RingTag::Fp(2)).unwrap(), 0);
    assert_eq!(signature_gl(&d).unwrap(), 2);
}

#[test]
fn s_mirror_antisymmetry() {
    for e in entries_upto(7) {
        let d = e.diagram().unwrap();
        let s = rasmussen_s(&d, RingTag::Q).unwrap();
        assert_eq!(
            rasmussen_s(&d.mirror(), RingTag::Q).unwrap(),
            -s,
            "{}",
            e.name
        );
    }
}

#[test]
fn quasi_alternating_s_equals_minus_sigma() {
    for e in shipped_catalog()
        .into_iter()
        .filter(|e| e.flags.quasi_alternating)
    {
        let d = e.diagram().unwrap();
        assert_eq!(
            rasmussen_s(&d, RingTag::Q).unwrap(),
            -e.signature,
            "{}",
            e.name
        );
    }
}

#[test]
fn quasipositive_s_equals_twice_genus() {
    // catalog quasipositivity refers to the chirality with sigma <= 0
    for e in shipped_catalog()
        .into_iter()
        .filter(|e| e.flags.quasipositive)
    {
        let d = e.normalized_diagram().unwrap();
        assert_eq!(rasmussen_s(&d, RingTag::Q).unwrap(), 2 * e.g4, "{}", e.name);
    }
}

#[test]
fn additivity_under_connected_sum() {
    let t = knot("3_1");
    assert_eq!(
        ss_tilde(&t.connected_sum(&t).unwrap(), RingTag::ZH).unwrap(),
        2
    );
    let pairs = [
        ("3_1", "4_1"),
        ("3_1", "m3_1"),
        ("5_1", "m3_1"),
        ("5_2", "6_2"),
        ("7_2", "m4_1"),
    ];
    for (a, b) in pairs {
        let (x, y) = (knot(a), knot(b));
        let sum = x.connected_sum(&y).unwrap();
        let want = ss_tilde(&x, RingTag::ZH).unwrap() + ss_tilde(&y, RingTag::ZH).unwrap();
        assert_eq!(ss_tilde(&sum, RingTag::ZH).unwrap(), want, "{a} # {b}");
        assert_eq!(
            signature_gl(&sum).unwrap(),
            signature_gl(&x).unwrap() + signature_gl(&y).unwrap()
        );
    }
}

#[test]
fn ss_error_cases() {
    let l = knot("L4a1");
    assert!(matches!(ss_tilde(&l, RingTag::ZH), Err(Error::NotAKnot(2))));
    assert!(matches!(
        rasmussen_s(&knot("3_1"), RingTag::Z),
        Err(Error::Inapplicable(_))
    ));
}

#[test]
fn goeritz_determinant_is_exact() {
    let m = vec![vec![3i64, -1, 0], vec![-1, 3, -1], vec![0, -1, 3]];
    assert_eq!(integer_determinant(&m), BigInt::from(21));
    assert_eq!(symmetric_signature(&m), 3);
}

#[test]
fn report_round_trip() {
    let r = InvariantReport::compute(
        &knot("9_42").with_name("9_42"),
        &[RingTag::Q, RingTag::Fp(2)],
        Mode::Parallel,
    )
    .unwrap();
    assert_eq!(r.ss_tilde_h, Some(0));
    assert_eq!(r.determinant, 7);
    assert_eq!(r.signature, 2);
    assert!(r.to_text().contains("determinant  7"));
}
