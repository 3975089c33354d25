mod common;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use slicetorus::complex::{build_cube, Bigrading, ChainComplex, CubeOptions};
use slicetorus::exactalg::{Fp, RingTag};
use slicetorus::exec::Mode;
use slicetorus::homology::{
    homology, homology_pid, homology_pid_snf, homology_zh, HomologyOptions, Summand,
};
use slicetorus::invariants::{jones_khovanov, jones_reduced};

use common::*;

fn opts(reduced: bool) -> CubeOptions {
    CubeOptions {
        reduced,
        ..Default::default()
    }
}

fn laurent_map(l: &slicetorus::invariants::Laurent) -> BTreeMap<i32, i64> {
    l.0.iter().map(|(&e, c)| (e, c.to_i64().unwrap())).collect()
}

#[test]
fn d_squared_and_homogeneity() {
    for (name, d) in property_set() {
        for reduced in [false, true] {
            let c: ChainComplex<BigInt> = build_cube(&d, opts(reduced)).unwrap();
            c.check_d_squared()
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            c.check_homogeneous()
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            let mut s = c.clone();
            s.gauss_eliminate();
            s.check_d_squared()
                .unwrap_or_else(|e| panic!("{name} simplified: {e}"));
            s.check_homogeneous()
                .unwrap_or_else(|e| panic!("{name} simplified: {e}"));
        }
    }
}

#[test]
fn euler_characteristic_is_jones() {
    for (name, d) in property_set() {
        let c: ChainComplex<BigInt> = build_cube(&d, opts(false)).unwrap();
        let want = laurent_map(&jones_khovanov(&d, Mode::Parallel));
        assert_eq!(c.euler_characteristic(), want, "{name}");
        let mut s = c.clone();
        s.gauss_eliminate();
        assert_eq!(s.euler_characteristic(), want, "{name} after elimination");
        let r: ChainComplex<BigInt> = build_cube(&d, opts(true)).unwrap();
        assert_eq!(
            r.euler_characteristic(),
            laurent_map(&jones_reduced(&d, Mode::Sequential)),
            "{name} reduced"
        );
    }
}

#[test]
fn elimination_preserves_homology() {
    for (name, d) in property_set() {
        for reduced in [false, true] {
            let c: ChainComplex<BigRational> = build_cube(&d, opts(reduced)).unwrap();
            let before = homology_pid_snf(&c);
            let mut s = c.clone();
            s.gauss_eliminate();
            assert_eq!(homology_pid_snf(&s), before, "{name} reduced={reduced}");
        }
    }
}

#[test]
fn pid_path_agrees_with_smith_form() {
    for (name, d) in property_set() {
        for reduced in [false, true] {
            let c: ChainComplex<Fp<2>> = build_cube(&d, opts(reduced)).unwrap();
            let m = homology_pid(&c, RingTag::FpH(2));
            assert_eq!(
                m.snf_summary(),
                homology_pid_snf(&c),
                "{name} reduced={reduced}"
            );
        }
    }
}

#[test]
fn reduced_free_rank_one() {
    for (name, d) in property_set() {
        for ring in [RingTag::QH, RingTag::FpH(2), RingTag::FpH(3)] {
            let m = homology(
                &d,
                ring,
                HomologyOptions {
                    reduced: true,
                    ..Default::default()
                },
            )
            .unwrap();
            assert_eq!(m.free_part_bigradings().len(), 1, "{name} over {ring}");
        }
    }
}

#[test]
fn mirror_negates_free_bigrading() {
    for e in entries_upto(8) {
        let d = e.diagram().unwrap();
        let o = HomologyOptions {
            reduced: true,
            ..Default::default()
        };
        let a = homology(&d, RingTag::QH, o).unwrap().free_part_bigradings();
        let b = homology(&d.mirror(), RingTag::QH, o)
            .unwrap()
            .free_part_bigradings();
        assert_eq!(a.len(), 1);
        assert_eq!(b, vec![Bigrading::new(-a[0].i, -a[0].q)], "{}", e.name);
    }
}

/// Free ranks and H-torsion orders per bigrading, after tensoring with Q.
fn rational_profile(
    m: &slicetorus::homology::GradedModule,
) -> BTreeMap<(i32, i32), (usize, Vec<u32>)> {
    let mut p: BTreeMap<(i32, i32), (usize, Vec<u32>)> = BTreeMap::new();
    for s in &m.summands {
        let k = (s.grading.i, s.grading.q);
        match s.kind {
            Summand::Free => p.entry(k).or_default().0 += 1,
            Summand::HCyclic(h) => p.entry(k).or_default().1.push(h),
            _ => {}
        }
    }
    for v in p.values_mut() {
        v.1.sort();
    }
    p
}

#[test]
fn zh_slices_agree_with_rational_pid() {
    let mut checked = 0;
    for e in entries_upto(9) {
        let d = e.diagram().unwrap();
        let mut c: ChainComplex<BigInt> = build_cube(&d, opts(true)).unwrap();
        c.gauss_eliminate();
        let zh = homology_zh(&c.compact()).unwrap();
        if !zh.is_complete() {
            continue;
        }
        let q = homology(
            &d,
            RingTag::QH,
            HomologyOptions {
                reduced: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(rational_profile(&zh), rational_profile(&q), "{}", e.name);
        checked += 1;
    }
    assert!(checked >= 80, "only {checked} complete decompositions");
}

#[test]
fn h_zero_specialisation_matches_khovanov_ranks() {
    // Over F2 the reduced Khovanov homology of the trefoil has rank 3.
    let d = knot("3_1");
    let m = homology(
        &d,
        RingTag::Fp(2),
        HomologyOptions {
            reduced: true,
            ..Default::default()
        },
    )
    .unwrap();
    assert_eq!(m.summands.len(), 3);
    assert!(m.summands.iter().all(|s| s.kind == Summand::Free));
    // Unreduced over Z: Z at (0,1), (0,3), (2,5), Z/2 at (3,7), Z at (3,9).
    let m = homology(&d, RingTag::Z, HomologyOptions::default()).unwrap();
    let mut got: Vec<(i32, i32, String)> = m
        .summands
        .iter()
        .map(|s| (s.grading.i, s.grading.q, s.kind.name(RingTag::Z)))
        .collect();
    got.sort();
    let want = [
        (0, 1, "Z"),
        (0, 3, "Z"),
        (2, 5, "Z"),
        (3, 7, "Z/2"),
        (3, 9, "Z"),
    ];
    assert_eq!(got, want.map(|(i, q, n)| (i, q, n.to_string())));
}

#[test]
fn parallel_and_sequential_cubes_agree() {
    for name in ["5_2", "8_19", "9_42"] {
        let d = knot(name);
        let a: ChainComplex<BigInt> = build_cube(
            &d,
            CubeOptions {
                mode: Mode::Parallel,
                ..Default::default()
            },
        )
        .unwrap();
        let b: ChainComplex<BigInt> = build_cube(
            &d,
            CubeOptions {
                mode: Mode::Sequential,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(a.to_json(), b.to_json(), "{name}");
    }
}
