use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;
use slicetorus::catalog::{derive_all, lookup, shipped_catalog, Evidence};
use slicetorus::complex::{build_cube, ChainComplex, CubeOptions};
use slicetorus::exec::Mode;
use slicetorus::invariants::jones_khovanov;

const MODES: [(&str, Mode); 2] = [
    ("sequential", Mode::Sequential),
    ("parallel", Mode::Parallel),
];

fn jones(c: &mut Criterion) {
    let mut g = c.benchmark_group("jones_state_sum");
    for name in ["9_42", "10_132"] {
        let d = lookup(name).unwrap();
        for (label, mode) in MODES {
            g.bench_with_input(BenchmarkId::new(label, name), &d, |b, d| {
                b.iter(|| jones_khovanov(d, mode))
            });
        }
    }
    g.finish();
}

fn cube(c: &mut Criterion) {
    let mut g = c.benchmark_group("cube_build");
    g.sample_size(20);
    for name in ["8_19", "9_42", "10_132"] {
        let d = lookup(name).unwrap();
        for (label, mode) in MODES {
            let opts = CubeOptions {
                mode,
                ..Default::default()
            };
            g.bench_with_input(BenchmarkId::new(label, name), &d, |b, d| {
                b.iter(|| {
                    build_cube::<BigInt>(d, opts)
                        .map(|c: ChainComplex<BigInt>| c.len())
                        .unwrap()
                })
            });
        }
    }
    g.finish();
}

fn catalog(c: &mut Criterion) {
    let mut g = c.benchmark_group("catalog_derive");
    let entries = shipped_catalog();
    let ev = Evidence::shipped().unwrap();
    for (label, mode) in MODES {
        g.bench_function(label, |b| b.iter(|| derive_all(&entries, &ev, mode)));
    }
    g.finish();
}

criterion_group!(benches, jones, cube, catalog);
criterion_main!(benches);
