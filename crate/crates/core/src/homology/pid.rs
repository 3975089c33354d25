use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::{GradedModule, GradedSummand, Summand};
use crate::complex::{Bigrading, ChainComplex};
use crate::exactalg::{smith_normal_form, EuclideanDomain, Field, RingTag, SparseMatrix};

/// Homology over `F[H]` (or over `F` once `H` has been set to zero) by graded
/// elimination: unit pivots first, then repeatedly the entry with the
/// smallest power of `H`. A cancelled pair `x -> y` with `H^k`, `k > 0`,
/// leaves `F[H]/(H^k)` in the bigrading of `y`; survivors are free.
pub fn homology_pid<F: Field + EuclideanDomain>(
    c: &ChainComplex<F>,
    ring: RingTag,
) -> GradedModule {
    let mut c = c.clone();
    c.gauss_eliminate();
    let mut summands = vec![];
    loop {
        let best = c.entries().map(|(s, t, _, k)| (k, s, t)).min();
        let Some((k, s, t)) = best else { break };
        if k > 0 {
            summands.push(GradedSummand {
                grading: c.grading(t),
                kind: Summand::HCyclic(k),
            });
        }
        c.cancel(s, t);
    }
    for (_, g) in c.generators() {
        summands.push(GradedSummand {
            grading: g,
            kind: Summand::Free,
        });
    }
    GradedModule::new(ring, summands)
}

/// Per homological degree: free rank and the sorted `H`-torsion exponents.
pub type SnfSummary = BTreeMap<i32, (usize, Vec<u32>)>;

impl GradedModule {
    /// Forget quantum gradings.
    pub fn snf_summary(&self) -> SnfSummary {
        let mut m: SnfSummary = BTreeMap::new();
        for s in &self.summands {
            let e = m.entry(s.grading.i).or_default();
            match s.kind {
                Summand::Free => e.0 += 1,
                Summand::HCyclic(k) => e.1.push(k),
                _ => {}
            }
        }
        for v in m.values_mut() {
            v.1.sort();
        }
        m.retain(|_, v| v.0 > 0 || !v.1.is_empty());
        m
    }
}

/// Homology over `F[H]` from the Smith form of each differential, ignoring
/// quantum gradings. Independent of the elimination in `homology_pid`.
pub fn homology_pid_snf<F: Field + EuclideanDomain>(c: &ChainComplex<F>) -> SnfSummary {
    let degrees: BTreeSet<i32> = c.degrees();
    let mut rank: BTreeMap<i32, usize> = BTreeMap::new();
    let mut torsion: BTreeMap<i32, Vec<u32>> = BTreeMap::new();
    for &i in &degrees {
        let m = c.differential_matrix(i);
        let s = smith_normal_form(&m, false);
        rank.insert(i, s.rank());
        let t: Vec<u32> = s
            .torsion()
            .iter()
            .map(|p| p.degree().expect("nonzero invariant factor") as u32)
            .collect();
        torsion.insert(i + 1, t);
    }
    let mut out = SnfSummary::new();
    for &i in &degrees {
        let n = c.generators_in_degree(i).len();
        let free =
            n - rank.get(&i).copied().unwrap_or(0) - rank.get(&(i - 1)).copied().unwrap_or(0);
        let mut t = torsion.remove(&i).unwrap_or_default();
        t.sort();
        if free > 0 || !t.is_empty() {
            out.insert(i, (free, t));
        }
    }
    out
}

/// Integral homology of a complex with `H = 0`, one quantum degree at a time.
pub fn homology_integral(c: &ChainComplex<BigInt>) -> GradedModule {
    let mut c = c.clone();
    if c.has_h() {
        c.specialize_h_zero();
    }
    let mut by_q: BTreeMap<i32, BTreeMap<i32, Vec<usize>>> = BTreeMap::new();
    for (g, b) in c.generators() {
        by_q.entry(b.q).or_default().entry(b.i).or_default().push(g);
    }
    let mut summands = vec![];
    for (&q, cols) in &by_q {
        let matrix = |i: i32| -> SparseMatrix<BigInt> {
            let empty = vec![];
            let src = cols.get(&i).unwrap_or(&empty);
            let tgt = cols.get(&(i + 1)).unwrap_or(&empty);
            let tpos: BTreeMap<usize, usize> =
                tgt.iter().enumerate().map(|(k, &g)| (g, k)).collect();
            let mut m = SparseMatrix::zeros(tgt.len(), src.len());
            for (j, &s) in src.iter().enumerate() {
                for (t, v) in c.out_entries(s) {
                    m.set(tpos[t], j, v.clone());
                }
            }
            m
        };
        for (&i, gens) in cols {
            let out = smith_normal_form(&matrix(i), false);
            let inc = smith_normal_form(&matrix(i - 1), false);
            let free = gens.len() - out.rank() - inc.rank();
            let g = Bigrading::new(i, q);
            for _ in 0..free {
                summands.push(GradedSummand {
                    grading: g,
                    kind: Summand::Free,
                });
            }
            for n in inc.torsion() {
                summands.push(GradedSummand {
                    grading: g,
                    kind: Summand::IntTorsion(n),
                });
            }
        }
    }
    GradedModule::new(RingTag::Z, summands)
}
