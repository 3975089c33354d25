//! Homology over `Z[H]`, which is not a principal ideal domain.
//!
//! A graded `Z[H]`-module `M` is the sequence of abelian groups `M_j`
//! (quantum degree `j`) linked by `H: M_j -> M_{j-2}`. For the complex the
//! degree-`j` part in homological degree `i` is spanned by `H^m g` with
//! `q(g) - 2m = j`, so every slice is a finite complex over `Z` whose basis
//! grows as `j` decreases and `H` is the inclusion of bases. Below the
//! lowest generator the slices stabilise and `H` is the identity. The
//! summands are read off from the persistence of classes along `H`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{GradedModule, GradedSummand, HomologyBasis, Summand};
use crate::complex::{Bigrading, ChainComplex};
use crate::error::{Error, Result};
use crate::exactalg::{smith_normal_form, RingTag, SparseMatrix};

struct Level {
    q: i32,
    gens: Vec<usize>,
    basis: HomologyBasis<BigInt>,
}

pub fn homology_zh(c: &ChainComplex<BigInt>) -> Result<GradedModule> {
    if !c.has_h() {
        return Err(Error::InvalidArgument("complex has H set to zero".into()));
    }
    let mut summands = vec![];
    let mut problems: Vec<String> = vec![];
    let degrees = c.degrees();
    for &i in &degrees {
        let parities: BTreeSet<i32> = c
            .generators()
            .filter(|(_, g)| g.i == i)
            .map(|(_, g)| g.q.rem_euclid(2))
            .collect();
        for par in parities {
            let (found, mut issues) = degree_summands(c, i, par);
            summands.extend(found);
            problems.append(&mut issues);
        }
    }
    let mut m = GradedModule::new(RingTag::ZH, summands);
    if !problems.is_empty() {
        m.incomplete = Some(problems.join("; "));
    }
    Ok(m)
}

fn slice(c: &ChainComplex<BigInt>, i: i32, par: i32, j: i32) -> Vec<usize> {
    c.generators()
        .filter(|(_, g)| g.i == i && g.q >= j && g.q.rem_euclid(2) == par)
        .map(|(x, _)| x)
        .collect()
}

fn slice_matrix(c: &ChainComplex<BigInt>, src: &[usize], tgt: &[usize]) -> SparseMatrix<BigInt> {
    let tpos: BTreeMap<usize, usize> = tgt.iter().enumerate().map(|(k, &g)| (g, k)).collect();
    let mut m = SparseMatrix::zeros(tgt.len(), src.len());
    for (col, &s) in src.iter().enumerate() {
        for (t, v) in c.out_entries(s) {
            if let Some(&row) = tpos.get(t) {
                m.set(row, col, v.clone());
            }
        }
    }
    m
}

fn degree_summands(
    c: &ChainComplex<BigInt>,
    i: i32,
    par: i32,
) -> (Vec<GradedSummand>, Vec<String>) {
    let mut issues = vec![];
    let qs = |d: i32| -> Vec<i32> {
        c.generators()
            .filter(|(_, g)| g.i == d && g.q.rem_euclid(2) == par)
            .map(|(_, g)| g.q)
            .collect()
    };
    let top = *qs(i).iter().max().expect("degree has generators");
    let bottom = [i - 1, i, i + 1]
        .iter()
        .flat_map(|&d| qs(d))
        .min()
        .expect("nonempty")
        - 4;

    let mut levels: Vec<Level> = vec![];
    let mut j = top;
    while j >= bottom {
        let gens = slice(c, i, par, j);
        let prev = slice(c, i - 1, par, j);
        let next = slice(c, i + 1, par, j);
        let basis = HomologyBasis::new(
            &slice_matrix(c, &prev, &gens),
            &slice_matrix(c, &gens, &next),
        );
        levels.push(Level { q: j, gens, basis });
        j -= 2;
    }
    let nl = levels.len();

    // H maps between consecutive levels in homology coordinates
    let maps: Vec<SparseMatrix<BigInt>> = (0..nl - 1)
        .map(|t| {
            let (a, b) = (&levels[t], &levels[t + 1]);
            let pos: BTreeMap<usize, usize> =
                b.gens.iter().enumerate().map(|(k, &g)| (g, k)).collect();
            let mut m = SparseMatrix::zeros(b.basis.len(), a.basis.len());
            for (col, rep) in a.basis.reps.iter().enumerate() {
                let mut v = vec![BigInt::zero(); b.gens.len()];
                for (k, x) in rep.iter().enumerate() {
                    v[pos[&a.gens[k]]] = x.clone();
                }
                for (row, y) in b.basis.coords(&v).into_iter().enumerate() {
                    m.set(row, col, y);
                }
            }
            m
        })
        .collect();

    let free_idx: Vec<Vec<usize>> = levels
        .iter()
        .map(|l| {
            (0..l.basis.len())
                .filter(|&k| l.basis.orders[k].is_zero())
                .collect()
        })
        .collect();
    let tors_idx: Vec<BTreeMap<BigInt, Vec<usize>>> = levels
        .iter()
        .map(|l| {
            let mut m: BTreeMap<BigInt, Vec<usize>> = BTreeMap::new();
            for (k, o) in l.basis.orders.iter().enumerate() {
                if !o.is_zero() {
                    m.entry(o.clone()).or_default().push(k);
                }
            }
            m
        })
        .collect();

    for t in 0..nl - 1 {
        let all_t: Vec<usize> = tors_idx[t + 1].values().flatten().copied().collect();
        if !maps[t].submatrix(&all_t, &free_idx[t]).is_zero() {
            issues.push(format!(
                "free class maps into torsion at ({i},{})",
                levels[t].q
            ));
        }
        for (n, rows) in &tors_idx[t + 1] {
            for (m, cols) in &tors_idx[t] {
                if n != m && !maps[t].submatrix(rows, cols).is_zero() {
                    issues.push(format!(
                        "torsion orders {m} and {n} mix at ({i},{})",
                        levels[t].q
                    ));
                }
            }
        }
    }

    let composite =
        |s: usize, t: usize, rows: &dyn Fn(usize) -> Vec<usize>| -> SparseMatrix<BigInt> {
            let mut m = SparseMatrix::identity(rows(s).len());
            for u in s..t {
                let step = maps[u].submatrix(&rows(u + 1), &rows(u));
                m = step.mul(&m);
            }
            m
        };

    let mut out = vec![];
    let grading = |s: usize| Bigrading::new(i, levels[s].q);

    // free part
    let free_rows = |t: usize| free_idx[t].clone();
    let mut rho = vec![vec![0usize; nl]; nl];
    for s in 0..nl {
        for t in s..nl {
            let m = composite(s, t, &free_rows);
            let snf = smith_normal_form(&m, false);
            if snf.invariant_factors().iter().any(|d| !d.is_one()) {
                issues.push(format!(
                    "H is not saturated on free classes at ({i},{})",
                    levels[s].q
                ));
            }
            rho[s][t] = snf.rank();
        }
    }
    let r = |s: isize, t: usize| -> isize {
        if s < 0 || t >= nl {
            0
        } else {
            rho[s as usize][t] as isize
        }
    };
    let mut free_cover = vec![0isize; nl];
    for s in 0..nl {
        for t in s..nl {
            let si = s as isize;
            let b = if t == nl - 1 {
                r(si, t) - r(si - 1, t)
            } else {
                r(si, t) - r(si - 1, t) - r(si, t + 1) + r(si - 1, t + 1)
            };
            if b < 0 {
                issues.push(format!("negative bar count at ({i},{})", levels[s].q));
                continue;
            }
            for u in s..=t {
                free_cover[u] += b;
            }
            let kind = if t == nl - 1 {
                Summand::Free
            } else {
                Summand::HCyclic((t - s + 1) as u32)
            };
            for _ in 0..b {
                out.push(GradedSummand {
                    grading: grading(s),
                    kind: kind.clone(),
                });
            }
        }
    }
    for t in 0..nl {
        if free_cover[t] != free_idx[t].len() as isize {
            issues.push(format!(
                "free ranks not reproduced at ({i},{})",
                levels[t].q
            ));
        }
    }
    if nl >= 2 && rho[nl - 2][nl - 1] != free_idx[nl - 1].len() {
        issues.push(format!("free part did not stabilise in degree {i}"));
    }

    // torsion part, one order at a time
    let orders: BTreeSet<BigInt> = tors_idx.iter().flat_map(|m| m.keys().cloned()).collect();
    for n in orders {
        let rows = |t: usize| tors_idx[t].get(&n).cloned().unwrap_or_default();
        let mut rho = vec![vec![0usize; nl]; nl];
        for s in 0..nl {
            for t in s..nl {
                let m = composite(s, t, &rows);
                match rank_mod(&m, &n) {
                    Some(k) => rho[s][t] = k,
                    None => issues.push(format!(
                        "Z/{n} classes are not cyclic under H at ({i},{})",
                        levels[s].q
                    )),
                }
            }
        }
        let r = |s: isize, t: usize| -> isize {
            if s < 0 || t >= nl {
                0
            } else {
                rho[s as usize][t] as isize
            }
        };
        let mut cover = vec![0isize; nl];
        for s in 0..nl {
            for t in s..nl {
                let si = s as isize;
                let b = if t == nl - 1 {
                    r(si, t) - r(si - 1, t)
                } else {
                    r(si, t) - r(si - 1, t) - r(si, t + 1) + r(si - 1, t + 1)
                };
                if b < 0 {
                    issues.push(format!(
                        "negative torsion bar count at ({i},{})",
                        levels[s].q
                    ));
                    continue;
                }
                for u in s..=t {
                    cover[u] += b;
                }
                let kind = if t == nl - 1 {
                    Summand::IntTorsion(n.clone())
                } else {
                    Summand::Mixed(n.clone(), (t - s + 1) as u32)
                };
                for _ in 0..b {
                    out.push(GradedSummand {
                        grading: grading(s),
                        kind: kind.clone(),
                    });
                }
            }
        }
        for t in 0..nl {
            if cover[t] != rows(t).len() as isize {
                issues.push(format!(
                    "Z/{n} counts not reproduced at ({i},{})",
                    levels[t].q
                ));
            }
        }
    }
    (out, issues)
}

/// Rank of an integer matrix read modulo `n`, when its Smith form over
/// `Z/n` has only unit and zero entries; `None` otherwise.
fn rank_mod(m: &SparseMatrix<BigInt>, n: &BigInt) -> Option<usize> {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut aug = SparseMatrix::zeros(rows, cols + rows);
    for (i, j, v) in m.entries() {
        aug.set(i, j, v.clone());
    }
    for i in 0..rows {
        aug.set(i, cols + i, n.clone());
    }
    let mut rank = 0;
    for d in smith_normal_form(&aug, false).invariant_factors() {
        let g = d.gcd(n);
        if g.is_one() {
            rank += 1;
        } else if &g != n {
            return None;
        }
    }
    Some(rank)
}
