//! Bigraded chain complexes over `R[H]` built from the cube of resolutions.
//!
//! Every differential entry between homogeneous generators is a monomial
//! `c * H^k`; only `c` is stored, `k = (q_target - q_source) / 2` follows
//! from the gradings.

mod cube;
mod frobenius;

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::{Coeff, Poly, SparseMatrix};

pub use cube::{build_cube, CubeOptions, DEFAULT_CROSSING_LIMIT};
pub use frobenius::{Frobenius, Label, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bigrading {
    pub i: i32,
    pub q: i32,
}

impl Bigrading {
    pub fn new(i: i32, q: i32) -> Self {
        Bigrading { i, q }
    }
}

/// Chain complex of free `R[H]`-modules (or `R`-modules once `H` is set to 0).
#[derive(Clone, Debug)]
pub struct ChainComplex<R: Coeff> {
    gens: Vec<Bigrading>,
    alive: Vec<bool>,
    out: Vec<BTreeMap<usize, R>>,
    inc: Vec<BTreeSet<usize>>,
    has_h: bool,
}

#[derive(Serialize, Deserialize)]
struct DumpGen {
    i: i32,
    q: i32,
}

#[derive(Serialize, Deserialize)]
struct DumpEntry {
    from: usize,
    to: usize,
    coeff: String,
    hpow: u32,
}

#[derive(Serialize, Deserialize)]
struct Dump {
    generators: Vec<DumpGen>,
    differentials: Vec<DumpEntry>,
}

impl<R: Coeff> ChainComplex<R> {
    pub fn new(gens: Vec<Bigrading>) -> Self {
        let n = gens.len();
        ChainComplex {
            gens,
            alive: vec![true; n],
            out: vec![BTreeMap::new(); n],
            inc: vec![BTreeSet::new(); n],
            has_h: true,
        }
    }

    /// Whether entries with positive `H` power are kept.
    pub fn has_h(&self) -> bool {
        self.has_h
    }

    pub fn hpow(&self, s: usize, t: usize) -> u32 {
        ((self.gens[t].q - self.gens[s].q) / 2) as u32
    }

    fn check_entry(&self, s: usize, t: usize) -> Result<()> {
        let (a, b) = (self.gens[s], self.gens[t]);
        let dq = b.q - a.q;
        if b.i != a.i + 1 || dq < 0 || dq % 2 != 0 {
            return Err(Error::NonHomogeneous(format!(
                "entry {s}->{t} from ({},{}) to ({},{})",
                a.i, a.q, b.i, b.q
            )));
        }
        Ok(())
    }

    /// Add `c * H^k` (with `k` implied) to the entry `s -> t`.
    pub fn add_entry(&mut self, s: usize, t: usize, c: R) -> Result<()> {
        self.check_entry(s, t)?;
        if !self.has_h && self.gens[t].q != self.gens[s].q {
            return Ok(());
        }
        let cur = self.out[s].get(&t).cloned().unwrap_or_else(R::zero);
        let v = cur + c;
        if v.is_zero() {
            self.out[s].remove(&t);
            self.inc[t].remove(&s);
        } else {
            self.out[s].insert(t, v);
            self.inc[t].insert(s);
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.alive.iter().filter(|&&a| a).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Live generators with their index.
    pub fn generators(&self) -> impl Iterator<Item = (usize, Bigrading)> + '_ {
        (0..self.gens.len())
            .filter(|&g| self.alive[g])
            .map(|g| (g, self.gens[g]))
    }

    pub fn grading(&self, g: usize) -> Bigrading {
        self.gens[g]
    }

    pub fn out_entries(&self, s: usize) -> &BTreeMap<usize, R> {
        &self.out[s]
    }

    pub fn in_entries(&self, t: usize) -> &BTreeSet<usize> {
        &self.inc[t]
    }

    /// `(source, target, coefficient, H power)`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R, u32)> + '_ {
        self.generators().flat_map(move |(s, _)| {
            self.out[s]
                .iter()
                .map(move |(&t, c)| (s, t, c, self.hpow(s, t)))
        })
    }

    pub fn entry_count(&self) -> usize {
        self.generators().map(|(s, _)| self.out[s].len()).sum()
    }

    /// Set `H = 0`: drop every entry with a positive power of `H`.
    pub fn specialize_h_zero(&mut self) {
        self.has_h = false;
        for s in 0..self.gens.len() {
            let q = self.gens[s].q;
            let drop: Vec<usize> = self.out[s]
                .keys()
                .copied()
                .filter(|&t| self.gens[t].q != q)
                .collect();
            for t in drop {
                self.out[s].remove(&t);
                self.inc[t].remove(&s);
            }
        }
    }

    /// Renumber live generators consecutively (in index order).
    pub fn compact(&self) -> Self {
        let ids: Vec<usize> = self.generators().map(|(g, _)| g).collect();
        let pos: BTreeMap<usize, usize> = ids.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let mut c = ChainComplex::new(ids.iter().map(|&g| self.gens[g]).collect());
        c.has_h = self.has_h;
        for &s in &ids {
            for (t, v) in &self.out[s] {
                c.out[pos[&s]].insert(pos[t], v.clone());
                c.inc[pos[t]].insert(pos[&s]);
            }
        }
        c
    }

    /// Every entry raises `i` by one and keeps `q` (counting `H` powers).
    pub fn check_homogeneous(&self) -> Result<()> {
        for (s, t, _, _) in self.entries() {
            self.check_entry(s, t)?;
        }
        Ok(())
    }

    /// `d ∘ d = 0`.
    pub fn check_d_squared(&self) -> Result<()> {
        for (s, _) in self.generators() {
            let mut acc: BTreeMap<usize, R> = BTreeMap::new();
            for (&m, a) in &self.out[s] {
                for (&t, b) in &self.out[m] {
                    let e = acc.entry(t).or_insert_with(R::zero);
                    *e = e.clone() + a.clone() * b.clone();
                }
            }
            if let Some((t, _)) = acc.iter().find(|(_, v)| !v.is_zero()) {
                return Err(Error::NonHomogeneous(format!(
                    "d^2 is nonzero from {s} to {t}"
                )));
            }
        }
        Ok(())
    }

    /// Graded Euler characteristic `Σ (-1)^i q^{q}` over the generators,
    /// as `q -> coefficient`.
    pub fn euler_characteristic(&self) -> BTreeMap<i32, i64> {
        let mut m: BTreeMap<i32, i64> = BTreeMap::new();
        for (_, g) in self.generators() {
            *m.entry(g.q).or_default() += if g.i.rem_euclid(2) == 0 { 1 } else { -1 };
        }
        m.retain(|_, v| *v != 0);
        m
    }

    /// Cancel every differential entry that is a unit times `H^0`,
    /// repeatedly, with the zigzag correction `d(w) -= b u^{-1} c`.
    /// The result is chain homotopy equivalent to the input.
    pub fn gauss_eliminate(&mut self) {
        loop {
            let mut progress = false;
            for x in 0..self.gens.len() {
                if !self.alive[x] {
                    continue;
                }
                let best = self.out[x]
                    .iter()
                    .filter(|(&y, u)| self.gens[y].q == self.gens[x].q && u.is_unit())
                    .map(|(&y, _)| {
                        let cost = self.inc[y].len().saturating_sub(1)
                            * self.out[x].len().saturating_sub(1);
                        (cost, y)
                    })
                    .min();
                if let Some((_, y)) = best {
                    self.cancel(x, y);
                    progress = true;
                }
            }
            if !progress {
                break;
            }
        }
    }

    pub(crate) fn cancel(&mut self, x: usize, y: usize) {
        let u_inv = self.out[x][&y].unit_inv().expect("unit pivot");
        let sources: Vec<(usize, R)> = self.inc[y]
            .iter()
            .filter(|&&w| w != x)
            .map(|&w| (w, self.out[w][&y].clone()))
            .collect();
        let targets: Vec<(usize, R)> = self.out[x]
            .iter()
            .filter(|(&z, _)| z != y)
            .map(|(&z, c)| (z, c.clone()))
            .collect();
        for (w, b) in &sources {
            let f = b.clone() * u_inv.clone();
            for (z, c) in &targets {
                let delta = -(f.clone() * c.clone());
                let cur = self.out[*w].get(z).cloned().unwrap_or_else(R::zero);
                let v = cur + delta;
                if v.is_zero() {
                    self.out[*w].remove(z);
                    self.inc[*z].remove(w);
                } else {
                    self.out[*w].insert(*z, v);
                    self.inc[*z].insert(*w);
                }
            }
        }
        for g in [x, y] {
            for t in std::mem::take(&mut self.out[g]) {
                self.inc[t.0].remove(&g);
            }
            for s in std::mem::take(&mut self.inc[g]) {
                self.out[s].remove(&g);
            }
            self.alive[g] = false;
        }
    }

    /// Live generators in homological degree `i`, in index order.
    pub fn generators_in_degree(&self, i: i32) -> Vec<usize> {
        self.generators()
            .filter(|(_, g)| g.i == i)
            .map(|(x, _)| x)
            .collect()
    }

    pub fn degrees(&self) -> BTreeSet<i32> {
        self.generators().map(|(_, g)| g.i).collect()
    }

    /// Matrix of `d: C_i -> C_{i+1}` over `R[H]` (rows: targets, columns:
    /// sources, both in index order).
    pub fn differential_matrix(&self, i: i32) -> SparseMatrix<Poly<R>> {
        let src = self.generators_in_degree(i);
        let tgt = self.generators_in_degree(i + 1);
        let tpos: BTreeMap<usize, usize> = tgt.iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let mut m = SparseMatrix::zeros(tgt.len(), src.len());
        for (col, &s) in src.iter().enumerate() {
            for (t, c) in &self.out[s] {
                m.set(
                    tpos[t],
                    col,
                    Poly::monomial(c.clone(), self.hpow(s, *t) as usize),
                );
            }
        }
        m
    }

    pub fn to_json(&self) -> String {
        let c = self.compact();
        let dump = Dump {
            generators: c.gens.iter().map(|g| DumpGen { i: g.i, q: g.q }).collect(),
            differentials: c
                .entries()
                .map(|(s, t, v, k)| DumpEntry {
                    from: s,
                    to: t,
                    coeff: v.to_string(),
                    hpow: k,
                })
                .collect(),
        };
        serde_json::to_string_pretty(&dump).expect("serializable")
    }

    /// Parse a dump produced by `to_json`; coefficients are read as integers.
    pub fn from_json(text: &str) -> Result<Self> {
        let d: Dump = serde_json::from_str(text)?;
        let mut c = ChainComplex::new(
            d.generators
                .iter()
                .map(|g| Bigrading::new(g.i, g.q))
                .collect(),
        );
        for e in d.differentials {
            let n = c.gens.len();
            if e.from >= n || e.to >= n {
                return Err(Error::Syntax(format!(
                    "entry {}->{} out of range",
                    e.from, e.to
                )));
            }
            let v: i64 = e
                .coeff
                .parse()
                .map_err(|_| Error::Syntax(format!("bad coefficient {:?}", e.coeff)))?;
            if c.hpow(e.from, e.to) != e.hpow {
                return Err(Error::NonHomogeneous(format!("entry {}->{}", e.from, e.to)));
            }
            c.add_entry(e.from, e.to, R::from_i64(v))?;
        }
        Ok(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn cancel_keeps_zigzag() {
        // a -> x (1), a -> z (1), w -> x ... build w -> y, x -> y (unit), x -> z
        // gens: 0:w(i=0) 1:x(i=0) 2:y(i=1) 3:z(i=1)
        let g = |i, q| Bigrading::new(i, q);
        let mut c: ChainComplex<BigInt> =
            ChainComplex::new(vec![g(0, 0), g(0, 0), g(1, 0), g(1, 2)]);
        c.add_entry(0, 2, BigInt::from(2)).unwrap();
        c.add_entry(1, 2, BigInt::from(1)).unwrap();
        c.add_entry(1, 3, BigInt::from(3)).unwrap();
        c.gauss_eliminate();
        let c = c.compact();
        assert_eq!(c.len(), 2);
        // d(w) = -2 * 3 H z
        let e: Vec<_> = c
            .entries()
            .map(|(s, t, v, k)| (s, t, v.clone(), k))
            .collect();
        assert_eq!(e, vec![(0, 1, BigInt::from(-6), 1)]);
        assert!(c.add_entry_checked_fails());
    }

    impl ChainComplex<BigInt> {
        fn add_entry_checked_fails(&self) -> bool {
            let mut c = self.clone();
            c.add_entry(1, 0, BigInt::from(1)).is_err()
        }
    }
}
