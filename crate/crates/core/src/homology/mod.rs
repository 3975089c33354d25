//! Homology of Bar-Natan complexes as graded modules.

mod pid;
mod zbasis;
mod zh;

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::complex::{build_cube, Bigrading, ChainComplex, CubeOptions};
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::exactalg::{Coeff, Fp, RingTag};
use crate::exec::Mode;

pub use pid::{homology_integral, homology_pid, homology_pid_snf, SnfSummary};
pub use zbasis::HomologyBasis;
pub use zh::homology_zh;

/// Indecomposable summand of a graded module over `R[H]` (or over `R` when
/// `H` is absent), generated in a given bigrading.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Summand {
    Free,
    /// `R[H]/(H^k)`
    HCyclic(u32),
    /// `Z[H]/(n)`, or `Z/n` without `H`
    IntTorsion(BigInt),
    /// `Z[H]/(n, H^k)`
    Mixed(BigInt, u32),
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GradedSummand {
    pub grading: Bigrading,
    pub kind: Summand,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    pub ring: RingTag,
    pub summands: Vec<GradedSummand>,
    /// Set when the cyclic decomposition could not be verified; the listed
    /// summands are then only the part that was identified.
    pub incomplete: Option<String>,
}

fn power(k: u32) -> String {
    if k == 1 {
        "H".into()
    } else {
        format!("H^{k}")
    }
}

impl Summand {
    pub fn name(&self, ring: RingTag) -> String {
        let r = ring.to_string();
        match self {
            Summand::Free => r,
            Summand::HCyclic(k) => format!("{r}/({})", power(*k)),
            Summand::IntTorsion(n) => {
                if ring.has_h() {
                    format!("{r}/({n})")
                } else {
                    format!("{r}/{n}")
                }
            }
            Summand::Mixed(n, k) => format!("{r}/({n},{})", power(*k)),
        }
    }
}

#[derive(Serialize)]
struct JsonSummand {
    i: i32,
    q: i32,
    kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    h_order: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    int_order: Option<String>,
    name: String,
}

#[derive(Serialize)]
struct JsonModule {
    ring: String,
    complete: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<String>,
    summands: Vec<JsonSummand>,
}

impl GradedModule {
    pub fn new(ring: RingTag, mut summands: Vec<GradedSummand>) -> Self {
        summands.sort();
        GradedModule {
            ring,
            summands,
            incomplete: None,
        }
    }

    pub fn is_complete(&self) -> bool {
        self.incomplete.is_none()
    }

    /// Fail with `DecompositionIncomplete` unless the decomposition was verified.
    pub fn require_complete(&self) -> Result<&Self> {
        match &self.incomplete {
            None => Ok(self),
            Some(m) => Err(Error::DecompositionIncomplete(m.clone())),
        }
    }

    pub fn free_part_bigradings(&self) -> Vec<Bigrading> {
        self.summands
            .iter()
            .filter(|s| s.kind == Summand::Free)
            .map(|s| s.grading)
            .collect()
    }

    /// Count of summands by bigrading and name.
    pub fn table(&self) -> BTreeMap<(i32, i32), BTreeMap<String, usize>> {
        let mut t: BTreeMap<(i32, i32), BTreeMap<String, usize>> = BTreeMap::new();
        for s in &self.summands {
            *t.entry((s.grading.i, s.grading.q))
                .or_default()
                .entry(s.kind.name(self.ring))
                .or_default() += 1;
        }
        t
    }

    fn cell(&self, i: i32, q: i32) -> String {
        match self.table().get(&(i, q)) {
            None => ".".into(),
            Some(m) => m
                .iter()
                .map(|(n, &c)| {
                    if c == 1 {
                        n.clone()
                    } else {
                        format!("{n}^{c}")
                    }
                })
                .collect::<Vec<_>>()
                .join("+"),
        }
    }

    /// Grid with one row per quantum degree (descending) and one column per
    /// homological degree; empty cells are `.`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if self.summands.is_empty() {
            out.push_str("(zero module)\n");
            return out;
        }
        let imin = self.summands.iter().map(|s| s.grading.i).min().unwrap_or(0);
        let imax = self.summands.iter().map(|s| s.grading.i).max().unwrap_or(0);
        let qmin = self.summands.iter().map(|s| s.grading.q).min().unwrap_or(0);
        let qmax = self.summands.iter().map(|s| s.grading.q).max().unwrap_or(0);
        let mut rows: Vec<Vec<String>> = vec![];
        let mut header = vec!["q\\i".to_string()];
        header.extend((imin..=imax).map(|i| i.to_string()));
        rows.push(header);
        let mut q = qmax;
        while q >= qmin {
            let mut r = vec![q.to_string()];
            r.extend((imin..=imax).map(|i| self.cell(i, q)));
            rows.push(r);
            q -= 1;
        }
        let ncol = rows[0].len();
        let width: Vec<usize> = (0..ncol)
            .map(|c| rows.iter().map(|r| r[c].chars().count()).max().unwrap_or(1))
            .collect();
        for r in &rows {
            let line: Vec<String> = r
                .iter()
                .zip(&width)
                .map(|(s, &w)| format!("{s:>w$}"))
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        if let Some(m) = &self.incomplete {
            let _ = writeln!(out, "warning: decomposition incomplete: {m}");
        }
        out
    }

    pub fn to_json(&self) -> String {
        let j = JsonModule {
            ring: self.ring.to_string(),
            complete: self.is_complete(),
            note: self.incomplete.clone(),
            summands: self
                .summands
                .iter()
                .map(|s| {
                    let (kind, h, n) = match &s.kind {
                        Summand::Free => ("free", None, None),
                        Summand::HCyclic(k) => ("h_torsion", Some(*k), None),
                        Summand::IntTorsion(n) => ("int_torsion", None, Some(n.to_string())),
                        Summand::Mixed(n, k) => ("mixed", Some(*k), Some(n.to_string())),
                    };
                    JsonSummand {
                        i: s.grading.i,
                        q: s.grading.q,
                        kind,
                        h_order: h,
                        int_order: n,
                        name: s.kind.name(self.ring),
                    }
                })
                .collect(),
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }
}

/// Options for computing homology straight from a diagram.
#[derive(Clone, Copy, Debug)]
pub struct HomologyOptions {
    pub reduced: bool,
    pub crossing_limit: usize,
    pub mode: Mode,
}

impl Default for HomologyOptions {
    fn default() -> Self {
        let c = CubeOptions::default();
        HomologyOptions {
            reduced: false,
            crossing_limit: c.crossing_limit,
            mode: c.mode,
        }
    }
}

impl HomologyOptions {
    fn cube(self) -> CubeOptions {
        CubeOptions {
            reduced: self.reduced,
            crossing_limit: self.crossing_limit,
            mode: self.mode,
        }
    }
}

/// Build, simplify and compute homology over the given ring.
pub fn homology(d: &PlanarDiagram, ring: RingTag, opts: HomologyOptions) -> Result<GradedModule> {
    match ring {
        RingTag::ZH => {
            let mut c: ChainComplex<BigInt> = build_cube(d, opts.cube())?;
            c.gauss_eliminate();
            homology_zh(&c.compact())
        }
        RingTag::Z => {
            let mut c: ChainComplex<BigInt> = build_cube(d, opts.cube())?;
            c.specialize_h_zero();
            c.gauss_eliminate();
            Ok(homology_integral(&c.compact()))
        }
        RingTag::Q | RingTag::QH => field_homology::<BigRational>(d, ring, opts),
        RingTag::Fp(p) | RingTag::FpH(p) => match p {
            2 => field_homology::<Fp<2>>(d, ring, opts),
            3 => field_homology::<Fp<3>>(d, ring, opts),
            5 => field_homology::<Fp<5>>(d, ring, opts),
            7 => field_homology::<Fp<7>>(d, ring, opts),
            _ => Err(Error::InvalidArgument(format!("unsupported prime {p}"))),
        },
    }
}

fn field_homology<F>(
    d: &PlanarDiagram,
    ring: RingTag,
    opts: HomologyOptions,
) -> Result<GradedModule>
where
    F: Coeff + crate::exactalg::Field + crate::exactalg::EuclideanDomain,
{
    let mut c: ChainComplex<F> = build_cube(d, opts.cube())?;
    if !ring.has_h() {
        c.specialize_h_zero();
    }
    Ok(homology_pid(&c, ring))
}

/// Simplified complex over the given ring (for dumps); entries with `H` are
/// dropped for rings without `H`.
pub fn simplified_complex_json(
    d: &PlanarDiagram,
    ring: RingTag,
    opts: HomologyOptions,
    simplify: bool,
) -> Result<String> {
    fn go<R: Coeff>(
        d: &PlanarDiagram,
        ring: RingTag,
        opts: HomologyOptions,
        simplify: bool,
    ) -> Result<String> {
        let mut c: ChainComplex<R> = build_cube(d, opts.cube())?;
        if !ring.has_h() {
            c.specialize_h_zero();
        }
        if simplify {
            c.gauss_eliminate();
        }
        Ok(c.to_json())
    }
    match ring.base() {
        RingTag::Z => go::<BigInt>(d, ring, opts, simplify),
        RingTag::Q => go::<BigRational>(d, ring, opts, simplify),
        RingTag::Fp(2) => go::<Fp<2>>(d, ring, opts, simplify),
        RingTag::Fp(3) => go::<Fp<3>>(d, ring, opts, simplify),
        RingTag::Fp(5) => go::<Fp<5>>(d, ring, opts, simplify),
        RingTag::Fp(7) => go::<Fp<7>>(d, ring, opts, simplify),
        other => Err(Error::InvalidArgument(format!("unsupported ring {other}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn summand_names() {
        assert_eq!(Summand::Free.name(RingTag::ZH), "Z[H]");
        assert_eq!(Summand::HCyclic(1).name(RingTag::ZH), "Z[H]/(H)");
        assert_eq!(Summand::HCyclic(3).name(RingTag::QH), "Q[H]/(H^3)");
        assert_eq!(
            Summand::IntTorsion(BigInt::from(2)).name(RingTag::ZH),
            "Z[H]/(2)"
        );
        assert_eq!(Summand::IntTorsion(BigInt::from(2)).name(RingTag::Z), "Z/2");
        assert_eq!(
            Summand::Mixed(BigInt::from(2), 2).name(RingTag::ZH),
            "Z[H]/(2,H^2)"
        );
        assert_eq!(Summand::Free.name(RingTag::FpH(3)), "F3[H]");
    }
}
