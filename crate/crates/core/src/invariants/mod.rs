//! Concordance and classical invariants of knot diagrams.

mod goeritz;
mod jones;
mod torus;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::exactalg::RingTag;
use crate::exec::Mode;
use crate::homology::{homology, HomologyOptions, Summand};

pub use goeritz::{
    determinant, goeritz, goeritz_with, integer_determinant, signature_gl, symmetric_signature,
    GoeritzData,
};
pub use jones::{
    determinant_from_jones, jones_at, jones_khovanov, jones_polynomial, jones_reduced, Laurent,
};
pub use torus::{torus_signature, torus_slice_torus_value, TorusKnotParams};

/// Half the quantum grading of the free summand of reduced Bar-Natan
/// homology over `ring[H]`. Over `Z[H]` the decomposition must be verified.
pub fn ss_tilde(d: &PlanarDiagram, ring: RingTag) -> Result<i64> {
    ss_tilde_with(d, ring, Mode::default())
}

pub fn ss_tilde_with(d: &PlanarDiagram, ring: RingTag, mode: Mode) -> Result<i64> {
    let n = d.component_count();
    if n != 1 {
        return Err(Error::NotAKnot(n));
    }
    let ring = ring.with_h();
    let opts = HomologyOptions {
        reduced: true,
        mode,
        ..HomologyOptions::default()
    };
    let m = homology(&d.based(), ring, opts)?;
    m.require_complete()?;
    let free: Vec<_> = m
        .summands
        .iter()
        .filter(|s| s.kind == Summand::Free)
        .collect();
    if free.len() != 1 {
        return Err(Error::FreeRank(free.len()));
    }
    let g = free[0].grading;
    if g.i != 0 || g.q % 2 != 0 {
        return Err(Error::DecompositionIncomplete(format!(
            "free summand at ({},{})",
            g.i, g.q
        )));
    }
    Ok(i64::from(g.q / 2))
}

/// Rasmussen invariant over a field: twice `ss_tilde` over `field[H]`.
pub fn rasmussen_s(d: &PlanarDiagram, field: RingTag) -> Result<i64> {
    if !field.is_field_base() {
        return Err(Error::Inapplicable(format!("{field} is not a field")));
    }
    Ok(2 * ss_tilde(d, field)?)
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct InvariantReport {
    pub label: String,
    pub crossings: usize,
    /// `None` when the `Z[H]` decomposition could not be verified.
    pub ss_tilde_h: Option<i64>,
    pub s_field: BTreeMap<String, i64>,
    pub signature: i64,
    pub determinant: u64,
    pub chirality: String,
}

impl InvariantReport {
    pub fn compute(d: &PlanarDiagram, fields: &[RingTag], mode: Mode) -> Result<Self> {
        let signature = signature_gl(d)?;
        let ss_tilde_h = match ss_tilde_with(d, RingTag::ZH, mode) {
            Ok(v) => Some(v),
            Err(Error::DecompositionIncomplete(_)) => None,
            Err(e) => return Err(e),
        };
        let mut s_field = BTreeMap::new();
        for &f in fields {
            s_field.insert(f.base().to_string(), 2 * ss_tilde_with(d, f, mode)?);
        }
        let chirality = match signature.signum() {
            1 => "sigma > 0; the mirror has sigma < 0",
            -1 => "sigma < 0",
            _ => "sigma = 0",
        };
        Ok(InvariantReport {
            label: d.name().unwrap_or("(unnamed)").to_string(),
            crossings: d.crossing_count(),
            ss_tilde_h,
            s_field,
            signature,
            determinant: determinant(d)?,
            chirality: chirality.to_string(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "knot         {}\ncrossings    {}\n",
            self.label, self.crossings
        );
        match self.ss_tilde_h {
            Some(v) => out.push_str(&format!("ss~ (Z[H])   {v}\n")),
            None => out.push_str("ss~ (Z[H])   inconclusive\n"),
        }
        for (f, s) in &self.s_field {
            out.push_str(&format!(
                "s ({f}){}{s}\n",
                " ".repeat(9usize.saturating_sub(f.len()))
            ));
        }
        out.push_str(&format!(
            "signature    {}\ndeterminant  {}\nchirality    {}\n",
            self.signature, self.determinant, self.chirality
        ));
        out
    }
}
