use std::collections::BTreeMap;
use std::fmt;

use super::CatalogEntry;
use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::exec::{self, Mode};
use crate::lspace::{verify_lspace_tree, LSpaceVerdict, ResolutionTree};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DerivedValue {
    Exact(i64),
    /// Closed interval, `lo < hi`.
    Interval(i64, i64),
    Unknown,
}

impl DerivedValue {
    fn from_bounds(lo: i64, hi: i64) -> Self {
        if lo == hi {
            DerivedValue::Exact(lo)
        } else {
            DerivedValue::Interval(lo, hi)
        }
    }

    pub fn exact(&self) -> Option<i64> {
        match self {
            DerivedValue::Exact(v) => Some(*v),
            _ => None,
        }
    }

    pub fn bounds(&self) -> Option<(i64, i64)> {
        match *self {
            DerivedValue::Exact(v) => Some((v, v)),
            DerivedValue::Interval(a, b) => Some((a, b)),
            DerivedValue::Unknown => None,
        }
    }
}

impl fmt::Display for DerivedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DerivedValue::Exact(v) => write!(f, "{v}"),
            DerivedValue::Interval(a, b) => write!(f, "[{a},{b}]"),
            DerivedValue::Unknown => write!(f, "?"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    pub name: String,
    /// `-sigma/2` in the chirality with `sigma <= 0`.
    pub neg_sigma_half: i64,
    pub g4: i64,
    pub q_m: DerivedValue,
    pub theta: DerivedValue,
    /// Rules that fixed or bounded the values, in the order applied.
    pub provenance: Vec<String>,
}

/// Verified L-space verdicts for branched double covers, by knot name,
/// together with the root diagram they were checked on.
#[derive(Clone, Debug, Default)]
pub struct Evidence {
    verdicts: BTreeMap<String, (PlanarDiagram, LSpaceVerdict)>,
}

impl Evidence {
    pub fn none() -> Self {
        Evidence::default()
    }

    /// The verdict from the shipped resolution tree for 9_42.
    pub fn shipped() -> Result<Self> {
        let mut e = Evidence::default();
        e.add_tree(&ResolutionTree::from_json(super::PROP_TREE_9_42)?)?;
        Ok(e)
    }

    /// Verify a tree and record its verdict under the root's name.
    pub fn add_tree(&mut self, t: &ResolutionTree) -> Result<&LSpaceVerdict> {
        let name = t
            .diagram
            .name()
            .ok_or_else(|| Error::InvalidArgument("resolution tree root needs a name".into()))?
            .to_string();
        let v = verify_lspace_tree(t)?;
        self.verdicts.insert(name.clone(), (t.diagram.clone(), v));
        Ok(&self.verdicts[&name].1)
    }

    /// Verdict for an entry, if the recorded root is the entry's knot
    /// diagram up to relabelling, orientation and mirroring.
    pub fn for_entry(&self, e: &CatalogEntry) -> Option<&LSpaceVerdict> {
        let (root, v) = self.verdicts.get(&e.name)?;
        let d = e.diagram().ok()?;
        let key = root.canonical_key();
        let candidates = [d.clone(), d.mirror()];
        let hit = candidates.iter().any(|c| {
            c.canonical_key() == key
                || c.reverse_components(&[0])
                    .is_ok_and(|r| r.canonical_key() == key)
        });
        hit.then_some(v)
    }
}

struct Bounds {
    q: (i64, i64),
    t: (i64, i64),
    prov: Vec<String>,
}

impl Bounds {
    fn fix(&mut self, name: &str, value: i64, rule: &str) -> Result<()> {
        for (what, b) in [("q_M", self.q), ("theta", self.t)] {
            if value < b.0 || value > b.1 {
                return Err(Error::Contradiction {
                    name: name.into(),
                    msg: format!(
                        "{rule} gives {value}, outside the range [{}, {}] for {what}",
                        b.0, b.1
                    ),
                });
            }
        }
        self.q = (value, value);
        self.t = (value, value);
        self.prov.push(format!("{rule}: q_M = theta = {value}"));
        Ok(())
    }
}

/// Apply the rules to one entry: slice gives 0; quasipositive gives `g4`;
/// quasi-alternating or an L-space branched cover gives `-sigma/2`;
/// otherwise `-sigma/2 <= theta <= g4` and `-g4 <= q_M <= theta`.
pub fn derive(e: &CatalogEntry, evidence: Option<&LSpaceVerdict>) -> Result<Derivation> {
    let ns = e.signature.abs() / 2;
    let mut b = Bounds {
        q: (-e.g4, e.g4),
        t: (ns.max(0), e.g4),
        prov: vec![format!(
            "bounds: -sigma/2 = {ns} <= theta <= g4 = {}, |q_M| <= g4",
            e.g4
        )],
    };
    if b.t.0 > b.t.1 {
        return Err(Error::Contradiction {
            name: e.name.clone(),
            msg: format!("-sigma/2 = {ns} exceeds g4 = {}", e.g4),
        });
    }
    if e.flags.slice {
        b.fix(&e.name, 0, "slice")?;
    }
    if e.flags.quasipositive {
        b.fix(&e.name, e.g4, "quasipositive")?;
    }
    if e.flags.quasi_alternating {
        b.fix(
            &e.name,
            ns,
            "quasi-alternating, branched cover is an L-space",
        )?;
    }
    if let Some(v) = evidence {
        if v.is_lspace_over_f2 {
            b.fix(
                &e.name,
                ns,
                "branched cover is an L-space (verified resolution tree)",
            )?;
        }
    }
    b.q.1 = b.q.1.min(b.t.1);
    let q_m = DerivedValue::from_bounds(b.q.0, b.q.1);
    let theta = DerivedValue::from_bounds(b.t.0, b.t.1);
    if q_m.exact().is_none() || theta.exact().is_none() {
        b.prov.push("undetermined: only bounds are known".into());
    }
    Ok(Derivation {
        name: e.name.clone(),
        neg_sigma_half: ns,
        g4: e.g4,
        q_m,
        theta,
        provenance: b.prov,
    })
}

/// Derive every entry; failures stay attached to their row.
pub fn derive_all(
    entries: &[CatalogEntry],
    evidence: &Evidence,
    mode: Mode,
) -> Vec<Result<Derivation>> {
    exec::map(mode, entries, |e| derive(e, evidence.for_entry(e)))
}

/// Values of a knot entering a connected sum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KnotValues {
    pub q_m: Option<i64>,
    pub sigma: i64,
    pub g4: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormalSum {
    pub q_m: i64,
    pub sigma: i64,
    pub theta: DerivedValue,
}

/// `sum m_i K_i`, with negative multiplicities for concordance inverses.
pub fn formal_sum(terms: &[(i64, KnotValues)]) -> Result<FormalSum> {
    let mut q = 0;
    let mut sigma = 0;
    let mut g4 = 0;
    for (k, (m, v)) in terms.iter().enumerate() {
        let qm = v
            .q_m
            .ok_or_else(|| Error::Inapplicable(format!("term {k} has no exact q_M")))?;
        q += m * qm;
        sigma += m * v.sigma;
        g4 += m.abs() * v.g4;
    }
    let lo = (-sigma / 2).max(q).max(0);
    if lo > g4 {
        return Err(Error::Contradiction {
            name: "formal sum".into(),
            msg: format!("lower bound {lo} for theta exceeds the genus bound {g4}"),
        });
    }
    Ok(FormalSum {
        q_m: q,
        sigma,
        theta: DerivedValue::from_bounds(lo, g4),
    })
}
