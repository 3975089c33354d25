//! Knot catalogs, the rule system for `q_M` and `theta`, and table output.

mod rules;
mod table;

use std::collections::BTreeMap;
use std::path::Path;

use serde::Deserialize;

use crate::diagram::{parse_pd, torus_knot, PlanarDiagram};
use crate::error::{Error, Result};

pub use rules::{
    derive, derive_all, formal_sum, Derivation, DerivedValue, Evidence, FormalSum, KnotValues,
};
pub use table::{diff_table, render_table, TableDiff, TABLE_HEADER};

const KNOTS: &str = include_str!("../../data/knots_le10.csv");
const LINKS: &str = include_str!("../../data/links_small.csv");
/// Table of values for prime knots up to nine crossings, as published.
pub const PAPER_TABLE_LE9: &str = include_str!("../../data/paper_table_le9.csv");
pub const PROP_TREE_9_42: &str = include_str!("../../data/prop_tree_9_42.json");
pub const HOMFLY_9_42: &str = include_str!("../../data/homfly_9_42_delta.csv");

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub alternating: bool,
    pub quasi_alternating: bool,
    pub quasipositive: bool,
    pub positive: bool,
    pub braid_positive: bool,
    pub strongly_quasipositive: bool,
    pub slice: bool,
}

impl Flags {
    /// `BP`, `P`, `SQ`, `QP` or `-`, the strongest positivity class.
    pub fn positivity(&self) -> &'static str {
        if self.braid_positive {
            "BP"
        } else if self.positive {
            "P"
        } else if self.strongly_quasipositive {
            "SQ"
        } else if self.quasipositive {
            "QP"
        } else {
            "-"
        }
    }
}

/// A catalog row. Positivity flags refer to the chirality with
/// `signature <= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub pd: String,
    pub signature: i64,
    pub g4: i64,
    pub det: Option<u64>,
    pub flags: Flags,
}

#[derive(Deserialize)]
struct Row {
    name: String,
    pd: String,
    signature: i64,
    g4: i64,
    det: Option<u64>,
    alternating: String,
    quasi_alternating: String,
    quasipositive: String,
    positive: String,
    braid_positive: String,
    strongly_quasipositive: String,
    slice: String,
}

fn flag(s: &str, row: usize, col: &str) -> Result<bool> {
    match s.trim() {
        "Y" | "y" | "1" | "true" => Ok(true),
        "N" | "n" | "0" | "false" => Ok(false),
        other => Err(Error::Catalog {
            row,
            msg: format!("{col}: expected Y or N, got {other:?}"),
        }),
    }
}

impl CatalogEntry {
    pub fn diagram(&self) -> Result<PlanarDiagram> {
        Ok(parse_pd(&self.pd)?.with_name(self.name.clone()))
    }

    /// The diagram in the chirality with `signature <= 0`.
    pub fn normalized_diagram(&self) -> Result<PlanarDiagram> {
        let d = self.diagram()?;
        Ok(if self.signature > 0 {
            d.mirror().with_name(self.name.clone())
        } else {
            d
        })
    }

    fn validate(&self, row: usize) -> Result<()> {
        let f = &self.flags;
        let chain = [
            (
                f.braid_positive,
                f.positive,
                "braid positive but not positive",
            ),
            (
                f.positive,
                f.strongly_quasipositive,
                "positive but not strongly quasipositive",
            ),
            (
                f.strongly_quasipositive,
                f.quasipositive,
                "strongly quasipositive but not quasipositive",
            ),
            (
                f.alternating,
                f.quasi_alternating,
                "alternating but not quasi-alternating",
            ),
        ];
        for (a, b, msg) in chain {
            if a && !b {
                return Err(Error::Catalog {
                    row,
                    msg: format!("{}: {msg}", self.name),
                });
            }
        }
        if f.slice && self.g4 != 0 {
            return Err(Error::Catalog {
                row,
                msg: format!("{}: slice but g4 = {}", self.name, self.g4),
            });
        }
        if self.g4 < 0 || self.signature % 2 != 0 {
            return Err(Error::Catalog {
                row,
                msg: format!("{}: invalid g4 or odd signature", self.name),
            });
        }
        Ok(())
    }
}

/// Parse a catalog CSV; an empty input gives an empty catalog.
pub fn parse_catalog(text: &str) -> Result<Vec<CatalogEntry>> {
    if text.trim().is_empty() {
        return Ok(vec![]);
    }
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut out = vec![];
    for (k, r) in rdr.deserialize::<Row>().enumerate() {
        let row = k + 2;
        let r = r.map_err(|e| Error::Catalog {
            row,
            msg: e.to_string(),
        })?;
        let flags = Flags {
            alternating: flag(&r.alternating, row, "alternating")?,
            quasi_alternating: flag(&r.quasi_alternating, row, "quasi_alternating")?,
            quasipositive: flag(&r.quasipositive, row, "quasipositive")?,
            positive: flag(&r.positive, row, "positive")?,
            braid_positive: flag(&r.braid_positive, row, "braid_positive")?,
            strongly_quasipositive: flag(&r.strongly_quasipositive, row, "strongly_quasipositive")?,
            slice: flag(&r.slice, row, "slice")?,
        };
        let e = CatalogEntry {
            name: r.name,
            pd: r.pd,
            signature: r.signature,
            g4: r.g4,
            det: r.det,
            flags,
        };
        e.validate(row)?;
        out.push(e);
    }
    Ok(out)
}

pub fn ingest(path: &Path) -> Result<Vec<CatalogEntry>> {
    parse_catalog(&std::fs::read_to_string(path)?)
}

/// Prime knots up to ten crossings (and the unknot).
pub fn shipped_catalog() -> Vec<CatalogEntry> {
    parse_catalog(KNOTS).expect("shipped catalog is valid")
}

#[derive(Deserialize)]
struct LinkRow {
    name: String,
    pd: String,
}

fn shipped_links() -> BTreeMap<String, String> {
    let mut rdr = csv::Reader::from_reader(LINKS.as_bytes());
    rdr.deserialize::<LinkRow>()
        .map(|r| {
            let r = r.expect("shipped link table is valid");
            (r.name, r.pd)
        })
        .collect()
}

/// Resolve a knot by catalog name (`9_42`, `L6n1`, `7n1`, `unknot`),
/// torus notation `T(p,q)`, a `m` prefix for the mirror, or inline PD code.
pub fn lookup(spec: &str) -> Result<PlanarDiagram> {
    let s = spec.trim();
    if s.starts_with("PD") || s.starts_with('[') {
        return parse_pd(s);
    }
    if let Some(rest) = s.strip_prefix('m') {
        if !rest.is_empty() {
            return Ok(lookup(rest)?.mirror().with_name(s));
        }
    }
    if let Some(inner) = s.strip_prefix("T(").and_then(|r| r.strip_suffix(')')) {
        let v: Vec<i64> = inner
            .split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::UnknownKnot(s.into())))
            .collect::<Result<_>>()?;
        if let [p, q] = v[..] {
            return torus_knot(p, q);
        }
        return Err(Error::UnknownKnot(s.into()));
    }
    let name = match s {
        "unknot" | "U" => "0_1",
        "7n1" => "L7n1",
        "6n1" => "L6n1",
        "4a1" => "L4a1",
        "2a1" => "L2a1",
        other => other,
    };
    if let Some(e) = shipped_catalog().into_iter().find(|e| e.name == name) {
        return e.diagram();
    }
    if let Some(pd) = shipped_links().get(name) {
        return Ok(parse_pd(pd)?.with_name(name));
    }
    Err(Error::UnknownKnot(s.into()))
}
