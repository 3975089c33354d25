//! Grading arguments for spectral sequences out of triply graded
//! (HOMFLY-PT) homology, and the resulting sl(N) concordance invariants.

use std::collections::{BTreeMap, BTreeSet};
use std::path::Path;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `(q, a, delta)`
pub type Tri = (i32, i32, i32);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TriplyGradedTable {
    pub label: String,
    /// Nonzero dimensions only.
    pub entries: BTreeMap<Tri, u64>,
}

#[derive(Deserialize)]
struct Row {
    q: i32,
    a: i32,
    delta: i32,
    dim: u64,
}

impl TriplyGradedTable {
    pub fn new(
        label: impl Into<String>,
        entries: impl IntoIterator<Item = (Tri, u64)>,
    ) -> Result<Self> {
        let mut m = BTreeMap::new();
        for (g, d) in entries {
            if d == 0 {
                continue;
            }
            if m.insert(g, d).is_some() {
                return Err(Error::Syntax(format!("duplicate entry at {g:?}")));
            }
        }
        Ok(TriplyGradedTable {
            label: label.into(),
            entries: m,
        })
    }

    /// CSV with header `q,a,delta,dim`.
    pub fn from_csv(label: impl Into<String>, text: &str) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let mut rows = vec![];
        for (k, r) in rdr.deserialize::<Row>().enumerate() {
            let r = r.map_err(|e| Error::Catalog {
                row: k + 1,
                msg: e.to_string(),
            })?;
            rows.push(((r.q, r.a, r.delta), r.dim));
        }
        Self::new(label, rows)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default();
        Self::from_csv(label, &text)
    }

    pub fn total_dim(&self) -> u64 {
        self.entries.values().sum()
    }

    fn has(&self, g: Tri) -> bool {
        self.entries.contains_key(&g)
    }

    fn nonempty(&self) -> Result<()> {
        if self.entries.is_empty() {
            Err(Error::EmptyTable)
        } else {
            Ok(())
        }
    }

    fn deltas(&self) -> BTreeSet<i32> {
        self.entries.keys().map(|g| g.2).collect()
    }

    /// Some pair of supported gradings differs by `off`.
    fn hits(&self, off: Tri) -> bool {
        self.entries
            .keys()
            .any(|&(q, a, d)| self.has((q + off.0, a + off.1, d + off.2)))
    }

    /// Bound on the page index beyond which no offset can connect entries.
    fn max_page(&self) -> i32 {
        let span = |f: fn(&Tri) -> i32| {
            let v: Vec<i32> = self.entries.keys().map(f).collect();
            v.iter().max().copied().unwrap_or(0) - v.iter().min().copied().unwrap_or(0)
        };
        span(|g| g.0).max(span(|g| g.1)) / 2 + 1
    }
}

/// Number of distinct delta gradings with nonzero support.
pub fn delta_thickness(t: &TriplyGradedTable) -> Result<usize> {
    t.nonempty()?;
    Ok(t.deltas().len())
}

fn dk_offset(k: i32) -> Tri {
    (2 * k, -2, 2 * k - 2)
}

fn d1_offset(i: i32) -> Tri {
    (2 * i, -2 * i, 2 - 2 * i)
}

/// The first differential of the spectral sequence to sl(k) homology
/// vanishes for grading reasons.
pub fn dk_vanishes(t: &TriplyGradedTable, k: i32) -> bool {
    assert!(k >= 2, "d_k is considered for k >= 2");
    !t.hits(dk_offset(k))
}

/// For the `i`-th differential towards sl(1) homology, whether it vanishes
/// between each pair `(source delta, target delta)` of supported slices.
pub fn d1_page_vanishes(t: &TriplyGradedTable, i: i32) -> BTreeMap<(i32, i32), bool> {
    assert!(i >= 1, "pages start at 1");
    let off = d1_offset(i);
    let ds = t.deltas();
    let mut out = BTreeMap::new();
    for &s in &ds {
        if !ds.contains(&(s + off.2)) {
            continue;
        }
        let hit = t
            .entries
            .keys()
            .filter(|g| g.2 == s)
            .any(|&(q, a, d)| t.has((q + off.0, a + off.1, d + off.2)));
        out.insert((s, s + off.2), !hit);
    }
    out
}

pub fn d1_vanishes(t: &TriplyGradedTable, i: i32) -> bool {
    d1_page_vanishes(t, i).values().all(|&v| v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CollapseVerdict {
    pub delta_thickness: usize,
    pub dk_vanish: BTreeMap<i32, bool>,
    /// Grading `(q, a, delta)` of the surviving generator.
    pub survivor: Tri,
    pub surviving_q: i32,
    pub s_values: BTreeMap<u32, Ratio<i64>>,
    pub assumptions: Vec<String>,
}

/// Run the grading argument for each `N` in `ns`: thickness at most 2
/// gives collapse to sl(N) homology, the `d_k` with `2 <= k <= N-1` vanish,
/// and a unique delta slice out of reach of every `d_1^(i)` holds the
/// survivor, which must be one-dimensional.
pub fn conclude(t: &TriplyGradedTable, ns: &[u32]) -> Result<CollapseVerdict> {
    let thick = delta_thickness(t)?;
    if thick > 2 {
        return Err(Error::Inapplicable(format!(
            "delta-thickness {thick} exceeds 2"
        )));
    }
    let n_max = ns.iter().copied().max().unwrap_or(2) as i32;
    let mut dk = BTreeMap::new();
    for k in 2..n_max {
        dk.insert(k, dk_vanishes(t, k));
    }
    for &n in ns {
        if n < 2 {
            return Err(Error::Inapplicable(format!("N = {n} is below 2")));
        }
        if let Some(k) = (2..n as i32).find(|k| !dk[k]) {
            return Err(Error::Inapplicable(format!(
                "d_{k} may be nonzero, needed for N = {n}"
            )));
        }
    }

    let pages = t.max_page();
    let isolated: Vec<i32> = t
        .deltas()
        .into_iter()
        .filter(|&s| {
            (1..=pages).all(|i| {
                let off = d1_offset(i);
                t.entries.keys().filter(|g| g.2 == s).all(|&(q, a, d)| {
                    !t.has((q + off.0, a + off.1, d + off.2))
                        && !t.has((q - off.0, a - off.1, d - off.2))
                })
            })
        })
        .collect();
    let [s] = isolated[..] else {
        return Err(Error::Inapplicable(format!(
            "{} delta slices are out of reach of d_1; expected exactly one",
            isolated.len()
        )));
    };
    let slice: Vec<(&Tri, &u64)> = t.entries.iter().filter(|(g, _)| g.2 == s).collect();
    let dim: u64 = slice.iter().map(|(_, &d)| d).sum();
    if dim != 1 {
        return Err(Error::Inapplicable(format!(
            "isolated slice delta = {s} has dimension {dim}, not 1"
        )));
    }
    let survivor = *slice[0].0;
    if survivor.1 != 0 {
        return Err(Error::Inapplicable(format!(
            "survivor at a = {} (its sl(N) grading depends on N)",
            survivor.1
        )));
    }
    let q = survivor.0;
    let s_values = ns
        .iter()
        .map(|&n| (n, Ratio::new(i64::from(q), 2 * (i64::from(n) - 1))))
        .collect();
    Ok(CollapseVerdict {
        delta_thickness: thick,
        dk_vanish: dk,
        survivor,
        surviving_q: q,
        s_values,
        assumptions: vec![
            "delta-thickness <= 2 forces the spectral sequence to sl(N) homology to collapse"
                .into(),
            "the first differential for a potential with a_2 != 0 is a_N d_{N-1} + ... + a_2 d_1"
                .into(),
            "s is unchanged by translating the potential, so the root may be taken to be 0".into(),
        ],
    })
}

impl CollapseVerdict {
    pub fn to_text(&self) -> String {
        let mut out = format!("delta-thickness  {}\n", self.delta_thickness);
        for (k, v) in &self.dk_vanish {
            out.push_str(&format!(
                "d_{k}              {}\n",
                if *v { "vanishes" } else { "may be nonzero" }
            ));
        }
        out.push_str(&format!(
            "survivor         (q, a, delta) = ({}, {}, {})\n",
            self.survivor.0, self.survivor.1, self.survivor.2
        ));
        for (n, s) in &self.s_values {
            out.push_str(&format!(
                "s (N = {n}){}{s}\n",
                " ".repeat(8usize.saturating_sub(n.to_string().len()))
            ));
        }
        for a in &self.assumptions {
            out.push_str(&format!("assumes: {a}\n"));
        }
        out
    }
}
