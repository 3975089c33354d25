use std::collections::BTreeMap;

use super::{CatalogEntry, Derivation};
use crate::error::{Error, Result};

pub const TABLE_HEADER: [&str; 7] = [
    "name",
    "neg_sigma_half",
    "q_m",
    "theta",
    "g4",
    "qalt",
    "positivity",
];

fn qalt(e: &CatalogEntry) -> &'static str {
    if e.flags.alternating {
        "alt"
    } else if e.flags.quasi_alternating {
        "q.alt"
    } else {
        "non-q.alt"
    }
}

fn check(d: &Derivation) -> Result<()> {
    if let (Some(q), Some(t)) = (d.q_m.exact(), d.theta.exact()) {
        if q > t || t > d.g4 || d.neg_sigma_half > t {
            return Err(Error::Contradiction {
                name: d.name.clone(),
                msg: format!(
                    "q_M = {q}, theta = {t}, g4 = {}, -sigma/2 = {} violate the inequalities",
                    d.g4, d.neg_sigma_half
                ),
            });
        }
    }
    Ok(())
}

/// CSV table, one row per entry in input order. Rows whose derivation
/// failed carry `error` in the value columns; their messages are returned.
pub fn render_table(rows: &[(CatalogEntry, Result<Derivation>)]) -> (String, Vec<String>) {
    let mut w = csv::Writer::from_writer(vec![]);
    w.write_record(TABLE_HEADER).expect("in-memory write");
    let mut errors = vec![];
    for (e, d) in rows {
        let d = d.clone().and_then(|d| check(&d).map(|_| d));
        let (q, t) = match &d {
            Ok(d) => (d.q_m.to_string(), d.theta.to_string()),
            Err(err) => {
                errors.push(format!("{}: {err}", e.name));
                ("error".into(), "error".into())
            }
        };
        let ns = (e.signature.abs() / 2).to_string();
        w.write_record([
            e.name.as_str(),
            &ns,
            &q,
            &t,
            &e.g4.to_string(),
            qalt(e),
            e.flags.positivity(),
        ])
        .expect("in-memory write");
    }
    let out = String::from_utf8(w.into_inner().expect("flush")).expect("utf8");
    (out, errors)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableDiff {
    /// Disagreements in the value or (quasi)alternating columns.
    pub mismatches: Vec<String>,
    /// Positivity labels that differ; the catalog and the fixture use
    /// different sources for these.
    pub positivity: Vec<String>,
    pub missing: Vec<String>,
    pub compared: usize,
}

impl TableDiff {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty() && self.missing.is_empty()
    }
}

fn read_rows(text: &str) -> Result<BTreeMap<String, Vec<String>>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut m = BTreeMap::new();
    for (k, r) in rdr.records().enumerate() {
        let r = r.map_err(|e| Error::Catalog {
            row: k + 2,
            msg: e.to_string(),
        })?;
        let v: Vec<String> = r
            .iter()
            .map(|s| s.trim_end_matches('!').to_string())
            .collect();
        if v.len() != TABLE_HEADER.len() {
            return Err(Error::Catalog {
                row: k + 2,
                msg: format!("expected {} columns", TABLE_HEADER.len()),
            });
        }
        m.insert(v[0].clone(), v);
    }
    Ok(m)
}

/// Compare a rendered table against a fixture with the same columns, row by
/// row for the fixture's names.
pub fn diff_table(rendered: &str, fixture: &str) -> Result<TableDiff> {
    let ours = read_rows(rendered)?;
    let theirs = read_rows(fixture)?;
    let mut d = TableDiff::default();
    for (name, want) in &theirs {
        let Some(got) = ours.get(name) else {
            d.missing.push(name.clone());
            continue;
        };
        d.compared += 1;
        for c in 1..=5 {
            if got[c] != want[c] {
                d.mismatches.push(format!(
                    "{name} {}: got {}, expected {}",
                    TABLE_HEADER[c], got[c], want[c]
                ));
            }
        }
        if got[6] != want[6] {
            d.positivity
                .push(format!("{name}: catalog {}, fixture {}", got[6], want[6]));
        }
    }
    Ok(d)
}
