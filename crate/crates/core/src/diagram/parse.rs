use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Edge, Orient, PlanarDiagram, Raw};
use crate::error::{Error, Result};

/// Parse `PD[X(a,b,c,d), ...]`. Also accepts `X[...]` brackets and the bare
/// nested-list form `[[a,b,c,d], ...]`. `PD[]` is the crossingless unknot.
pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
    let quads = parse_quads(text)?;
    PlanarDiagram::from_pd(quads)
}

fn parse_quads(text: &str) -> Result<Vec<[Edge; 4]>> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.starts_with("[[") || s == "[]" {
        let v: Vec<Vec<i64>> =
            serde_json::from_str(&s).map_err(|e| Error::Syntax(e.to_string()))?;
        return v.into_iter().map(to_quad).collect();
    }
    let inner = s
        .strip_prefix("PD[")
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| Error::Syntax(format!("expected PD[...], got {text:?}")))?;
    let mut quads = Vec::new();
    let mut rest = inner;
    while !rest.is_empty() {
        let body = rest
            .strip_prefix("X(")
            .map(|r| (r, ')'))
            .or_else(|| rest.strip_prefix("X[").map(|r| (r, ']')));
        let (r, close) =
            body.ok_or_else(|| Error::Syntax(format!("expected X(...) at {rest:?}")))?;
        let end = r
            .find(close)
            .ok_or_else(|| Error::Syntax("unterminated crossing".into()))?;
        let nums = r[..end]
            .split(',')
            .map(|t| {
                t.parse::<i64>()
                    .map_err(|_| Error::Syntax(format!("bad edge label {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        quads.push(to_quad(nums)?);
        rest = &r[end + 1..];
        rest = rest.strip_prefix(',').unwrap_or(rest);
    }
    Ok(quads)
}

fn to_quad(v: Vec<i64>) -> Result<[Edge; 4]> {
    if v.len() != 4 {
        return Err(Error::Syntax(format!(
            "crossing needs 4 labels, got {}",
            v.len()
        )));
    }
    let mut q = [0; 4];
    for (slot, x) in q.iter_mut().zip(v) {
        if x <= 0 || x > u32::MAX as i64 {
            return Err(Error::Syntax(format!(
                "edge labels must be positive, got {x}"
            )));
        }
        *slot = x as Edge;
    }
    Ok(q)
}

/// JSON form of a diagram.
#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq)]
pub struct DiagramJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub pd: PdField,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base_point: Option<Edge>,
    /// Dotted components (strand components by smallest edge, then loops).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dots: Vec<usize>,
    /// Dots placed on specific edges; a component may carry several.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub dot_edges: Vec<Edge>,
    /// Crossingless circles beyond those implied by an empty code.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub loops: Option<usize>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub mirror: bool,
    /// Components whose orientation is reversed after parsing.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub reverse: Vec<usize>,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum PdField {
    Quads(Vec<[Edge; 4]>),
    Text(String),
}

impl Default for PdField {
    fn default() -> Self {
        PdField::Quads(vec![])
    }
}

pub fn parse_json(text: &str) -> Result<PlanarDiagram> {
    let j: DiagramJson = serde_json::from_str(text)?;
    j.to_diagram()
}

impl DiagramJson {
    pub fn to_diagram(&self) -> Result<PlanarDiagram> {
        let quads = match &self.pd {
            PdField::Quads(q) => q.clone(),
            PdField::Text(t) => parse_quads(t)?,
        };
        let loops = self.loops.unwrap_or(usize::from(quads.is_empty()));
        let mut d = PlanarDiagram::assemble(
            Raw {
                quads,
                free_loops: loops,
                dotted_loops: 0,
                base_point: None,
                dots: BTreeSet::new(),
                name: self.name.clone(),
            },
            Orient::Strict,
        )?;
        if !self.reverse.is_empty() {
            d = d.reverse_components(&self.reverse)?;
        }
        if self.mirror {
            d = d.mirror();
        }
        let comps = d.strand_components();
        for &i in &self.dots {
            if i < comps.len() {
                d.dots
                    .insert(*comps[i].iter().min().expect("nonempty component"));
            } else if i < comps.len() + d.free_loops {
                d.dotted_loops += 1;
            } else {
                return Err(Error::Syntax(format!("no component {i} to dot")));
            }
        }
        for &e in &self.dot_edges {
            if !d.has_edge(e) {
                return Err(Error::Syntax(format!("no edge {e} to dot")));
            }
            d.dots.insert(e);
        }
        if let Some(b) = self.base_point {
            d = d.with_base_point(b)?;
        }
        Ok(d)
    }

    pub fn from_diagram(d: &PlanarDiagram) -> Self {
        DiagramJson {
            name: d.name.clone(),
            pd: PdField::Quads(d.crossings.iter().map(|c| c.edges).collect()),
            base_point: d.base_point,
            dots: {
                let ns = d.strand_components().len();
                (ns..ns + d.dotted_loops).collect()
            },
            dot_edges: d.dots.iter().copied().collect(),
            loops: if d.free_loops == usize::from(d.crossings.is_empty()) {
                None
            } else {
                Some(d.free_loops)
            },
            mirror: false,
            reverse: strict_reversals(d),
        }
    }
}

/// Components whose orientation is not the one the quadruples alone
/// determine (possible only for components that never pass under, where
/// no edge has both ends at one crossing).
fn strict_reversals(d: &PlanarDiagram) -> Vec<usize> {
    let Ok(plain) = PlanarDiagram::from_pd(d.crossings.iter().map(|c| c.edges).collect()) else {
        return vec![];
    };
    let (da, db) = (d.darts(), plain.darts());
    plain
        .strand_components()
        .iter()
        .enumerate()
        .filter(|(_, c)| d.head_of(&da, c[0]).0 != plain.head_of(&db, c[0]).0)
        .map(|(i, _)| i)
        .collect()
}

impl PlanarDiagram {
    /// `PD[X(a,b,c,d), ...]` text; free loops are not representable here.
    pub fn to_pd_string(&self) -> String {
        let xs: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                format!(
                    "X({},{},{},{})",
                    c.edges[0], c.edges[1], c.edges[2], c.edges[3]
                )
            })
            .collect();
        format!("PD[{}]", xs.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grammar_variants_agree() {
        let a = parse_pd("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]").unwrap();
        let b = parse_pd("PD[X[1,5,2,4],X[3,1,4,6],X[5,3,6,2]]").unwrap();
        let c = parse_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(parse_pd(&a.to_pd_string()).unwrap(), a);
    }

    #[test]
    fn empty_code_is_unknot() {
        let u = parse_pd("PD[]").unwrap();
        assert_eq!(u.crossing_count(), 0);
        assert_eq!(u.component_count(), 1);
    }

    #[test]
    fn malformed() {
        assert!(matches!(parse_pd("PD[X(1,2,3)]"), Err(Error::Syntax(_))));
        assert!(matches!(parse_pd("X(1,2,3,4)"), Err(Error::Syntax(_))));
        assert!(matches!(parse_pd("PD[X(0,1,1,0)]"), Err(Error::Syntax(_))));
        assert!(matches!(parse_pd("PD[X(a,1,1,2)]"), Err(Error::Syntax(_))));
    }

    #[test]
    fn json_form() {
        let d = parse_json(r#"{"name":"3_1","pd":[[1,5,2,4],[3,1,4,6],[5,3,6,2]],"base_point":2}"#)
            .unwrap();
        assert_eq!(d.name(), Some("3_1"));
        assert_eq!(d.base_point(), Some(2));
        let m =
            parse_json(r#"{"pd":"PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]","mirror":true}"#).unwrap();
        assert_eq!(m.writhe(), -3);
        let u2 = parse_json(r#"{"pd":[],"loops":2,"dots":[0,1]}"#).unwrap();
        assert_eq!(u2.component_count(), 2);
        assert!(u2.all_components_dotted());
        let back = serde_json::to_string(&DiagramJson::from_diagram(&u2)).unwrap();
        assert_eq!(parse_json(&back).unwrap(), u2);
    }
}
