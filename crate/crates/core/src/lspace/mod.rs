//! Resolution trees: L-space certificates for branched double covers and
//! quasi-alternating certificates.

mod qa;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::{CrossingSite, DiagramJson, PlanarDiagram};
use crate::error::{Error, Result};
use crate::exactalg::RingTag;
use crate::homology::{homology, HomologyOptions, Summand};
use crate::invariants::{determinant, signature_gl};

pub use qa::{qa_certify, qa_certify_with, verify_qa_certificate, QaOutcome, DEFAULT_BUDGET};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    /// Connected alternating diagram (possibly after removing nugatory
    /// crossings and R2 bigons).
    Alternating,
    /// Simplifies to crossingless circles: the unknot, or inside a
    /// two-fold quasi-alternating subtree an unlink with every component dotted.
    Unknot,
    /// Trusted external fact, with its provenance.
    KnownLSpaceCover(String),
    /// Quasi-alternating, certified by the subtree (a QA certificate).
    QuasiAlternating,
    /// Two-fold quasi-alternating; the subtree, if any, is checked structurally.
    AssertedTqa(String),
    Branch,
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Alternating => write!(f, "alt"),
            Justification::Unknot => write!(f, "unknot"),
            Justification::QuasiAlternating => write!(f, "qa"),
            Justification::KnownLSpaceCover(s) => write!(f, "lspace:{s}"),
            Justification::AssertedTqa(s) => write!(f, "tqa:{s}"),
            Justification::Branch => write!(f, "branch"),
        }
    }
}

impl Justification {
    fn parse(s: Option<&str>) -> Result<Self> {
        Ok(match s {
            None | Some("branch") => Justification::Branch,
            Some("alt") => Justification::Alternating,
            Some("unknot") => Justification::Unknot,
            Some("qa") => Justification::QuasiAlternating,
            Some(t) => {
                if let Some(r) = t.strip_prefix("lspace:") {
                    Justification::KnownLSpaceCover(r.to_string())
                } else if let Some(r) = t.strip_prefix("tqa:") {
                    Justification::AssertedTqa(r.to_string())
                } else {
                    return Err(Error::Syntax(format!("unknown justification {t:?}")));
                }
            }
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Split {
    pub site: usize,
    /// Resolutions with labels 0 and 1.
    pub children: Box<[ResolutionTree; 2]>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionTree {
    pub diagram: PlanarDiagram,
    pub det: u64,
    pub justification: Justification,
    pub split: Option<Split>,
}

#[derive(Serialize, Deserialize)]
struct NodeJson {
    #[serde(flatten)]
    diagram: DiagramJson,
    det: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    just: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    site: Vec<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    children: Vec<NodeJson>,
}

impl ResolutionTree {
    pub fn leaf(diagram: PlanarDiagram, justification: Justification) -> Result<Self> {
        let det = determinant(&diagram)?;
        Ok(ResolutionTree {
            diagram,
            det,
            justification,
            split: None,
        })
    }

    /// Node whose children are computed by resolving `site`.
    pub fn branch(
        diagram: PlanarDiagram,
        justification: Justification,
        site: usize,
        children: [ResolutionTree; 2],
    ) -> Result<Self> {
        let det = determinant(&diagram)?;
        Ok(ResolutionTree {
            diagram,
            det,
            justification,
            split: Some(Split {
                site,
                children: Box::new(children),
            }),
        })
    }

    pub fn node_count(&self) -> usize {
        1 + self
            .split
            .as_ref()
            .map_or(0, |s| s.children.iter().map(|c| c.node_count()).sum())
    }

    fn to_node(&self) -> NodeJson {
        NodeJson {
            diagram: DiagramJson::from_diagram(&self.diagram),
            det: self.det,
            just: match self.justification {
                Justification::Branch => None,
                ref j => Some(j.to_string()),
            },
            site: self.split.iter().map(|s| s.site).collect(),
            children: self
                .split
                .iter()
                .flat_map(|s| s.children.iter().map(|c| c.to_node()))
                .collect(),
        }
    }

    fn from_node(n: NodeJson) -> Result<Self> {
        let diagram = n.diagram.to_diagram()?;
        let justification = Justification::parse(n.just.as_deref())?;
        let split = match (n.site.as_slice(), n.children.len()) {
            ([], 0) => None,
            ([site], 2) => {
                let mut it = n.children.into_iter();
                let a = Self::from_node(it.next().expect("two children"))?;
                let b = Self::from_node(it.next().expect("two children"))?;
                Some(Split {
                    site: *site,
                    children: Box::new([a, b]),
                })
            }
            _ => {
                return Err(Error::Syntax(
                    "a node needs either no site and no children, or one site and two children"
                        .into(),
                ))
            }
        };
        Ok(ResolutionTree {
            diagram,
            det: n.det,
            justification,
            split,
        })
    }

    pub fn to_json(&self) -> String {
        let v = serde_json::to_value(self.to_node()).expect("serializable");
        let mut out = String::new();
        write_json(&v, 0, &mut out);
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_node(serde_json::from_str(text)?)
    }
}

/// Indented JSON with arrays of scalars (and of such arrays) on one line.
fn write_json(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let flat = |v: &Value| match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    };
    let pad = "  ".repeat(indent + 1);
    match v {
        Value::Array(a) if a.iter().all(flat) => {
            out.push_str(&serde_json::to_string(v).expect("json"))
        }
        Value::Array(a) => {
            out.push_str("[\n");
            for (k, x) in a.iter().enumerate() {
                out.push_str(&pad);
                write_json(x, indent + 1, out);
                out.push_str(if k + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push(']');
        }
        Value::Object(m) => {
            out.push_str("{\n");
            for (k, (key, x)) in m.iter().enumerate() {
                out.push_str(&format!(
                    "{pad}{}: ",
                    serde_json::to_string(key).expect("json")
                ));
                write_json(x, indent + 1, out);
                out.push_str(if k + 1 < m.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(indent));
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("json")),
    }
}

/// Unknot recognition: greedy simplification to a circle, or else reduced
/// Khovanov homology over `Z` of rank one (which detects the unknot, by
/// Kronheimer and Mrowka).
pub fn is_unknot(d: &PlanarDiagram) -> bool {
    if d.component_count() != 1 {
        return false;
    }
    let s = d.greedy_simplify();
    if s.crossing_count() == 0 {
        return true;
    }
    if determinant(&s).map_or(true, |x| x != 1) {
        return false;
    }
    let opts = HomologyOptions {
        reduced: true,
        ..HomologyOptions::default()
    };
    match homology(&s.based(), RingTag::Z, opts) {
        Ok(m) => m.summands.len() == 1 && m.summands[0].kind == Summand::Free,
        Err(_) => false,
    }
}

/// Outcome of checking a resolution tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LSpaceVerdict {
    pub is_lspace_over_f2: bool,
    /// Upper bound on `dim HF-hat` of the branched double cover.
    pub dim_upper: u64,
    /// `|H_1|` of the branched double cover, the determinant.
    pub h1_order: u64,
    pub report: Vec<String>,
}

/// Equality of a recorded child with the computed resolution. Exact
/// agreement is accepted; otherwise the diagrams must agree up to edge
/// relabelling and component orientations, with dots compared per component.
/// When `with_dots` is false dots are ignored.
fn same_diagram(computed: &PlanarDiagram, recorded: &PlanarDiagram, with_dots: bool) -> bool {
    let strip = |d: &PlanarDiagram| {
        let mut d = d.clone();
        if !with_dots {
            d.clear_dots();
        }
        d
    };
    let (a, b) = (strip(computed), strip(recorded));
    if a.crossings() == b.crossings()
        && a.free_loops() == b.free_loops()
        && a.dotted_loops() == b.dotted_loops()
        && a.dots() == b.dots()
    {
        return true;
    }
    let ka = a.canonical_key();
    let n = b.strand_components().len();
    if n > 12 {
        return false;
    }
    (0..1usize << n).any(|mask| {
        let which: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
        b.reverse_components(&which)
            .is_ok_and(|r| r.canonical_key() == ka)
    })
}

struct Walker {
    report: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Scope {
    Top,
    Tqa,
}

impl Walker {
    fn check_det(&mut self, t: &ResolutionTree, path: &str) -> Result<()> {
        let computed = determinant(&t.diagram)?;
        if computed != t.det {
            return Err(Error::DeterminantMismatch {
                node: path.to_string(),
                recorded: t.det,
                computed,
            });
        }
        Ok(())
    }

    fn check_children(&mut self, t: &ResolutionTree, s: &Split, path: &str) -> Result<()> {
        let parent_dotted = !t.diagram.dots().is_empty() || t.diagram.dotted_loops() > 0;
        for (label, child) in s.children.iter().enumerate() {
            let computed = t.diagram.resolve(CrossingSite::new(s.site, label as u8))?;
            if !same_diagram(&computed, &child.diagram, parent_dotted) {
                return Err(Error::StructuralMismatch(format!(
                    "{path}.{label} is not the {label}-resolution at crossing {}",
                    s.site
                )));
            }
        }
        Ok(())
    }

    fn alternating_ok(d: &PlanarDiagram) -> bool {
        let s = d.greedy_simplify();
        d.is_connected()
            && s.is_connected()
            && s.crossing_count() > 0
            && (d.is_alternating() || s.is_alternating())
    }

    /// Returns the contribution to the dimension bound.
    fn walk(&mut self, t: &ResolutionTree, path: &str, scope: Scope) -> Result<u64> {
        self.check_det(t, path)?;
        let d = &t.diagram;
        let dim = match (&t.justification, &t.split) {
            (Justification::Branch, None) => {
                return Err(Error::UnjustifiableLeaf(format!(
                    "{path} has no justification"
                )));
            }
            (Justification::Branch, Some(s)) => {
                if scope == Scope::Tqa {
                    return Err(Error::StructuralMismatch(format!(
                        "{path}: plain branches are not allowed below a tqa node"
                    )));
                }
                self.check_children(t, s, path)?;
                let a = self.walk(&s.children[0], &format!("{path}.0"), scope)?;
                let b = self.walk(&s.children[1], &format!("{path}.1"), scope)?;
                self.report.push(format!(
                    "{path}: branch at crossing {}, bound {a} + {b} = {}",
                    s.site,
                    a + b
                ));
                a + b
            }
            (
                Justification::Alternating
                | Justification::Unknot
                | Justification::KnownLSpaceCover(_),
                Some(_),
            ) => {
                return Err(Error::StructuralMismatch(format!(
                    "{path}: only tqa nodes may have children"
                )));
            }
            (Justification::QuasiAlternating, _) => {
                let mut sub = t.clone();
                sub.justification = if t.split.is_some() {
                    Justification::Branch
                } else {
                    Justification::Alternating
                };
                if t.split.is_none() && qa::leaf_kind(d) == Some(Justification::Unknot) {
                    sub.justification = Justification::Unknot;
                }
                verify_qa_certificate(&sub).map_err(|e| match e {
                    Error::StructuralMismatch(m) | Error::UnjustifiableLeaf(m) => {
                        Error::UnjustifiableLeaf(format!(
                            "{path}: quasi-alternating certificate fails: {m}"
                        ))
                    }
                    other => other,
                })?;
                self.report.push(format!(
                    "{path}: quasi-alternating certificate with {} nodes, det {}",
                    t.node_count(),
                    t.det
                ));
                t.det
            }
            (Justification::Alternating, None) => {
                if !Self::alternating_ok(d) {
                    return Err(Error::UnjustifiableLeaf(format!(
                        "{path} is not a connected alternating diagram"
                    )));
                }
                self.report
                    .push(format!("{path}: alternating, det {}", t.det));
                t.det
            }
            (Justification::Unknot, None) => {
                let n = d.component_count();
                if n == 1 && is_unknot(d) {
                    self.report.push(format!("{path}: unknot"));
                    1
                } else if scope == Scope::Tqa
                    && n >= 2
                    && d.is_unlink_diagram(n)
                    && d.all_components_dotted()
                {
                    self.report
                        .push(format!("{path}: dotted {n}-component unlink"));
                    0
                } else {
                    return Err(Error::UnjustifiableLeaf(format!(
                        "{path} is not recognised as an unknot or dotted unlink"
                    )));
                }
            }
            (Justification::KnownLSpaceCover(name), None) => {
                if scope == Scope::Tqa {
                    return Err(Error::StructuralMismatch(format!(
                        "{path}: lspace leaf below a tqa node"
                    )));
                }
                if t.det == 0 {
                    return Err(Error::UnjustifiableLeaf(format!("{path}: determinant 0")));
                }
                self.report.push(format!(
                    "{path}: known L-space cover ({name}), det {} [trusted]",
                    t.det
                ));
                t.det
            }
            (Justification::AssertedTqa(r), split) => {
                if t.det == 0 {
                    return Err(Error::UnjustifiableLeaf(format!("{path}: determinant 0")));
                }
                if let Some(s) = split {
                    self.check_children(t, s, path)?;
                    let mut terminal = false;
                    for (k, c) in s.children.iter().enumerate() {
                        let p = format!("{path}.{k}");
                        match c.justification {
                            Justification::Unknot
                            | Justification::Alternating
                            | Justification::QuasiAlternating
                            | Justification::AssertedTqa(_) => {}
                            _ => {
                                return Err(Error::StructuralMismatch(format!(
                                    "{p}: unexpected node below tqa"
                                )))
                            }
                        }
                        self.walk(c, &p, Scope::Tqa)?;
                        terminal |= c.det > 0;
                    }
                    if !terminal {
                        return Err(Error::UnjustifiableLeaf(format!(
                            "{path}: no child with nonzero determinant"
                        )));
                    }
                    self.report.push(format!(
                        "{path}: tqa ({r}) at crossing {}, child determinants {} and {} recorded",
                        s.site, s.children[0].det, s.children[1].det
                    ));
                } else {
                    self.report
                        .push(format!("{path}: tqa ({r}) asserted without subtree"));
                }
                t.det
            }
        };
        Ok(dim)
    }
}

/// Check a resolution tree and bound `dim HF-hat` of the branched double
/// cover of the root through the exact triangle.
pub fn verify_lspace_tree(t: &ResolutionTree) -> Result<LSpaceVerdict> {
    let mut w = Walker { report: vec![] };
    let dim = w.walk(t, "root", Scope::Top)?;
    let ok = dim == t.det && t.det >= 1;
    w.report.push(format!(
        "dim HF-hat <= {dim}, |H_1| = {}: {}",
        t.det,
        if ok {
            "L-space over F2"
        } else {
            "inconclusive"
        }
    ));
    Ok(LSpaceVerdict {
        is_lspace_over_f2: ok,
        dim_upper: dim,
        h1_order: t.det,
        report: w.report,
    })
}

/// `q_M = -sigma/2` for a knot whose branched double cover is an L-space.
pub fn qm_from_lspace(d: &PlanarDiagram, verdict: &LSpaceVerdict) -> Result<i64> {
    if !verdict.is_lspace_over_f2 {
        return Err(Error::NotLSpace);
    }
    let n = d.component_count();
    if n != 1 {
        return Err(Error::NotAKnot(n));
    }
    Ok(-signature_gl(d)? / 2)
}
