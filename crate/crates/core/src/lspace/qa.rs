use std::collections::HashSet;

use super::{Justification, ResolutionTree, Split};
use crate::diagram::{CrossingSite, PlanarDiagram};
use crate::error::{Error, Result};
use crate::invariants::determinant;

pub const DEFAULT_BUDGET: usize = 100_000;

#[derive(Clone, Debug, PartialEq)]
pub enum QaOutcome {
    Certified(ResolutionTree),
    /// No certificate found; `exhausted` is set when the node budget ran out.
    Inconclusive {
        explored: usize,
        exhausted: bool,
    },
}

struct Search {
    budget: usize,
    explored: usize,
    failed: HashSet<Vec<u32>>,
}

/// Leaf of a quasi-alternating certificate: the unknot or a connected
/// alternating diagram (after greedy simplification).
pub(crate) fn leaf_kind(d: &PlanarDiagram) -> Option<Justification> {
    let s = d.greedy_simplify();
    if d.component_count() == 1 && super::is_unknot(d) {
        return Some(Justification::Unknot);
    }
    if s.crossing_count() > 0
        && s.is_connected()
        && d.is_connected()
        && (d.is_alternating() || s.is_alternating())
    {
        return Some(Justification::Alternating);
    }
    None
}

impl Search {
    /// `None` when no certificate was found for this diagram.
    fn go(&mut self, d: &PlanarDiagram, det: u64) -> Result<Option<ResolutionTree>> {
        if let Some(j) = leaf_kind(d) {
            return Ok(Some(ResolutionTree {
                diagram: d.clone(),
                det,
                justification: j,
                split: None,
            }));
        }
        let key = d.canonical_key();
        if self.failed.contains(&key) {
            return Ok(None);
        }
        if self.explored >= self.budget {
            return Ok(None);
        }
        self.explored += 1;
        for x in 0..d.crossing_count() {
            let c0 = d.resolve(CrossingSite::new(x, 0))?;
            let c1 = d.resolve(CrossingSite::new(x, 1))?;
            let (d0, d1) = (determinant(&c0)?, determinant(&c1)?);
            if d0 == 0 || d1 == 0 || d0 + d1 != det {
                continue;
            }
            let Some(t0) = self.go(&c0, d0)? else {
                continue;
            };
            let Some(t1) = self.go(&c1, d1)? else {
                continue;
            };
            return Ok(Some(ResolutionTree {
                diagram: d.clone(),
                det,
                justification: Justification::Branch,
                split: Some(Split {
                    site: x,
                    children: Box::new([t0, t1]),
                }),
            }));
        }
        if self.explored < self.budget {
            self.failed.insert(key);
        }
        Ok(None)
    }
}

/// Depth-first search for a quasi-alternating certificate over the
/// crossings of the given diagram (sound, not complete).
pub fn qa_certify(d: &PlanarDiagram) -> Result<QaOutcome> {
    qa_certify_with(d, DEFAULT_BUDGET)
}

pub fn qa_certify_with(d: &PlanarDiagram, budget: usize) -> Result<QaOutcome> {
    let det = determinant(d)?;
    if det == 0 {
        return Err(Error::ZeroDeterminant);
    }
    let mut s = Search {
        budget,
        explored: 0,
        failed: HashSet::new(),
    };
    Ok(match s.go(d, det)? {
        Some(t) => QaOutcome::Certified(t),
        None => QaOutcome::Inconclusive {
            explored: s.explored,
            exhausted: s.explored >= budget,
        },
    })
}

/// Check a quasi-alternating certificate: exact resolutions, recorded
/// determinants, additivity with nonzero children, and leaf conditions.
pub fn verify_qa_certificate(t: &ResolutionTree) -> Result<()> {
    fn walk(t: &ResolutionTree, path: &str) -> Result<()> {
        let computed = determinant(&t.diagram)?;
        if computed != t.det {
            return Err(Error::DeterminantMismatch {
                node: path.into(),
                recorded: t.det,
                computed,
            });
        }
        match (&t.justification, &t.split) {
            (Justification::Branch, Some(s)) => {
                for (k, c) in s.children.iter().enumerate() {
                    let r = t.diagram.resolve(CrossingSite::new(s.site, k as u8))?;
                    if !super::same_diagram(&r, &c.diagram, false) {
                        return Err(Error::StructuralMismatch(format!(
                            "{path}.{k} is not the {k}-resolution"
                        )));
                    }
                    if c.det == 0 {
                        return Err(Error::StructuralMismatch(format!(
                            "{path}.{k} has determinant 0"
                        )));
                    }
                    walk(c, &format!("{path}.{k}"))?;
                }
                if s.children[0].det + s.children[1].det != t.det {
                    return Err(Error::StructuralMismatch(format!(
                        "{path}: determinants do not add up"
                    )));
                }
                Ok(())
            }
            (j, None) if leaf_kind(&t.diagram).as_ref() == Some(j) => Ok(()),
            _ => Err(Error::UnjustifiableLeaf(format!(
                "{path}: not an unknot or connected alternating leaf"
            ))),
        }
    }
    walk(t, "root")
}
