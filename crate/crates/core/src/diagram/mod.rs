//! Planar link diagrams in PD notation.
//!
//! A crossing is a quadruple of edge labels listed counterclockwise, starting
//! from the incoming under-strand. Positions 0 and 2 carry the under-strand
//! (in, out); positions 1 and 3 carry the over-strand, whose direction is
//! recorded by the crossing sign: a positive crossing has the over-strand
//! entering at position 3.

mod braid;
mod canon;
mod faces;
mod ops;
mod parse;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use braid::{from_braid, torus_knot};
pub use faces::{Checkerboard, Color, CrossingColorData, Face};
pub(crate) use ops::SMOOTHINGS;
pub use parse::{parse_json, parse_pd, DiagramJson, PdField};

pub type Edge = u32;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn as_i32(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub edges: [Edge; 4],
    pub sign: Sign,
}

impl Crossing {
    /// Position where the over-strand enters.
    pub fn over_in(&self) -> usize {
        match self.sign {
            Sign::Positive => 3,
            Sign::Negative => 1,
        }
    }

    pub fn over_out(&self) -> usize {
        (self.over_in() + 2) % 4
    }

    pub fn is_incoming(&self, pos: usize) -> bool {
        pos == 0 || pos == self.over_in()
    }
}

/// A crossing together with a choice of smoothing (0 or 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingSite {
    pub index: usize,
    pub resolution_label: u8,
}

impl CrossingSite {
    pub fn new(index: usize, resolution_label: u8) -> Self {
        CrossingSite {
            index,
            resolution_label,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarDiagram {
    pub(crate) crossings: Vec<Crossing>,
    /// Crossingless circles; these are split unknotted components.
    pub(crate) free_loops: usize,
    /// How many of the free loops carry a dot.
    pub(crate) dotted_loops: usize,
    pub(crate) base_point: Option<Edge>,
    /// One marked edge per dotted component.
    pub(crate) dots: BTreeSet<Edge>,
    pub(crate) name: Option<String>,
}

/// Location of an edge end: (crossing index, position).
pub(crate) type Dart = (usize, usize);

/// How to orient the strands of a freshly assembled set of quadruples.
pub(crate) enum Orient<'a> {
    /// Position 0 of every quadruple must be the incoming under-strand.
    Strict,
    /// For each component keep the in/out status of its first dart as given
    /// by the flags (indexed by crossing, then position).
    Keep(&'a [[bool; 4]]),
}

pub(crate) struct Raw {
    pub quads: Vec<[Edge; 4]>,
    pub free_loops: usize,
    pub dotted_loops: usize,
    pub base_point: Option<Edge>,
    pub dots: BTreeSet<Edge>,
    pub name: Option<String>,
}

impl PlanarDiagram {
    pub fn unknot() -> Self {
        Self::unlink(1)
    }

    pub fn unlink(k: usize) -> Self {
        PlanarDiagram {
            crossings: vec![],
            free_loops: k,
            dotted_loops: 0,
            base_point: None,
            dots: BTreeSet::new(),
            name: None,
        }
    }

    /// Build a diagram from quadruples whose position 0 is the incoming
    /// under-strand.
    pub fn from_pd(quads: Vec<[Edge; 4]>) -> Result<Self> {
        let free_loops = usize::from(quads.is_empty());
        Self::assemble(
            Raw {
                quads,
                free_loops,
                dotted_loops: 0,
                base_point: None,
                dots: BTreeSet::new(),
                name: None,
            },
            Orient::Strict,
        )
    }

    pub(crate) fn assemble(raw: Raw, orient: Orient<'_>) -> Result<Self> {
        let Raw {
            quads,
            free_loops,
            dotted_loops,
            base_point,
            dots,
            name,
        } = raw;
        let partners = dart_partners(&quads)?;
        let n = quads.len();
        let mut visited = vec![[false; 4]; n];
        // entering dart per (crossing, strand): strand 0 = under (pos 0/2), 1 = over (1/3)
        let mut enter: Vec<[usize; 2]> = vec![[usize::MAX; 2]; n];

        for x in 0..n {
            for p in 0..4 {
                if visited[x][p] {
                    continue;
                }
                let comp = trace_component(&quads, &partners, (x, p));
                for &(y, q) in &comp {
                    visited[y][q] = true;
                    visited[y][(q + 2) % 4] = true;
                }
                let forward = match orient {
                    Orient::Strict => strict_direction(&quads, &comp)?,
                    Orient::Keep(flags) => {
                        // first dart in (crossing, position) order decides
                        let mut best: Option<(Dart, bool)> = None;
                        for &(y, q) in &comp {
                            for (pos, entering) in [(q, true), ((q + 2) % 4, false)] {
                                if best.map_or(true, |(d, _)| (y, pos) < d) {
                                    best = Some(((y, pos), entering));
                                }
                            }
                        }
                        let ((y, pos), entering) = best.expect("nonempty component");
                        flags[y][pos] == entering
                    }
                };
                for &(y, q) in &comp {
                    let e = if forward { q } else { (q + 2) % 4 };
                    enter[y][q % 2] = e;
                }
            }
        }

        let mut crossings = Vec::with_capacity(n);
        for (x, quad) in quads.iter().enumerate() {
            let shift = if enter[x][0] == 0 { 0 } else { 2 };
            let edges = [
                quad[shift % 4],
                quad[(shift + 1) % 4],
                quad[(shift + 2) % 4],
                quad[(shift + 3) % 4],
            ];
            let over_in = (enter[x][1] + 4 - shift) % 4;
            let sign = if over_in == 3 {
                Sign::Positive
            } else {
                Sign::Negative
            };
            crossings.push(Crossing { edges, sign });
        }
        let d = PlanarDiagram {
            crossings,
            free_loops,
            dotted_loops,
            base_point,
            dots,
            name,
        };
        if let Some(b) = d.base_point {
            if !d.has_edge(b) {
                return Err(Error::Syntax(format!("base point {b} is not an edge")));
            }
        }
        for &e in &d.dots {
            if !d.has_edge(e) {
                return Err(Error::Syntax(format!("dot on unknown edge {e}")));
            }
        }
        Ok(d)
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn free_loops(&self) -> usize {
        self.free_loops
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn base_point(&self) -> Option<Edge> {
        self.base_point
    }

    pub fn with_base_point(mut self, e: Edge) -> Result<Self> {
        if !self.has_edge(e) {
            return Err(Error::Syntax(format!("base point {e} is not an edge")));
        }
        self.base_point = Some(e);
        Ok(self)
    }

    /// The diagram with a base point, defaulting to the smallest edge label.
    pub fn based(&self) -> Self {
        let mut d = self.clone();
        if d.base_point.is_none() {
            d.base_point = d.edges().into_iter().next();
        }
        d
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.crossings.iter().any(|c| c.edges.contains(&e))
    }

    pub fn edges(&self) -> BTreeSet<Edge> {
        self.crossings.iter().flat_map(|c| c.edges).collect()
    }

    pub fn dots(&self) -> &BTreeSet<Edge> {
        &self.dots
    }

    pub fn clear_dots(&mut self) {
        self.dots.clear();
        self.dotted_loops = 0;
    }

    pub fn dotted_loops(&self) -> usize {
        self.dotted_loops
    }

    pub fn positive_count(&self) -> usize {
        self.crossings
            .iter()
            .filter(|c| c.sign == Sign::Positive)
            .count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossing_count() - self.positive_count()
    }

    pub fn writhe(&self) -> i64 {
        self.positive_count() as i64 - self.negative_count() as i64
    }

    /// Darts of every edge: `edge -> [(crossing, position); 2]`.
    pub(crate) fn darts(&self) -> HashMap<Edge, [Dart; 2]> {
        let quads: Vec<[Edge; 4]> = self.crossings.iter().map(|c| c.edges).collect();
        dart_partners(&quads).expect("validated diagram")
    }

    /// The other end of the edge leaving dart `(x, p)`.
    pub(crate) fn partner(darts: &HashMap<Edge, [Dart; 2]>, e: Edge, at: Dart) -> Dart {
        let [u, v] = darts[&e];
        if u == at {
            v
        } else {
            u
        }
    }

    /// Components as edge sequences in the direction of travel, ordered by
    /// smallest edge label. Free loops are not included.
    pub fn strand_components(&self) -> Vec<Vec<Edge>> {
        let darts = self.darts();
        let mut seen: BTreeSet<Edge> = BTreeSet::new();
        let mut comps = Vec::new();
        for e in self.edges() {
            if seen.contains(&e) {
                continue;
            }
            // start from the tail of e
            let mut comp = Vec::new();
            let mut cur = e;
            loop {
                seen.insert(cur);
                comp.push(cur);
                let head = self.head_of(&darts, cur);
                let (y, q) = head;
                let next = self.crossings[y].edges[(q + 2) % 4];
                if next == e {
                    break;
                }
                cur = next;
            }
            comps.push(comp);
        }
        comps
    }

    /// The dart where edge `e` ends.
    pub(crate) fn head_of(&self, darts: &HashMap<Edge, [Dart; 2]>, e: Edge) -> Dart {
        let [u, v] = darts[&e];
        if self.crossings[u.0].is_incoming(u.1) {
            u
        } else {
            v
        }
    }

    pub fn component_count(&self) -> usize {
        self.strand_components().len() + self.free_loops
    }

    /// Component index of every edge (indices follow `strand_components`).
    pub fn component_of_edges(&self) -> BTreeMap<Edge, usize> {
        let mut m = BTreeMap::new();
        for (i, c) in self.strand_components().iter().enumerate() {
            for &e in c {
                m.insert(e, i);
            }
        }
        m
    }

    /// Swap over and under at every crossing.
    pub fn mirror(&self) -> Self {
        let crossings = self
            .crossings
            .iter()
            .map(|c| {
                let [a, b, cc, d] = c.edges;
                let edges = match c.sign {
                    Sign::Positive => [d, a, b, cc],
                    Sign::Negative => [b, cc, d, a],
                };
                Crossing {
                    edges,
                    sign: c.sign.flip(),
                }
            })
            .collect();
        PlanarDiagram {
            crossings,
            ..self.clone()
        }
    }

    /// Reverse the orientation of the listed components
    /// (indices as in `strand_components`).
    pub fn reverse_components(&self, which: &[usize]) -> Result<Self> {
        let comps = self.strand_components();
        let comp_of = self.component_of_edges();
        for &w in which {
            if w >= comps.len() {
                return Err(Error::Syntax(format!("no component {w} to reverse")));
            }
        }
        let flags: Vec<[bool; 4]> = self
            .crossings
            .iter()
            .map(|c| {
                let mut f = [false; 4];
                for (p, slot) in f.iter_mut().enumerate() {
                    let flip = which.contains(&comp_of[&c.edges[p]]);
                    *slot = c.is_incoming(p) != flip;
                }
                f
            })
            .collect();
        let raw = Raw {
            quads: self.crossings.iter().map(|c| c.edges).collect(),
            free_loops: self.free_loops,
            dotted_loops: self.dotted_loops,
            base_point: self.base_point,
            dots: self.dots.clone(),
            name: self.name.clone(),
        };
        Self::assemble(raw, Orient::Keep(&flags))
    }

    /// Incoming flags of the current orientation, for re-assembly.
    pub(crate) fn incoming_flags(&self) -> Vec<[bool; 4]> {
        self.crossings
            .iter()
            .map(|c| [true, c.over_in() == 1, false, c.over_in() == 3])
            .collect()
    }

    /// Connected pieces of the crossing/edge incidence graph. Free loops are
    /// returned as separate one-loop diagrams.
    pub fn split_pieces(&self) -> Vec<PlanarDiagram> {
        let n = self.crossings.len();
        let mut uf = crate::util::UnionFind::new(n);
        let darts = self.darts();
        for [u, v] in darts.values() {
            uf.union(u.0, v.0);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for x in 0..n {
            groups.entry(uf.find(x)).or_default().push(x);
        }
        let mut pieces: Vec<PlanarDiagram> = groups
            .values()
            .map(|xs| {
                let crossings: Vec<Crossing> =
                    xs.iter().map(|&x| self.crossings[x].clone()).collect();
                let edges: BTreeSet<Edge> = crossings.iter().flat_map(|c| c.edges).collect();
                PlanarDiagram {
                    crossings,
                    free_loops: 0,
                    dotted_loops: 0,
                    base_point: self.base_point.filter(|b| edges.contains(b)),
                    dots: self
                        .dots
                        .iter()
                        .copied()
                        .filter(|e| edges.contains(e))
                        .collect(),
                    name: None,
                }
            })
            .collect();
        for i in 0..self.free_loops {
            let mut u = PlanarDiagram::unknot();
            if i < self.dotted_loops {
                u.dotted_loops = 1;
            }
            pieces.push(u);
        }
        pieces
    }

    /// Connected: a single piece (a lone free loop counts as connected).
    pub fn is_connected(&self) -> bool {
        self.split_pieces().len() <= 1
    }

    /// Every edge runs from an over-crossing to an under-crossing.
    pub fn is_alternating(&self) -> bool {
        let darts = self.darts();
        darts.values().all(|[u, v]| (u.1 % 2) != (v.1 % 2))
    }

    /// Sound but incomplete unlink recognition: true when greedy R1/R2
    /// simplification removes every crossing and leaves `k` circles.
    pub fn is_unlink_diagram(&self, k: usize) -> bool {
        let s = self.greedy_simplify();
        s.crossing_count() == 0 && s.free_loops == k
    }

    /// Every component carries a dot.
    pub fn all_components_dotted(&self) -> bool {
        let comp_of = self.component_of_edges();
        let dotted: BTreeSet<usize> = self.dots.iter().map(|e| comp_of[e]).collect();
        dotted.len() == self.strand_components().len() && self.dotted_loops == self.free_loops
    }

    /// Dotted components as indices (strand components first, then loops).
    pub fn dotted_component_indices(&self) -> Vec<usize> {
        let comp_of = self.component_of_edges();
        let ns = self.strand_components().len();
        let mut v: BTreeSet<usize> = self.dots.iter().map(|e| comp_of[e]).collect();
        for i in 0..self.dotted_loops {
            v.insert(ns + i);
        }
        v.into_iter().collect()
    }
}

/// `edge -> its two darts`, checking every label occurs exactly twice.
pub(crate) fn dart_partners(quads: &[[Edge; 4]]) -> Result<HashMap<Edge, [Dart; 2]>> {
    let mut m: HashMap<Edge, Vec<Dart>> = HashMap::new();
    for (x, q) in quads.iter().enumerate() {
        for (p, &e) in q.iter().enumerate() {
            m.entry(e).or_default().push((x, p));
        }
    }
    let mut out = HashMap::with_capacity(m.len());
    let mut keys: Vec<Edge> = m.keys().copied().collect();
    keys.sort_unstable();
    for e in keys {
        let v = &m[&e];
        if v.len() != 2 {
            return Err(Error::EdgeMultiplicity {
                edge: e,
                count: v.len(),
            });
        }
        out.insert(e, [v[0], v[1]]);
    }
    Ok(out)
}

/// Follow a strand entering at `start`; returns the entering darts in order.
fn trace_component(
    quads: &[[Edge; 4]],
    partners: &HashMap<Edge, [Dart; 2]>,
    start: Dart,
) -> Vec<Dart> {
    let mut out = vec![];
    let mut cur = start;
    loop {
        out.push(cur);
        let exit = (cur.0, (cur.1 + 2) % 4);
        let e = quads[exit.0][exit.1];
        let [u, v] = partners[&e];
        let next = if u == exit { v } else { u };
        if next == start {
            break;
        }
        cur = next;
        if out.len() > 4 * quads.len() + 4 {
            unreachable!("strand traversal did not close");
        }
    }
    out
}

/// Direction of a traced component under the strict PD convention.
fn strict_direction(quads: &[[Edge; 4]], comp: &[Dart]) -> Result<bool> {
    let mut forward: Option<bool> = None;
    for &(y, q) in comp {
        if q % 2 == 0 {
            let f = q == 0;
            match forward {
                None => forward = Some(f),
                Some(g) if g != f => return Err(Error::Orientation(y)),
                _ => {}
            }
        }
    }
    if let Some(f) = forward {
        return Ok(f);
    }
    // over-strand only: KnotTheory's rule, the over-strand runs d -> b when
    // the labels are consecutive that way
    let (y, q) = comp[0];
    let [_, b, _, d] = quads[y];
    let enters_at_3 = b.wrapping_sub(d) == 1 || d > b + 1;
    let enter_pos = if enters_at_3 { 3 } else { 1 };
    Ok(q == enter_pos)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil() -> PlanarDiagram {
        parse_pd("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]").unwrap()
    }

    #[test]
    fn trefoil_signs() {
        let t = trefoil();
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.positive_count(), 3);
        assert_eq!(t.component_count(), 1);
        assert_eq!(t.writhe(), 3);
    }

    #[test]
    fn mirror_involution() {
        let t = trefoil();
        let m = t.mirror();
        assert_eq!(m.writhe(), -3);
        assert_eq!(m.mirror(), t);
        assert_eq!(PlanarDiagram::unknot().mirror(), PlanarDiagram::unknot());
    }

    #[test]
    fn reversing_a_knot_keeps_signs() {
        let t = trefoil();
        let r = t.reverse_components(&[0]).unwrap();
        assert_eq!(r.writhe(), 3);
        assert_eq!(r.component_count(), 1);
    }

    #[test]
    fn reversing_one_link_component_flips_linking() {
        let l = parse_pd("PD[X(4,1,3,2), X(2,3,1,4)]").unwrap();
        assert_eq!(l.component_count(), 2);
        let r = l.reverse_components(&[0]).unwrap();
        assert_eq!(r.writhe(), -l.writhe());
    }

    #[test]
    fn bad_edge_multiplicity() {
        assert!(matches!(
            parse_pd("PD[X(1,2,3,4)]"),
            Err(Error::EdgeMultiplicity { .. })
        ));
    }

    #[test]
    fn inconsistent_orientation() {
        // both quadruples claim edge 1 as incoming under-strand
        assert!(matches!(
            parse_pd("PD[X(1,4,2,3), X(1,3,2,4)]"),
            Err(Error::Orientation(_))
        ));
    }

    #[test]
    fn alternating_and_connected() {
        assert!(trefoil().is_alternating());
        assert!(trefoil().is_connected());
        assert!(PlanarDiagram::unlink(2).is_unlink_diagram(2));
        assert!(!PlanarDiagram::unlink(2).is_connected());
    }
}
