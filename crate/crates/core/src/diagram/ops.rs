use std::collections::BTreeSet;

use super::{CrossingSite, Edge, Orient, PlanarDiagram, Raw};
use crate::error::{Error, Result};
use crate::util::UnionFind;

/// Position pairs joined by the 0- and 1-smoothing of a crossing.
pub(crate) const SMOOTHINGS: [[(usize, usize); 2]; 2] = [[(0, 1), (2, 3)], [(0, 3), (1, 2)]];
const THROUGH: [(usize, usize); 2] = [(0, 2), (1, 3)];

impl PlanarDiagram {
    /// Delete crossings, joining the listed position pairs at each of them.
    /// Arcs that close up without crossings become free loops.
    pub(crate) fn rewire(&self, removed: &[(usize, [(usize, usize); 2])]) -> PlanarDiagram {
        let labels: Vec<Edge> = self.edges().into_iter().collect();
        let idx = |e: Edge| labels.binary_search(&e).expect("known edge");
        let mut uf = UnionFind::new(labels.len());
        for &(x, pairs) in removed {
            let q = self.crossings[x].edges;
            for (p, r) in pairs {
                uf.union(idx(q[p]), idx(q[r]));
            }
        }
        let gone: BTreeSet<usize> = removed.iter().map(|r| r.0).collect();
        let keep: Vec<usize> = (0..self.crossings.len())
            .filter(|x| !gone.contains(x))
            .collect();

        let mut live = vec![false; labels.len()];
        let quads: Vec<[Edge; 4]> = keep
            .iter()
            .map(|&x| {
                let q = self.crossings[x].edges;
                let mut out = [0; 4];
                for p in 0..4 {
                    let r = uf.find(idx(q[p]));
                    live[r] = true;
                    out[p] = labels[r];
                }
                out
            })
            .collect();
        let flags: Vec<[bool; 4]> = {
            let all = self.incoming_flags();
            keep.iter().map(|&x| all[x]).collect()
        };

        let mut roots: BTreeSet<usize> = BTreeSet::new();
        for i in 0..labels.len() {
            roots.insert(uf.find(i));
        }
        let new_loops: BTreeSet<usize> = roots.iter().copied().filter(|&r| !live[r]).collect();
        let mut dots = BTreeSet::new();
        let mut dotted_new = BTreeSet::new();
        for &e in &self.dots {
            let r = uf.find(idx(e));
            if live[r] {
                dots.insert(labels[r]);
            } else {
                dotted_new.insert(r);
            }
        }
        let base_point = self.base_point.and_then(|b| {
            let r = uf.find(idx(b));
            live[r].then_some(labels[r])
        });
        let raw = Raw {
            quads,
            free_loops: self.free_loops + new_loops.len(),
            dotted_loops: self.dotted_loops + dotted_new.len(),
            base_point,
            dots,
            name: None,
        };
        PlanarDiagram::assemble(raw, Orient::Keep(&flags)).expect("rewired diagram is consistent")
    }

    /// Replace one crossing by its 0- or 1-smoothing.
    pub fn resolve(&self, site: CrossingSite) -> Result<PlanarDiagram> {
        if site.index >= self.crossings.len() {
            return Err(Error::InvalidSite {
                index: site.index,
                count: self.crossings.len(),
            });
        }
        if site.resolution_label > 1 {
            return Err(Error::InvalidLabel(site.resolution_label));
        }
        Ok(self.rewire(&[(site.index, SMOOTHINGS[site.resolution_label as usize])]))
    }

    /// Connected sum of two knot diagrams, banded at their base points
    /// (smallest edge when unset).
    pub fn connected_sum(&self, other: &PlanarDiagram) -> Result<PlanarDiagram> {
        for d in [self, other] {
            let c = d.component_count();
            if c != 1 {
                return Err(Error::NotAKnot(c));
            }
        }
        if self.crossings.is_empty() {
            return Ok(other.clone());
        }
        if other.crossings.is_empty() {
            return Ok(self.clone());
        }
        let offset = self.edges().into_iter().max().unwrap_or(0);
        let mut quads: Vec<[Edge; 4]> = self.crossings.iter().map(|c| c.edges).collect();
        let n_a = quads.len();
        quads.extend(other.crossings.iter().map(|c| c.edges.map(|e| e + offset)));
        let mut flags = self.incoming_flags();
        flags.extend(other.incoming_flags());

        let ea = self.based().base_point.expect("nonempty");
        let eb = other.based().base_point.expect("nonempty");
        let ha = self.head_of(&self.darts(), ea);
        let hb = other.head_of(&other.darts(), eb);
        quads[ha.0][ha.1] = eb + offset;
        quads[n_a + hb.0][hb.1] = ea;

        let raw = Raw {
            quads,
            free_loops: 0,
            dotted_loops: 0,
            base_point: Some(ea),
            dots: BTreeSet::new(),
            name: None,
        };
        PlanarDiagram::assemble(raw, Orient::Keep(&flags))
    }

    /// Disjoint union; labels of later diagrams are shifted to stay distinct.
    pub fn disjoint_union(parts: &[PlanarDiagram]) -> PlanarDiagram {
        let mut quads = vec![];
        let mut flags = vec![];
        let mut dots = BTreeSet::new();
        let (mut loops, mut dotted) = (0, 0);
        let mut base = None;
        let mut offset = 0;
        for p in parts {
            quads.extend(p.crossings.iter().map(|c| c.edges.map(|e| e + offset)));
            flags.extend(p.incoming_flags());
            dots.extend(p.dots.iter().map(|e| e + offset));
            if base.is_none() {
                base = p.base_point.map(|b| b + offset);
            }
            loops += p.free_loops;
            dotted += p.dotted_loops;
            offset += p.edges().into_iter().max().unwrap_or(0);
        }
        let raw = Raw {
            quads,
            free_loops: loops,
            dotted_loops: dotted,
            base_point: base,
            dots,
            name: None,
        };
        PlanarDiagram::assemble(raw, Orient::Keep(&flags)).expect("union of valid diagrams")
    }

    /// Apply crossing-removing Reidemeister I and II moves until none applies.
    pub fn greedy_simplify(&self) -> PlanarDiagram {
        let pieces = self.split_pieces();
        if pieces.len() > 1 {
            let simplified: Vec<PlanarDiagram> =
                pieces.iter().map(|p| p.greedy_simplify()).collect();
            let mut out = PlanarDiagram::disjoint_union(&simplified);
            out.name = self.name.clone();
            return out;
        }
        let mut d = self.clone();
        loop {
            if let Some(next) = d.reidemeister_one() {
                d = next;
                continue;
            }
            if let Some(next) = d.reidemeister_two() {
                d = next;
                continue;
            }
            break;
        }
        if d.split_pieces().len() > 1 {
            // an R2 move may have split the diagram; simplify the pieces
            return d.greedy_simplify();
        }
        d.name = self.name.clone();
        d
    }

    fn reidemeister_one(&self) -> Option<PlanarDiagram> {
        let comps = self.component_count();
        for (x, c) in self.crossings.iter().enumerate() {
            let q = c.edges;
            if !(0..4).any(|p| q[p] == q[(p + 1) % 4]) {
                continue;
            }
            for s in SMOOTHINGS {
                let r = self.rewire(&[(x, s)]);
                if r.component_count() == comps {
                    return Some(r);
                }
            }
        }
        None
    }

    fn reidemeister_two(&self) -> Option<PlanarDiagram> {
        if self.crossings.len() < 2 {
            return None;
        }
        let faces = self.faces().ok()?;
        let darts = self.darts();
        for f in faces {
            if f.darts.len() != 2 {
                continue;
            }
            let (x, p) = f.darts[0];
            let (y, _) = f.darts[1];
            if x == y {
                continue;
            }
            let e = self.crossings[x].edges[p];
            let (yy, pp) = PlanarDiagram::partner(&darts, e, (x, p));
            debug_assert_eq!(yy, y);
            if p % 2 == pp % 2 {
                return Some(self.rewire(&[(x, THROUGH), (y, THROUGH)]));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    fn trefoil() -> PlanarDiagram {
        parse_pd("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]").unwrap()
    }

    #[test]
    fn resolve_kink() {
        let k = parse_pd("PD[X(1,2,2,1)]").unwrap();
        assert_eq!(k.component_count(), 1);
        let counts: Vec<usize> = (0..2)
            .map(|l| {
                k.resolve(CrossingSite::new(0, l))
                    .unwrap()
                    .component_count()
            })
            .collect();
        let mut sorted = counts.clone();
        sorted.sort();
        assert_eq!(sorted, vec![1, 2]);
        assert!(k.resolve(CrossingSite::new(1, 0)).is_err());
        assert!(k.resolve(CrossingSite::new(0, 2)).is_err());
    }

    #[test]
    fn resolve_drops_one_crossing() {
        let t = trefoil();
        for x in 0..3 {
            for l in 0..2 {
                let r = t.resolve(CrossingSite::new(x, l)).unwrap();
                assert_eq!(r.crossing_count(), 2);
                let dc = r.component_count() as i64 - 1;
                assert!(dc.abs() <= 1);
            }
        }
    }

    #[test]
    fn simplify_moves() {
        let k = parse_pd("PD[X(1,2,2,1)]").unwrap();
        let s = k.greedy_simplify();
        assert_eq!(s.crossing_count(), 0);
        assert_eq!(s.component_count(), 1);
        // R2-stabilised unknot: one strand passes twice over the other
        let r2 = parse_pd("PD[X(1,4,2,3), X(2,4,3,1)]").unwrap();
        assert!(r2.is_unlink_diagram(1) || r2.is_unlink_diagram(2));
        let t = trefoil();
        assert_eq!(t.greedy_simplify().crossing_count(), 3);
    }

    #[test]
    fn connected_sum_counts() {
        let t = trefoil();
        let s = t.connected_sum(&t).unwrap();
        assert_eq!(s.crossing_count(), 6);
        assert_eq!(s.writhe(), 6);
        assert_eq!(s.component_count(), 1);
        assert_eq!(t.connected_sum(&PlanarDiagram::unknot()).unwrap(), t);
        let l = parse_pd("PD[X(4,1,3,2), X(2,3,1,4)]").unwrap();
        assert!(matches!(t.connected_sum(&l), Err(Error::NotAKnot(2))));
    }
}
