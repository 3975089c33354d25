use std::collections::{BTreeSet, HashMap};

use super::{Edge, PlanarDiagram};

impl PlanarDiagram {
    /// Relabelling-invariant key. Equal diagrams up to edge relabelling and
    /// crossing order get equal keys; the converse also holds for connected
    /// diagrams (every traversal start is tried).
    pub fn canonical_key(&self) -> Vec<u32> {
        let mut piece_keys: Vec<Vec<u32>> = if self.crossings.is_empty() {
            vec![]
        } else {
            let pieces = self.split_pieces();
            pieces
                .iter()
                .filter(|p| !p.crossings.is_empty())
                .map(|p| p.connected_key())
                .collect()
        };
        piece_keys.sort();
        let mut out = vec![
            self.free_loops as u32,
            self.dotted_loops as u32,
            piece_keys.len() as u32,
        ];
        for k in piece_keys {
            out.push(k.len() as u32);
            out.extend(k);
        }
        out
    }

    fn connected_key(&self) -> Vec<u32> {
        let darts = self.darts();
        let comps = self.strand_components();
        let comp_of = self.component_of_edges();
        let mut best: Option<Vec<u32>> = None;
        for start in self.edges() {
            let mut label: HashMap<Edge, u32> = HashMap::new();
            let mut order: Vec<Edge> = vec![];
            let mut pending = Some(start);
            while let Some(s) = pending.take() {
                let c = &comps[comp_of[&s]];
                let i = c
                    .iter()
                    .position(|&e| e == s)
                    .expect("edge in its component");
                for k in 0..c.len() {
                    let e = c[(i + k) % c.len()];
                    label.insert(e, label.len() as u32 + 1);
                    order.push(e);
                }
                // next component: first labelled edge whose head crossing
                // carries an unlabelled strand; start on that strand's outgoing edge
                for &e in &order {
                    let (x, _) = self.head_of(&darts, e);
                    let cr = &self.crossings[x];
                    if let Some(p) =
                        (0..4).find(|&p| !label.contains_key(&cr.edges[p]) && !cr.is_incoming(p))
                    {
                        pending = Some(cr.edges[p]);
                        break;
                    }
                }
            }
            let mut quads: Vec<[u32; 5]> = self
                .crossings
                .iter()
                .map(|c| {
                    let q = c.edges.map(|e| label[&e]);
                    [q[0], q[1], q[2], q[3], (c.sign.as_i32() + 1) as u32]
                })
                .collect();
            quads.sort();
            let dotted: BTreeSet<u32> = self
                .dots
                .iter()
                .map(|e| {
                    comps[comp_of[e]]
                        .iter()
                        .map(|f| label[f])
                        .min()
                        .expect("nonempty")
                })
                .collect();
            let mut key: Vec<u32> = quads.into_iter().flatten().collect();
            key.push(u32::MAX);
            key.extend(dotted);
            if best.as_ref().map_or(true, |b| key < *b) {
                best = Some(key);
            }
        }
        best.unwrap_or_default()
    }
}
