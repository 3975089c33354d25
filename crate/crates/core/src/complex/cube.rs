use std::collections::BTreeMap;

use super::{Bigrading, ChainComplex};
use crate::diagram::{PlanarDiagram, SMOOTHINGS};
use crate::error::{Error, Result};
use crate::exactalg::Coeff;
use crate::exec::{self, Mode};
use crate::util::UnionFind;

pub const DEFAULT_CROSSING_LIMIT: usize = 16;

#[derive(Clone, Copy, Debug)]
pub struct CubeOptions {
    pub reduced: bool,
    pub crossing_limit: usize,
    pub mode: Mode,
}

impl Default for CubeOptions {
    fn default() -> Self {
        CubeOptions {
            reduced: false,
            crossing_limit: DEFAULT_CROSSING_LIMIT,
            mode: Mode::default(),
        }
    }
}

/// Circles of one resolution.
struct Vertex {
    /// circle index of every edge (by edge index)
    circle: Vec<u32>,
    count: usize,
    base: Option<usize>,
}

impl Vertex {
    /// Number of generators and the full label mask of local generator `k`.
    fn gen_count(&self) -> usize {
        1 << (self.count - usize::from(self.base.is_some()))
    }

    fn mask_of(&self, k: usize) -> u64 {
        match self.base {
            None => k as u64,
            Some(b) => {
                let low = k as u64 & ((1u64 << b) - 1);
                let high = (k as u64 >> b) << (b + 1);
                low | (1 << b) | high
            }
        }
    }

    fn local_of(&self, mask: u64) -> usize {
        match self.base {
            None => mask as usize,
            Some(b) => {
                let low = mask & ((1u64 << b) - 1);
                let high = mask >> (b + 1);
                (low | (high << b)) as usize
            }
        }
    }
}

/// The Bar-Natan complex of a diagram over `R[H]`. With `reduced` the circle
/// through the base point (smallest edge by default) is labelled `X` and
/// quantum gradings are shifted up by one.
pub fn build_cube<R: Coeff>(d: &PlanarDiagram, opts: CubeOptions) -> Result<ChainComplex<R>> {
    let n = d.crossing_count();
    if n > opts.crossing_limit {
        return Err(Error::TooManyCrossings {
            count: n,
            limit: opts.crossing_limit,
        });
    }
    let d = if opts.reduced { d.based() } else { d.clone() };
    let edges: Vec<u32> = d.edges().into_iter().collect();
    let eidx = |e: u32| edges.binary_search(&e).expect("known edge");
    let quads: Vec<[usize; 4]> = d.crossings().iter().map(|c| c.edges.map(eidx)).collect();
    let loops = d.free_loops();
    let base_edge = d.base_point().map(eidx);
    let n_plus = d.positive_count() as i32;
    let n_minus = d.negative_count() as i32;

    let vertices: Vec<Vertex> = exec::map_range(opts.mode, 1usize << n, |v| {
        let mut uf = UnionFind::new(edges.len());
        for (x, q) in quads.iter().enumerate() {
            for (a, b) in SMOOTHINGS[v >> x & 1] {
                uf.union(q[a], q[b]);
            }
        }
        let mut ids: BTreeMap<usize, u32> = BTreeMap::new();
        let mut circle = vec![0u32; edges.len()];
        for (e, slot) in circle.iter_mut().enumerate() {
            let r = uf.find(e);
            let next = ids.len() as u32;
            *slot = *ids.entry(r).or_insert(next);
        }
        let count = ids.len() + loops;
        let base = if opts.reduced {
            Some(match base_edge {
                Some(b) => circle[b] as usize,
                None => ids.len(),
            })
        } else {
            None
        };
        Vertex {
            circle,
            count,
            base,
        }
    });
    if vertices.iter().any(|v| v.count > 62) {
        return Err(Error::TooManyCrossings {
            count: n,
            limit: opts.crossing_limit,
        });
    }
    if opts.reduced && loops == 0 && edges.is_empty() {
        return Err(Error::MissingBasePoint);
    }

    let mut offset = Vec::with_capacity(vertices.len() + 1);
    let mut total = 0usize;
    for v in &vertices {
        offset.push(total);
        total += v.gen_count();
    }
    let shift = i32::from(opts.reduced);
    let mut gens = Vec::with_capacity(total);
    for (v, vx) in vertices.iter().enumerate() {
        let r = v.count_ones() as i32;
        for k in 0..vx.gen_count() {
            let m = vx.mask_of(k);
            let xs = m.count_ones() as i32;
            let ones = vx.count as i32 - xs;
            gens.push(Bigrading::new(
                r - n_minus,
                ones - xs + r + n_plus - 2 * n_minus + shift,
            ));
        }
    }

    // entries per source vertex: (source local, target vertex, target local, coeff)
    let per_vertex: Vec<Vec<(usize, usize, usize, i64)>> =
        exec::map_range(opts.mode, vertices.len(), |v| {
            let src = &vertices[v];
            let mut out = vec![];
            for (x, q) in quads.iter().enumerate() {
                if v >> x & 1 == 1 {
                    continue;
                }
                let w = v | 1 << x;
                let tgt = &vertices[w];
                let sign: i64 = if (v & ((1 << x) - 1)).count_ones() % 2 == 0 {
                    1
                } else {
                    -1
                };
                // image of every untouched source circle
                let mut image = vec![usize::MAX; src.count];
                for (e, &c) in src.circle.iter().enumerate() {
                    image[c as usize] = tgt.circle[e] as usize;
                }
                let strands = src.count - loops;
                let tstrands = tgt.count - loops;
                for l in 0..loops {
                    image[strands + l] = tstrands + l;
                }
                let ca = src.circle[q[0]] as usize;
                let cb = src.circle[q[2]] as usize;
                for k in 0..src.gen_count() {
                    let m = src.mask_of(k);
                    let mut rest = 0u64;
                    for c in 0..src.count {
                        if c != ca && c != cb && m >> c & 1 == 1 {
                            rest |= 1 << image[c];
                        }
                    }
                    let mut emit = |mask: u64, coeff: i64| {
                        if let Some(b) = tgt.base {
                            if mask >> b & 1 == 0 {
                                return;
                            }
                        }
                        out.push((k, w, tgt.local_of(mask), sign * coeff));
                    };
                    if ca != cb {
                        let cm = tgt.circle[q[0]] as usize;
                        let xa = m >> ca & 1 == 1;
                        let xb = m >> cb & 1 == 1;
                        // 1·1 = 1, 1·X = X, X·X = H X
                        let lab = u64::from(xa || xb);
                        emit(rest | lab << cm, 1);
                    } else {
                        let c1 = tgt.circle[q[0]] as usize;
                        let c2 = tgt.circle[q[1]] as usize;
                        if m >> ca & 1 == 1 {
                            emit(rest | 1 << c1 | 1 << c2, 1);
                        } else {
                            emit(rest | 1 << c2, 1);
                            emit(rest | 1 << c1, 1);
                            emit(rest, -1);
                        }
                    }
                }
            }
            out
        });

    let mut cx = ChainComplex::new(gens);
    for (v, entries) in per_vertex.into_iter().enumerate() {
        for (k, w, l, c) in entries {
            cx.add_entry(offset[v] + k, offset[w] + l, R::from_i64(c))?;
        }
    }
    Ok(cx)
}
