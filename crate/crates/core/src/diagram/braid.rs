use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

use super::{Edge, Orient, PlanarDiagram, Raw};
use crate::error::{Error, Result};

/// Closure of a braid word on `strands` strands. Letter `i > 0` is the
/// positive generator between strands `i` and `i + 1`, `-i` its inverse.
pub fn from_braid(strands: usize, word: &[i32]) -> Result<PlanarDiagram> {
    if strands == 0 {
        return Err(Error::Syntax("braid needs at least one strand".into()));
    }
    let mut cur: Vec<Edge> = (1..=strands as Edge).collect();
    let mut next = strands as Edge + 1;
    let mut quads = vec![];
    let mut flags = vec![];
    for &g in word {
        let i = g.unsigned_abs() as usize;
        if i == 0 || i >= strands {
            return Err(Error::Syntax(format!(
                "generator {g} out of range for {strands} strands"
            )));
        }
        let (l_in, r_in) = (cur[i - 1], cur[i]);
        let (new_l, new_r) = (next, next + 1);
        next += 2;
        if g > 0 {
            quads.push([r_in, new_r, new_l, l_in]);
            flags.push([true, false, false, true]);
        } else {
            quads.push([l_in, r_in, new_r, new_l]);
            flags.push([true, true, false, false]);
        }
        cur[i - 1] = new_l;
        cur[i] = new_r;
    }
    let mut loops = 0;
    let mut close: BTreeMap<Edge, Edge> = BTreeMap::new();
    for (j, &e) in cur.iter().enumerate() {
        let start = j as Edge + 1;
        if e == start {
            loops += 1;
        } else {
            close.insert(e, start);
        }
    }
    let used: BTreeSet<Edge> = quads
        .iter()
        .flatten()
        .map(|e| *close.get(e).unwrap_or(e))
        .collect();
    let compact: BTreeMap<Edge, Edge> = used
        .iter()
        .enumerate()
        .map(|(k, &e)| (e, k as Edge + 1))
        .collect();
    let quads = quads
        .into_iter()
        .map(|q| q.map(|e| compact[close.get(&e).unwrap_or(&e)]))
        .collect();
    let raw = Raw {
        quads,
        free_loops: loops,
        dotted_loops: 0,
        base_point: None,
        dots: BTreeSet::new(),
        name: None,
    };
    PlanarDiagram::assemble(raw, Orient::Keep(&flags))
}

/// The positive torus knot `T(p, q)` as the closure of `(s_1 ... s_{p-1})^q`.
pub fn torus_knot(p: i64, q: i64) -> Result<PlanarDiagram> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::NotCoprime(p, q));
    }
    let word: Vec<i32> = (0..q).flat_map(|_| 1..p as i32).collect();
    Ok(from_braid(p as usize, &word)?.with_name(format!("T({p},{q})")))
}
