use std::collections::VecDeque;

use super::{Dart, PlanarDiagram, Sign};
use crate::error::{Error, Result};

/// A complementary region, as the cyclic list of darts `(crossing, position)`
/// whose outgoing edges bound it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Face {
    pub darts: Vec<Dart>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

/// Corner `k` of a crossing lies between positions `k` and `k + 1`.
#[derive(Clone, Debug)]
pub struct Checkerboard {
    pub faces: Vec<Face>,
    pub colors: Vec<Color>,
    /// Face index of each corner, per crossing.
    pub corner_face: Vec<[usize; 4]>,
}

/// Shading data of one crossing relative to the white faces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossingColorData {
    /// 0 if corners 0 and 2 are white, 1 if corners 1 and 3 are.
    pub white_corner: usize,
    pub white_faces: (usize, usize),
    /// Whether the orientation-respecting smoothing joins the two white corners.
    pub oriented_joins_white: bool,
}

impl PlanarDiagram {
    /// Faces of a connected diagram with at least one crossing.
    pub fn faces(&self) -> Result<Vec<Face>> {
        let pieces = self.split_pieces().len();
        if pieces != 1 || self.crossings.is_empty() {
            return Err(Error::Disconnected(pieces));
        }
        let darts = self.darts();
        let n = self.crossings.len();
        let mut seen = vec![[false; 4]; n];
        let mut faces = vec![];
        for x in 0..n {
            for p in 0..4 {
                if seen[x][p] {
                    continue;
                }
                let mut f = vec![];
                let mut cur = (x, p);
                while !seen[cur.0][cur.1] {
                    seen[cur.0][cur.1] = true;
                    f.push(cur);
                    let e = self.crossings[cur.0].edges[cur.1];
                    let (y, q) = Self::partner(&darts, e, cur);
                    cur = (y, (q + 1) % 4);
                }
                faces.push(Face { darts: f });
            }
        }
        Ok(faces)
    }

    /// Two-colouring of the faces; the face holding corner 0 of crossing 0 is white.
    pub fn checkerboard(&self) -> Result<Checkerboard> {
        let faces = self.faces()?;
        let n = self.crossings.len();
        let mut corner_face = vec![[usize::MAX; 4]; n];
        for (i, f) in faces.iter().enumerate() {
            for &(x, p) in &f.darts {
                // leaving through position p, the face sits in corner p - 1
                corner_face[x][(p + 3) % 4] = i;
            }
        }
        let mut adj = vec![vec![]; faces.len()];
        for cf in &corner_face {
            for k in 0..4 {
                adj[cf[k]].push(cf[(k + 1) % 4]);
            }
        }
        let mut colors: Vec<Option<Color>> = vec![None; faces.len()];
        let start = corner_face[0][0];
        colors[start] = Some(Color::White);
        let mut queue = VecDeque::from([start]);
        while let Some(f) = queue.pop_front() {
            let c = colors[f].expect("queued faces are coloured");
            for &g in &adj[f] {
                match colors[g] {
                    None => {
                        colors[g] = Some(c.other());
                        queue.push_back(g);
                    }
                    Some(d) if d == c => return Err(Error::NotBipartite),
                    _ => {}
                }
            }
        }
        let colors = colors
            .into_iter()
            .map(|c| c.ok_or(Error::NotBipartite))
            .collect::<Result<Vec<_>>>()?;
        Ok(Checkerboard {
            faces,
            colors,
            corner_face,
        })
    }
}

impl Checkerboard {
    pub fn white_faces(&self) -> Vec<usize> {
        (0..self.faces.len())
            .filter(|&i| self.colors[i] == Color::White)
            .collect()
    }

    /// Swap the two colours.
    pub fn swapped(&self) -> Checkerboard {
        Checkerboard {
            faces: self.faces.clone(),
            colors: self.colors.iter().map(|c| c.other()).collect(),
            corner_face: self.corner_face.clone(),
        }
    }

    pub fn crossing_data(&self, d: &PlanarDiagram) -> Vec<CrossingColorData> {
        d.crossings
            .iter()
            .zip(&self.corner_face)
            .map(|(c, cf)| {
                let k = if self.colors[cf[0]] == Color::White {
                    0
                } else {
                    1
                };
                // the oriented smoothing of a positive crossing joins (0,1),(2,3),
                // which merges corners 1 and 3; for a negative crossing 0 and 2
                let merged = match c.sign {
                    Sign::Positive => 1,
                    Sign::Negative => 0,
                };
                CrossingColorData {
                    white_corner: k,
                    white_faces: (cf[k], cf[k + 2]),
                    oriented_joins_white: merged == k,
                }
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::parse_pd;

    #[test]
    fn face_counts() {
        let t = parse_pd("PD[X(1,5,2,4), X(3,1,4,6), X(5,3,6,2)]").unwrap();
        assert_eq!(t.faces().unwrap().len(), 5);
        let k = parse_pd(
            "PD[X(1,5,2,4), X(5,11,6,10), X(3,8,4,9), X(9,2,10,3), X(16,11,17,12), \
             X(14,8,15,7), X(6,16,7,15), X(18,13,1,14), X(12,17,13,18)]",
        )
        .unwrap();
        assert_eq!(k.faces().unwrap().len(), 11);
        let cb = k.checkerboard().unwrap();
        let w = cb.white_faces().len();
        assert!(w >= 2 && w <= 9);
        assert_eq!(cb.swapped().white_faces().len(), 11 - w);
        let kink = parse_pd("PD[X(1,2,2,1)]").unwrap();
        assert_eq!(kink.faces().unwrap().len(), 3);
    }

    #[test]
    fn disconnected_has_no_faces() {
        assert!(matches!(
            crate::diagram::PlanarDiagram::unlink(2).faces(),
            Err(Error::Disconnected(_))
        ));
    }
}
