use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::{Checkerboard, PlanarDiagram};
use crate::error::{Error, Result};

/// Goeritz matrix of a connected diagram for the white faces of `cb`, with
/// the row and column of the last white face deleted, and the correction
/// term `mu` of the Gordon-Litherland formula `sigma = sign(G) - mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoeritzData {
    pub matrix: Vec<Vec<i64>>,
    pub mu: i64,
}

/// Incidence number of a crossing: `+1` when corners 0 and 2 are white.
fn eta(white_corner: usize) -> i64 {
    if white_corner == 0 {
        1
    } else {
        -1
    }
}

pub fn goeritz(d: &PlanarDiagram) -> Result<GoeritzData> {
    Ok(goeritz_with(d, &d.checkerboard()?))
}

/// As `goeritz`, for a given colouring.
pub fn goeritz_with(d: &PlanarDiagram, cb: &Checkerboard) -> GoeritzData {
    let white = cb.white_faces();
    let pos = |f: usize| white.iter().position(|&w| w == f).expect("white face");
    let n = white.len();
    let mut g = vec![vec![0i64; n]; n];
    let mut mu = 0;
    for cd in cb.crossing_data(d) {
        let e = eta(cd.white_corner);
        let (a, b) = (pos(cd.white_faces.0), pos(cd.white_faces.1));
        if a != b {
            g[a][b] -= e;
            g[b][a] -= e;
            g[a][a] += e;
            g[b][b] += e;
        }
        // type II: the oriented smoothing does not join the white corners
        if !cd.oriented_joins_white {
            mu += e;
        }
    }
    g.pop();
    for row in g.iter_mut() {
        row.pop();
    }
    GoeritzData { matrix: g, mu }
}

/// Number of positive minus number of negative eigenvalues, by symmetric
/// Gaussian elimination over the rationals.
pub fn symmetric_signature(m: &[Vec<i64>]) -> i64 {
    let n = m.len();
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let mut sig = 0i64;
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let p = match active.iter().copied().find(|&i| !a[i][i].is_zero()) {
            Some(p) => p,
            None => {
                // all diagonal entries vanish: fold a partner into a row
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero());
                let Some((i, j)) = pair else { break };
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] = &a[i][k] + v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] = &a[k][i] + v;
                }
                i
            }
        };
        let piv = a[p][p].clone();
        sig += if piv.is_positive() { 1 } else { -1 };
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = &a[i][p] / &piv;
            for k in 0..n {
                let v = &f * &a[p][k];
                a[i][k] = &a[i][k] - v;
            }
            for k in 0..n {
                let v = &f * &a[k][p];
                a[k][i] = &a[k][i] - v;
            }
        }
    }
    sig
}

/// Exact determinant by fraction-free (Bareiss) elimination.
pub fn integer_determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

/// Signature from the Gordon-Litherland formula; split diagrams add.
pub fn signature_gl(d: &PlanarDiagram) -> Result<i64> {
    let mut total = 0;
    for piece in d.split_pieces() {
        if piece.crossing_count() == 0 {
            continue;
        }
        let cb = piece.checkerboard()?;
        let g = goeritz_with(&piece, &cb);
        total += symmetric_signature(&g.matrix) - g.mu;
    }
    Ok(total)
}

/// Determinant `|det G|`; zero for split diagrams.
pub fn determinant(d: &PlanarDiagram) -> Result<u64> {
    let pieces = d.split_pieces();
    if pieces.len() > 1 {
        return Ok(0);
    }
    if d.crossing_count() == 0 {
        return Ok(1);
    }
    let cb = d.checkerboard()?;
    let g = goeritz_with(d, &cb);
    let det = integer_determinant(&g.matrix).abs();
    u64::try_from(det).map_err(|_| Error::InvalidArgument("determinant overflows u64".into()))
}
