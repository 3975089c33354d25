use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::{PlanarDiagram, SMOOTHINGS};
use crate::error::{Error, Result};
use crate::exec::{self, Mode};
use crate::util::UnionFind;

/// Laurent polynomial with integer coefficients, `exponent -> coefficient`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Laurent(pub BTreeMap<i32, BigInt>);

impl Laurent {
    pub fn monomial(c: i64, e: i32) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert(e, BigInt::from(c));
        }
        Laurent(m)
    }

    pub fn add_term(&mut self, e: i32, c: BigInt) {
        let v = self.0.entry(e).or_insert_with(BigInt::zero);
        *v += c;
        if v.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn mul(&self, o: &Laurent) -> Laurent {
        let mut r = Laurent::default();
        for (a, x) in &self.0 {
            for (b, y) in &o.0 {
                r.add_term(a + b, x * y);
            }
        }
        r
    }

    /// Exact division by `q + q^{-1}`; `None` if it does not divide.
    pub fn div_q_plus_inv(&self) -> Option<Laurent> {
        let lo = *self.0.keys().next()?;
        let mut rest = self.clone();
        let mut quo = Laurent::default();
        while let Some((&top, c)) = rest.0.iter().next_back() {
            let c = c.clone();
            let e = top - 1;
            if e < lo + 1 {
                return None;
            }
            quo.add_term(e, c.clone());
            rest.add_term(top, -c.clone());
            rest.add_term(e - 1, -c);
        }
        Some(quo)
    }

    pub fn eval(&self, x: &Complex<BigRational>) -> Complex<BigRational> {
        let inv = if self.0.keys().any(|&e| e < 0) {
            Some(Complex::new(BigRational::one(), BigRational::zero()) / x.clone())
        } else {
            None
        };
        let mut acc = Complex::new(BigRational::zero(), BigRational::zero());
        for (&e, c) in &self.0 {
            let base = if e < 0 {
                inv.clone().expect("inverse")
            } else {
                x.clone()
            };
            let mut p = Complex::new(BigRational::one(), BigRational::zero());
            for _ in 0..e.unsigned_abs() {
                p = p * base.clone();
            }
            acc = acc + p * Complex::new(BigRational::from_integer(c.clone()), BigRational::zero());
        }
        acc
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render("q"))
    }
}

impl Laurent {
    /// Terms in decreasing degree, e.g. `-q^8 + q^6 + q^2`.
    pub fn render(&self, var: &str) -> String {
        let mut f = String::new();
        if self.0.is_empty() {
            return "0".into();
        }
        let mut first = true;
        for (&e, c) in self.0.iter().rev() {
            let neg = c.is_negative();
            let a = c.abs();
            if first {
                if neg {
                    f.push('-');
                }
            } else {
                f.push_str(if neg { " - " } else { " + " });
            }
            first = false;
            let coeff = if a.is_one() && e != 0 {
                String::new()
            } else {
                a.to_string()
            };
            match e {
                0 => write!(f, "{a}"),
                1 => write!(f, "{coeff}{var}"),
                _ => write!(f, "{coeff}{var}^{e}"),
            }
            .expect("string write");
        }
        f
    }
}

/// Circle counts of all resolutions, as `[r][circles] -> number of states`.
fn state_histogram(d: &PlanarDiagram, mode: Mode) -> Vec<Vec<u64>> {
    let n = d.crossing_count();
    let edges: Vec<u32> = d.edges().into_iter().collect();
    let idx = |e: u32| edges.binary_search(&e).expect("edge");
    let quads: Vec<[usize; 4]> = d.crossings().iter().map(|c| c.edges.map(idx)).collect();
    let loops = d.free_loops() + d.dotted_loops();
    let max_c = edges.len() + loops + 1;
    let zero = vec![vec![0u64; max_c + 1]; n + 1];
    let total = 1usize << n;
    let chunk = 1usize << n.min(10);
    exec::sum_range(
        mode,
        total / chunk,
        zero.clone(),
        |blk| {
            let mut h = zero.clone();
            let mut uf = UnionFind::new(edges.len());
            for v in blk * chunk..(blk + 1) * chunk {
                uf.reset();
                for (x, q) in quads.iter().enumerate() {
                    for (a, b) in SMOOTHINGS[v >> x & 1] {
                        uf.union(q[a], q[b]);
                    }
                }
                let circles = (0..edges.len()).filter(|&e| uf.find(e) == e).count() + loops;
                h[v.count_ones() as usize][circles] += 1;
            }
            h
        },
        |mut a, b| {
            for (ra, rb) in a.iter_mut().zip(b) {
                for (x, y) in ra.iter_mut().zip(rb) {
                    *x += y;
                }
            }
            a
        },
    )
}

/// Unreduced Jones polynomial in Khovanov's normalisation:
/// `(-1)^{n-} q^{n+ - 2n-} Σ_states (-q)^r (q + q^{-1})^{circles}`.
pub fn jones_khovanov(d: &PlanarDiagram, mode: Mode) -> Laurent {
    let hist = state_histogram(d, mode);
    let np = d.positive_count() as i32;
    let nm = d.negative_count() as i32;
    let mut out = Laurent::default();
    let q_sum = Laurent(BTreeMap::from([(1, BigInt::one()), (-1, BigInt::one())]));
    let mut powers = vec![Laurent::monomial(1, 0)];
    for (r, row) in hist.iter().enumerate() {
        for (c, &count) in row.iter().enumerate() {
            if count == 0 {
                continue;
            }
            while powers.len() <= c {
                let next = powers.last().expect("nonempty").mul(&q_sum);
                powers.push(next);
            }
            let sign = if (r as i32 + nm) % 2 == 0 { 1 } else { -1 };
            let shift = r as i32 + np - 2 * nm;
            for (&e, x) in &powers[c].0 {
                out.add_term(e + shift, x * BigInt::from(count) * BigInt::from(sign));
            }
        }
    }
    out
}

/// `jones_khovanov / (q + q^{-1})`.
pub fn jones_reduced(d: &PlanarDiagram, mode: Mode) -> Laurent {
    jones_khovanov(d, mode)
        .div_q_plus_inv()
        .expect("unreduced Jones polynomial is divisible by q + 1/q")
}

/// The Jones polynomial `V(t)` as a Laurent polynomial in `s = t^{1/2}`,
/// obtained from the reduced state sum by `q = -s^{-1}`. The positive
/// trefoil gives `-s^-8 + s^-6 + s^-2`.
pub fn jones_polynomial(d: &PlanarDiagram, mode: Mode) -> Laurent {
    let r = jones_reduced(d, mode);
    let mut v = Laurent::default();
    for (&e, c) in &r.0 {
        let c = if e.rem_euclid(2) == 0 {
            c.clone()
        } else {
            -c.clone()
        };
        v.add_term(-e, c);
    }
    v
}

/// `V(t)` at `t = s^2`, for an exact complex rational `s`.
pub fn jones_at(
    d: &PlanarDiagram,
    s: &Complex<BigRational>,
    mode: Mode,
) -> Result<Complex<BigRational>> {
    if s.re.is_zero() && s.im.is_zero() {
        return Err(Error::InvalidArgument("t^{1/2} must be nonzero".into()));
    }
    Ok(jones_polynomial(d, mode).eval(s))
}

/// `|V(-1)|`, the determinant, from the state sum.
pub fn determinant_from_jones(d: &PlanarDiagram, mode: Mode) -> u64 {
    let i = Complex::new(BigRational::zero(), BigRational::one());
    let v = jones_polynomial(d, mode).eval(&i);
    let norm = (v.re.clone() * v.re + v.im.clone() * v.im).to_integer();
    let root = norm.sqrt();
    assert_eq!(&root * &root, norm, "|V(-1)|^2 is a perfect square");
    u64::try_from(root).expect("fits")
}
