use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TorusKnotParams {
    p: i64,
    q: i64,
}

impl TorusKnotParams {
    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p < 2 || q < 2 || p.gcd(&q) != 1 {
            return Err(Error::NotCoprime(p, q));
        }
        Ok(TorusKnotParams { p, q })
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }
}

/// `(p-1)(q-1)/2`, the four-genus of the positive torus knot.
pub fn torus_slice_torus_value(t: TorusKnotParams) -> i64 {
    (t.p - 1) * (t.q - 1) / 2
}

/// Signature of the positive torus knot, negative in our convention.
pub fn torus_signature(t: TorusKnotParams) -> i64 {
    sig(t.p, t.q)
}

fn sig(p: i64, q: i64) -> i64 {
    let (p, q) = if p < q { (q, p) } else { (p, q) };
    if q <= 1 {
        return 0;
    }
    if p == 2 * q {
        return -q * q;
    }
    let odd = q % 2 == 1;
    if 2 * q < p {
        sig(p - 2 * q, q) - if odd { q * q - 1 } else { q * q }
    } else {
        -sig(2 * q - p, q) - if odd { q * q - 1 } else { q * q - 2 }
    }
}
