//! Exact coefficient rings, sparse matrices and Smith normal form.

mod fp;
mod matrix;
mod poly;
mod snf;

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub use fp::Fp;
pub use matrix::SparseMatrix;
pub use poly::Poly;
pub use snf::{smith_normal_form, Snf, Transforms};

/// Commutative ring with exact arithmetic.
pub trait Coeff:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn from_i64(n: i64) -> Self;
    fn unit_inv(&self) -> Option<Self>;
    fn is_unit(&self) -> bool {
        self.unit_inv().is_some()
    }
}

/// Marker for fields: every nonzero element is a unit.
pub trait Field: Coeff {}

pub trait EuclideanDomain: Coeff {
    type Norm: Ord + Clone + Debug;
    /// `(q, r)` with `self = q * d + r` and `r = 0` or `norm(r) < norm(d)`.
    fn div_rem_e(&self, d: &Self) -> (Self, Self);
    fn norm(&self) -> Self::Norm;
    /// Canonical associate (nonnegative integer, monic polynomial).
    fn normalized(&self) -> Self;
}

impl Coeff for BigInt {
    fn from_i64(n: i64) -> Self {
        BigInt::from(n)
    }
    fn unit_inv(&self) -> Option<Self> {
        (self.is_one() || *self == -BigInt::one()).then(|| self.clone())
    }
}

impl EuclideanDomain for BigInt {
    type Norm = BigUint;
    fn div_rem_e(&self, d: &Self) -> (Self, Self) {
        // floor division keeps |r| < |d|
        let (q, r) = self.div_mod_floor(d);
        (q, r)
    }
    fn norm(&self) -> BigUint {
        self.magnitude().clone()
    }
    fn normalized(&self) -> Self {
        self.abs()
    }
}

impl Coeff for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn unit_inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Field for BigRational {}

impl EuclideanDomain for BigRational {
    type Norm = u8;
    fn div_rem_e(&self, d: &Self) -> (Self, Self) {
        (self / d, Self::zero())
    }
    fn norm(&self) -> u8 {
        u8::from(!self.is_zero())
    }
    fn normalized(&self) -> Self {
        if self.is_zero() {
            Self::zero()
        } else {
            Self::one()
        }
    }
}

/// `(g, s, t)` with `s a + t b = g`, `g` a gcd of `a` and `b`.
pub fn ext_gcd<R: EuclideanDomain>(a: &R, b: &R) -> (R, R, R) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (R::one(), R::zero());
    let (mut t0, mut t1) = (R::zero(), R::one());
    while !r1.is_zero() {
        let (q, r) = r0.div_rem_e(&r1);
        r0 = std::mem::replace(&mut r1, r);
        let s = s0 - q.clone() * s1.clone();
        s0 = std::mem::replace(&mut s1, s);
        let t = t0 - q * t1.clone();
        t0 = std::mem::replace(&mut t1, t);
    }
    (r0, s0, t0)
}

/// Exact quotient; panics when `d` does not divide `a`.
pub fn exact_div<R: EuclideanDomain>(a: &R, d: &R) -> R {
    let (q, r) = a.div_rem_e(d);
    assert!(r.is_zero(), "{a} is not divisible by {d}");
    q
}

/// Coefficient rings selectable at run time.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingTag {
    Z,
    Q,
    Fp(u32),
    ZH,
    QH,
    FpH(u32),
}

pub const SUPPORTED_PRIMES: [u32; 4] = [2, 3, 5, 7];

impl RingTag {
    pub fn parse(s: &str) -> Result<RingTag> {
        let t = s.trim();
        let (base, poly) = match t.strip_suffix("[H]").or_else(|| t.strip_suffix('H')) {
            Some(b) => (b, true),
            None => (t, false),
        };
        let tag = match (base, poly) {
            ("Z", false) => RingTag::Z,
            ("Q", false) => RingTag::Q,
            ("Z", true) => RingTag::ZH,
            ("Q", true) => RingTag::QH,
            _ => {
                let p: u32 = base
                    .strip_prefix("F")
                    .or_else(|| base.strip_prefix("GF"))
                    .or_else(|| base.strip_prefix("Z/"))
                    .and_then(|n| n.parse().ok())
                    .ok_or_else(|| Error::InvalidArgument(format!("unknown ring {s:?}")))?;
                if !SUPPORTED_PRIMES.contains(&p) {
                    return Err(Error::InvalidArgument(format!(
                        "unsupported prime {p} (use 2, 3, 5 or 7)"
                    )));
                }
                if poly {
                    RingTag::FpH(p)
                } else {
                    RingTag::Fp(p)
                }
            }
        };
        Ok(tag)
    }

    pub fn has_h(self) -> bool {
        matches!(self, RingTag::ZH | RingTag::QH | RingTag::FpH(_))
    }

    pub fn is_euclidean(self) -> bool {
        self != RingTag::ZH
    }

    pub fn require_euclidean(self) -> Result<()> {
        if self.is_euclidean() {
            Ok(())
        } else {
            Err(Error::NotEuclidean(self.to_string()))
        }
    }

    /// Coefficient field or ring without the `H` variable.
    pub fn base(self) -> RingTag {
        match self {
            RingTag::ZH => RingTag::Z,
            RingTag::QH => RingTag::Q,
            RingTag::FpH(p) => RingTag::Fp(p),
            t => t,
        }
    }

    pub fn with_h(self) -> RingTag {
        match self {
            RingTag::Z => RingTag::ZH,
            RingTag::Q => RingTag::QH,
            RingTag::Fp(p) => RingTag::FpH(p),
            t => t,
        }
    }

    pub fn is_field_base(self) -> bool {
        !matches!(self.base(), RingTag::Z)
    }
}

impl std::fmt::Display for RingTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RingTag::Z => write!(f, "Z"),
            RingTag::Q => write!(f, "Q"),
            RingTag::Fp(p) => write!(f, "F{p}"),
            RingTag::ZH => write!(f, "Z[H]"),
            RingTag::QH => write!(f, "Q[H]"),
            RingTag::FpH(p) => write!(f, "F{p}[H]"),
        }
    }
}
