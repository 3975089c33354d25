use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Coeff, EuclideanDomain, Field};

/// Polynomials in one variable `H`, coefficients low degree first, no
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<R: Coeff> {
    coeffs: Vec<R>,
}

impl<R: Coeff> Poly<R> {
    pub fn new(mut coeffs: Vec<R>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: R) -> Self {
        Poly::new(vec![c])
    }

    /// `c * H^k`.
    pub fn monomial(c: R, k: usize) -> Self {
        let mut v = vec![R::zero(); k + 1];
        v[k] = c;
        Poly::new(v)
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> R {
        self.coeffs.get(k).cloned().unwrap_or_else(R::zero)
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest power of `H` with nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn leading(&self) -> R {
        self.coeffs.last().cloned().unwrap_or_else(R::zero)
    }

    pub fn scale(&self, c: &R) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn eval(&self, h: &R) -> R {
        self.coeffs
            .iter()
            .rev()
            .fold(R::zero(), |acc, c| acc * h.clone() + c.clone())
    }
}

impl<R: Coeff> fmt::Display for Poly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{c}*")?;
                    }
                    if k == 1 {
                        write!(f, "H")?;
                    } else {
                        write!(f, "H^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<R: Coeff> Add for Poly<R> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<R: Coeff> Sub for Poly<R> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<R: Coeff> Neg for Poly<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<R: Coeff> Mul for Poly<R> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        if self.coeffs.is_empty() || o.coeffs.is_empty() {
            return Poly::zero();
        }
        let mut v = vec![R::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] = v[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(v)
    }
}

impl<R: Coeff> Zero for Poly<R> {
    fn zero() -> Self {
        Poly { coeffs: vec![] }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<R: Coeff> One for Poly<R> {
    fn one() -> Self {
        Poly::constant(R::one())
    }
}

impl<R: Coeff> Coeff for Poly<R> {
    fn from_i64(n: i64) -> Self {
        Poly::constant(R::from_i64(n))
    }
    fn unit_inv(&self) -> Option<Self> {
        if self.coeffs.len() == 1 {
            self.coeffs[0].unit_inv().map(Poly::constant)
        } else {
            None
        }
    }
}

impl<F: Field> EuclideanDomain for Poly<F> {
    type Norm = usize;
    fn div_rem_e(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv = d.leading().unit_inv().expect("field coefficient");
        let mut r = self.coeffs.clone();
        let mut q = vec![F::zero(); r.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let k = r.len() - 1 - dd;
            let c = r[r.len() - 1].clone() * inv.clone();
            for (j, b) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * b.clone();
            }
            q[k] = c;
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
        }
        (Poly::new(q), Poly::new(r))
    }
    fn norm(&self) -> usize {
        self.degree().unwrap_or(0)
    }
    fn normalized(&self) -> Self {
        match self.leading().unit_inv() {
            Some(inv) => self.scale(&inv),
            None => Poly::zero(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Fp;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn q(v: &[i64]) -> Poly<BigRational> {
        Poly::new(
            v.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect(),
        )
    }

    #[test]
    fn division() {
        let a = q(&[-1, 0, 0, 1]);
        let b = q(&[-1, 1]);
        let (qq, r) = a.div_rem_e(&b);
        assert_eq!(qq, q(&[1, 1, 1]));
        assert!(r.is_zero());
        let (qq, r) = q(&[1, 2, 3]).div_rem_e(&q(&[0, 2]));
        assert_eq!(qq * q(&[0, 2]) + r.clone(), q(&[1, 2, 3]));
        assert!(r.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn finite_field_poly() {
        let h = Poly::<Fp<2>>::monomial(Fp::new(1), 1);
        let sq = h.clone() * h.clone() + Poly::one();
        let hp1 = h + Poly::one();
        let (qq, r) = sq.div_rem_e(&hp1);
        assert!(r.is_zero());
        assert_eq!(qq, hp1);
        assert_eq!(format!("{}", q(&[1, 0, 2])), "2*H^2 + 1");
    }
}
