use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Coeff, EuclideanDomain, Field};

/// Integers modulo the prime `P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    fn pow(self, mut e: u32) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp((self.0 + o.0) % P)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp((self.0 + P - o.0) % P)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Coeff for Fp<P> {
    fn from_i64(n: i64) -> Self {
        Fp::new(n)
    }
    fn unit_inv(&self) -> Option<Self> {
        (self.0 != 0).then(|| self.pow(P - 2))
    }
}

impl<const P: u32> Field for Fp<P> {}

impl<const P: u32> EuclideanDomain for Fp<P> {
    type Norm = u8;
    fn div_rem_e(&self, d: &Self) -> (Self, Self) {
        (
            *self * d.unit_inv().expect("division by zero"),
            Self::zero(),
        )
    }
    fn norm(&self) -> u8 {
        u8::from(self.0 != 0)
    }
    fn normalized(&self) -> Self {
        if self.0 == 0 {
            Self::zero()
        } else {
            Self::one()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverses() {
        for n in 1..7 {
            let x = Fp::<7>::new(n);
            assert_eq!(x * x.unit_inv().unwrap(), Fp::one());
        }
        assert_eq!(Fp::<3>::new(-1), Fp::<3>::new(2));
        assert!(Fp::<5>::zero().unit_inv().is_none());
    }
}
