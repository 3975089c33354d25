use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::Poly;

/// Basis label: `false` is `1`, `true` is `X`.
pub type Label = bool;

pub type ZH = Poly<BigInt>;

/// Element of `A^{⊗k}`: basis tensor -> coefficient in `Z[H]`.
pub type Tensor = BTreeMap<Vec<Label>, ZH>;

/// The rank-two Frobenius algebra `A = Z[H][X]/(X^2 - HX)` with
/// `Δ(1) = 1⊗X + X⊗1 - H 1⊗1`, `Δ(X) = X⊗X`, `ε(1) = 0`, `ε(X) = 1`.
#[derive(Clone, Debug)]
pub struct Frobenius;

fn h(k: usize) -> ZH {
    Poly::monomial(BigInt::one(), k)
}

fn add(t: &mut Tensor, k: Vec<Label>, c: ZH) {
    let e = t.entry(k.clone()).or_insert_with(ZH::zero);
    *e = e.clone() + c;
    if e.is_zero() {
        t.remove(&k);
    }
}

impl Frobenius {
    /// Quantum degree of a basis label.
    pub fn degree(l: Label) -> i32 {
        if l {
            -1
        } else {
            1
        }
    }

    pub const H_DEGREE: i32 = -2;

    pub fn mul(a: Label, b: Label) -> Tensor {
        let mut t = Tensor::new();
        match (a, b) {
            (false, false) => add(&mut t, vec![false], h(0)),
            (true, true) => add(&mut t, vec![true], h(1)),
            _ => add(&mut t, vec![true], h(0)),
        }
        t
    }

    pub fn comul(a: Label) -> Tensor {
        let mut t = Tensor::new();
        if a {
            add(&mut t, vec![true, true], h(0));
        } else {
            add(&mut t, vec![false, true], h(0));
            add(&mut t, vec![true, false], h(0));
            add(&mut t, vec![false, false], -h(1));
        }
        t
    }

    pub fn counit(a: Label) -> ZH {
        if a {
            h(0)
        } else {
            ZH::zero()
        }
    }

    /// Apply a map on factors `at..at+arity` of every term.
    fn apply(t: &Tensor, at: usize, arity: usize, f: impl Fn(&[Label]) -> Tensor) -> Tensor {
        let mut out = Tensor::new();
        for (k, c) in t {
            for (img, c2) in f(&k[at..at + arity]) {
                let mut nk = k[..at].to_vec();
                nk.extend(img);
                nk.extend_from_slice(&k[at + arity..]);
                add(&mut out, nk, c.clone() * c2);
            }
        }
        out
    }

    fn basis(k: usize) -> Vec<Vec<Label>> {
        (0..1usize << k)
            .map(|m| (0..k).map(|i| m >> i & 1 == 1).collect())
            .collect()
    }

    fn single(k: Vec<Label>) -> Tensor {
        Tensor::from([(k, h(0))])
    }

    /// Check the Frobenius algebra axioms and that every structure map is
    /// homogeneous of the expected degree. Returns the failed axiom.
    pub fn verify() -> Result<(), String> {
        let m = |x: &[Label]| Frobenius::mul(x[0], x[1]);
        let d = |x: &[Label]| Frobenius::comul(x[0]);
        for b in Self::basis(3) {
            let t = Self::single(b.clone());
            let l = Self::apply(&Self::apply(&t, 0, 2, m), 0, 2, m);
            let r = Self::apply(&Self::apply(&t, 1, 2, m), 0, 2, m);
            if l != r {
                return Err(format!("associativity fails on {b:?}"));
            }
        }
        for b in Self::basis(2) {
            let t = Self::single(b.clone());
            let sw = Self::single(vec![b[1], b[0]]);
            if Self::apply(&t, 0, 2, m) != Self::apply(&sw, 0, 2, m) {
                return Err(format!("commutativity fails on {b:?}"));
            }
            // Frobenius relation: Δ∘m = (m⊗1)(1⊗Δ) = (1⊗m)(Δ⊗1)
            let dm = Self::apply(&Self::apply(&t, 0, 2, m), 0, 1, d);
            let a = Self::apply(&Self::apply(&t, 1, 1, d), 0, 2, m);
            let c = Self::apply(&Self::apply(&t, 0, 1, d), 1, 2, m);
            if dm != a || dm != c {
                return Err(format!("Frobenius relation fails on {b:?}"));
            }
        }
        for b in Self::basis(1) {
            let t = Self::single(b.clone());
            let l = Self::apply(&Self::apply(&t, 0, 1, d), 0, 1, d);
            let r = Self::apply(&Self::apply(&t, 0, 1, d), 1, 1, d);
            if l != r {
                return Err(format!("coassociativity fails on {b:?}"));
            }
            // counit: (ε⊗1)Δ = id
            let mut back = Tensor::new();
            for (k, c) in Self::apply(&t, 0, 1, d) {
                add(&mut back, vec![k[1]], c * Self::counit(k[0]));
            }
            if back != t {
                return Err(format!("counit fails on {b:?}"));
            }
        }
        // m has degree -1 and Δ has degree -1 with deg H = -2
        let deg = |k: &[Label]| k.iter().map(|&l| Self::degree(l)).sum::<i32>();
        for b in Self::basis(2) {
            for (k, c) in Self::mul(b[0], b[1]) {
                let p = c.valuation().unwrap_or(0) as i32;
                if deg(&k) + p * Self::H_DEGREE != deg(&b) - 1 {
                    return Err(format!("multiplication is not homogeneous on {b:?}"));
                }
            }
        }
        for b in Self::basis(1) {
            for (k, c) in Self::comul(b[0]) {
                let p = c.valuation().unwrap_or(0) as i32;
                if deg(&k) + p * Self::H_DEGREE != deg(&b) - 1 {
                    return Err(format!("comultiplication is not homogeneous on {b:?}"));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn axioms_hold() {
        Frobenius::verify().unwrap();
    }
}
