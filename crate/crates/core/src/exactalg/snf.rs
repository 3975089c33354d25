use super::{exact_div, ext_gcd, EuclideanDomain, SparseMatrix};

/// Unimodular `L`, `R` (with inverses) such that `L * A * R = D`.
#[derive(Clone, Debug)]
pub struct Transforms<R: EuclideanDomain> {
    pub l: SparseMatrix<R>,
    pub l_inv: SparseMatrix<R>,
    pub r: SparseMatrix<R>,
    pub r_inv: SparseMatrix<R>,
}

/// Smith form of a sparse matrix. `D` has a single nonzero entry
/// `(row, col, d)` per pivot; pivots are listed so that each value divides
/// the next, and values are normalized (nonnegative, monic).
#[derive(Clone, Debug)]
pub struct Snf<R: EuclideanDomain> {
    pub pivots: Vec<(usize, usize, R)>,
    pub transforms: Option<Transforms<R>>,
}

impl<R: EuclideanDomain> Snf<R> {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn invariant_factors(&self) -> Vec<R> {
        self.pivots.iter().map(|p| p.2.clone()).collect()
    }

    /// Invariant factors that are not units.
    pub fn torsion(&self) -> Vec<R> {
        self.pivots
            .iter()
            .filter(|p| !p.2.is_unit())
            .map(|p| p.2.clone())
            .collect()
    }
}

struct Work<R: EuclideanDomain> {
    a: SparseMatrix<R>,
    t: Option<Transforms<R>>,
}

impl<R: EuclideanDomain> Work<R> {
    /// `row_i += c * row_k`
    fn row_op(&mut self, i: usize, k: usize, c: &R) {
        self.a.row_axpy(i, k, c);
        if let Some(t) = &mut self.t {
            t.l.row_axpy(i, k, c);
            t.l_inv.col_axpy(k, i, &-c.clone());
        }
    }

    /// `col_j += c * col_k`
    fn col_op(&mut self, j: usize, k: usize, c: &R) {
        self.a.col_axpy(j, k, c);
        if let Some(t) = &mut self.t {
            t.r.col_axpy(j, k, c);
            t.r_inv.row_axpy(k, j, &-c.clone());
        }
    }

    fn rows_2x2(&mut self, i: usize, k: usize, m: [[R; 2]; 2], m_inv: [[R; 2]; 2]) {
        self.a.rows_2x2(i, k, &m);
        if let Some(t) = &mut self.t {
            t.l.rows_2x2(i, k, &m);
            t.l_inv.cols_2x2(i, k, &m_inv);
        }
    }

    fn cols_2x2(&mut self, j: usize, k: usize, m: [[R; 2]; 2], m_inv: [[R; 2]; 2]) {
        self.a.cols_2x2(j, k, &m);
        if let Some(t) = &mut self.t {
            t.r.cols_2x2(j, k, &m);
            t.r_inv.rows_2x2(j, k, &m_inv);
        }
    }

    fn scale_row(&mut self, i: usize, u: &R) {
        let inv = u.unit_inv().expect("unit");
        self.a.scale_row(i, u);
        if let Some(t) = &mut self.t {
            t.l.scale_row(i, u);
            t.l_inv.scale_col(i, &inv);
        }
    }
}

/// Smith normal form over a Euclidean domain. Pivots are chosen by smallest
/// norm, ties broken by the Markowitz count to limit fill-in.
pub fn smith_normal_form<R: EuclideanDomain>(a: &SparseMatrix<R>, with_transforms: bool) -> Snf<R> {
    let (m, n) = (a.nrows(), a.ncols());
    let mut w = Work {
        a: a.clone(),
        t: with_transforms.then(|| Transforms {
            l: SparseMatrix::identity(m),
            l_inv: SparseMatrix::identity(m),
            r: SparseMatrix::identity(n),
            r_inv: SparseMatrix::identity(n),
        }),
    };
    let mut row_done = vec![false; m];
    let mut col_done = vec![false; n];
    let mut pivots: Vec<(usize, usize, R)> = vec![];

    while let Some((mut pi, mut pj)) = choose_pivot(&w.a, &row_done, &col_done) {
        loop {
            let mut moved = false;
            let col_rows: Vec<usize> = (0..m)
                .filter(|&i| i != pi && w.a.row(i).contains_key(&pj))
                .collect();
            for i in col_rows {
                let p = w.a.get(pi, pj);
                let (q, r) = w.a.get(i, pj).div_rem_e(&p);
                w.row_op(i, pi, &-q);
                if !r.is_zero() {
                    pi = i;
                    moved = true;
                    break;
                }
            }
            if moved {
                continue;
            }
            let row_cols: Vec<usize> = w.a.row(pi).keys().copied().filter(|&j| j != pj).collect();
            for j in row_cols {
                let p = w.a.get(pi, pj);
                let (q, r) = w.a.get(pi, j).div_rem_e(&p);
                w.col_op(j, pj, &-q);
                if !r.is_zero() {
                    pj = j;
                    moved = true;
                    break;
                }
            }
            if !moved {
                break;
            }
        }
        row_done[pi] = true;
        col_done[pj] = true;
        pivots.push((pi, pj, w.a.get(pi, pj)));
    }

    // divisibility chain
    for k in 0..pivots.len() {
        for l in k + 1..pivots.len() {
            let (rk, ck, a) = pivots[k].clone();
            let (rl, cl, b) = pivots[l].clone();
            if b.div_rem_e(&a).1.is_zero() {
                continue;
            }
            let (g, s, t) = ext_gcd(&a, &b);
            let ag = exact_div(&a, &g);
            let bg = exact_div(&b, &g);
            let one = R::one();
            w.rows_2x2(
                rk,
                rl,
                [[s.clone(), t.clone()], [-bg.clone(), ag.clone()]],
                [[ag.clone(), -t.clone()], [bg.clone(), s.clone()]],
            );
            let tb = t.clone() * bg.clone();
            let sa = s.clone() * ag.clone();
            w.cols_2x2(
                ck,
                cl,
                [[one.clone(), -tb.clone()], [one.clone(), sa.clone()]],
                [[sa, tb], [-one, R::one()]],
            );
            pivots[k].2 = w.a.get(rk, ck);
            pivots[l].2 = w.a.get(rl, cl);
        }
    }
    for p in pivots.iter_mut() {
        let norm = p.2.normalized();
        if norm != p.2 {
            let u = exact_div(&norm, &p.2);
            w.scale_row(p.0, &u);
            p.2 = norm;
        }
    }
    Snf {
        pivots,
        transforms: w.t,
    }
}

fn choose_pivot<R: EuclideanDomain>(
    a: &SparseMatrix<R>,
    row_done: &[bool],
    col_done: &[bool],
) -> Option<(usize, usize)> {
    let mut col_count = vec![0usize; a.ncols()];
    for (i, j, _) in a.entries() {
        if !row_done[i] {
            col_count[j] += 1;
        }
    }
    let mut best: Option<((R::Norm, usize), (usize, usize))> = None;
    for i in 0..a.nrows() {
        if row_done[i] {
            continue;
        }
        let rc = a.row(i).keys().filter(|&&j| !col_done[j]).count();
        for (&j, v) in a.row(i) {
            if col_done[j] {
                continue;
            }
            let key = (v.norm(), (rc - 1) * (col_count[j] - 1));
            if best.as_ref().map_or(true, |(k, _)| key < *k) {
                best = Some((key, (i, j)));
            }
        }
    }
    best.map(|(_, p)| p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{Fp, Poly};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn check<R: EuclideanDomain>(a: &SparseMatrix<R>) -> Snf<R> {
        let s = smith_normal_form(a, true);
        let t = s.transforms.as_ref().unwrap();
        let d = t.l.mul(a).mul(&t.r);
        let expect = SparseMatrix::from_entries(
            a.nrows(),
            a.ncols(),
            s.pivots.iter().map(|p| (p.0, p.1, p.2.clone())),
        );
        assert_eq!(d, expect);
        assert_eq!(t.l.mul(&t.l_inv), SparseMatrix::identity(a.nrows()));
        assert_eq!(t.r.mul(&t.r_inv), SparseMatrix::identity(a.ncols()));
        let plain = smith_normal_form(a, false);
        assert_eq!(plain.invariant_factors(), s.invariant_factors());
        s
    }

    #[test]
    fn integer_smith() {
        let a = SparseMatrix::from_dense(&[
            vec![z(2), z(4), z(4)],
            vec![z(-6), z(6), z(12)],
            vec![z(10), z(-4), z(-16)],
        ]);
        assert_eq!(check(&a).invariant_factors(), vec![z(2), z(6), z(12)]);
        let b = SparseMatrix::from_dense(&[vec![z(2), z(0)], vec![z(0), z(3)]]);
        assert_eq!(check(&b).invariant_factors(), vec![z(1), z(6)]);
        let c = SparseMatrix::from_dense(&[vec![z(0), z(0)], vec![z(0), z(0)]]);
        assert_eq!(check(&c).rank(), 0);
    }

    #[test]
    fn polynomial_smith() {
        let h = |c: i64, k: usize| Poly::monomial(BigRational::from_integer(z(c)), k);
        let a = SparseMatrix::from_dense(&[vec![h(2, 1), h(1, 2)], vec![h(0, 0), h(3, 2)]]);
        let s = check(&a);
        assert_eq!(s.invariant_factors(), vec![h(1, 1), h(1, 2)]);
        let f = |c: i64, k: usize| Poly::monomial(Fp::<2>::new(c), k);
        let b = SparseMatrix::from_dense(&[vec![f(1, 1), f(1, 0)], vec![f(1, 0), f(1, 1)]]);
        assert_eq!(check(&b).rank(), 2);
    }
}
