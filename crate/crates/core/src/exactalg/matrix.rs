use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::Coeff;

/// Row-major sparse matrix; zero entries are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix<R: Coeff> {
    nrows: usize,
    ncols: usize,
    rows: Vec<BTreeMap<usize, R>>,
}

impl<R: Coeff> SparseMatrix<R> {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix {
            nrows,
            ncols,
            rows: vec![BTreeMap::new(); nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, R::one());
        }
        m
    }

    pub fn from_entries(
        nrows: usize,
        ncols: usize,
        entries: impl IntoIterator<Item = (usize, usize, R)>,
    ) -> Self {
        let mut m = Self::zeros(nrows, ncols);
        for (i, j, v) in entries {
            m.add_at(i, j, v);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<R>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Self::from_entries(
            rows.len(),
            ncols,
            rows.iter()
                .enumerate()
                .flat_map(|(i, r)| r.iter().enumerate().map(move |(j, v)| (i, j, v.clone()))),
        )
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        self.rows[i].get(&j).cloned().unwrap_or_else(R::zero)
    }

    pub fn row(&self, i: usize) -> &BTreeMap<usize, R> {
        &self.rows[i]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R) {
        assert!(
            i < self.nrows && j < self.ncols,
            "entry ({i},{j}) out of range"
        );
        if v.is_zero() {
            self.rows[i].remove(&j);
        } else {
            self.rows[i].insert(j, v);
        }
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: R) {
        let cur = self.get(i, j);
        self.set(i, j, cur + v);
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &R)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |(&j, v)| (i, j, v)))
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(
            self.ncols,
            self.nrows,
            self.entries().map(|(i, j, v)| (j, i, v.clone())),
        )
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.ncols, o.nrows, "dimension mismatch");
        let mut out = Self::zeros(self.nrows, o.ncols);
        for (i, r) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, R> = BTreeMap::new();
            for (&k, a) in r {
                for (&j, b) in &o.rows[k] {
                    let e = acc.entry(j).or_insert_with(R::zero);
                    *e = e.clone() + a.clone() * b.clone();
                }
            }
            acc.retain(|_, v| !v.is_zero());
            out.rows[i] = acc;
        }
        out
    }

    pub fn mul_vec(&self, x: &[R]) -> Vec<R> {
        assert_eq!(self.ncols, x.len(), "dimension mismatch");
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .fold(R::zero(), |acc, (&j, a)| acc + a.clone() * x[j].clone())
            })
            .collect()
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.nrows).map(|i| self.get(i, j)).collect()
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let cpos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &c)| (c, k)).collect();
        let mut m = Self::zeros(rows.len(), cols.len());
        for (a, &i) in rows.iter().enumerate() {
            for (j, v) in &self.rows[i] {
                if let Some(&b) = cpos.get(j) {
                    m.set(a, b, v.clone());
                }
            }
        }
        m
    }

    pub fn map<S: Coeff>(&self, f: impl Fn(&R) -> S) -> SparseMatrix<S> {
        SparseMatrix::from_entries(
            self.nrows,
            self.ncols,
            self.entries().map(|(i, j, v)| (i, j, f(v))),
        )
    }

    pub fn to_dense(&self) -> Vec<Vec<R>> {
        (0..self.nrows)
            .map(|i| (0..self.ncols).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// `row col value` lines, one per stored entry.
    pub fn coordinate_dump(&self) -> String {
        let mut s = String::new();
        for (i, j, v) in self.entries() {
            let _ = writeln!(s, "{i} {j} {v}");
        }
        s
    }

    // elementary operations, used by the normal-form routines

    /// `row_i += c * row_k`
    pub(crate) fn row_axpy(&mut self, i: usize, k: usize, c: &R) {
        if c.is_zero() {
            return;
        }
        let src: Vec<(usize, R)> = self.rows[k].iter().map(|(&j, v)| (j, v.clone())).collect();
        for (j, v) in src {
            self.add_at(i, j, c.clone() * v);
        }
    }

    /// `col_j += c * col_k`
    pub(crate) fn col_axpy(&mut self, j: usize, k: usize, c: &R) {
        if c.is_zero() {
            return;
        }
        for i in 0..self.nrows {
            if let Some(v) = self.rows[i].get(&k).cloned() {
                self.add_at(i, j, c.clone() * v);
            }
        }
    }
}

impl<R: Coeff> SparseMatrix<R> {
    /// `(row_i, row_k) <- m * (row_i, row_k)`
    pub(crate) fn rows_2x2(&mut self, i: usize, k: usize, m: &[[R; 2]; 2]) {
        let ri = std::mem::take(&mut self.rows[i]);
        let rk = std::mem::take(&mut self.rows[k]);
        self.rows[i] = combine(&ri, &rk, &m[0][0], &m[0][1]);
        self.rows[k] = combine(&ri, &rk, &m[1][0], &m[1][1]);
    }

    /// `(col_j, col_k) <- (col_j, col_k) * m`
    pub(crate) fn cols_2x2(&mut self, j: usize, k: usize, m: &[[R; 2]; 2]) {
        for r in self.rows.iter_mut() {
            let a = r.get(&j).cloned().unwrap_or_else(R::zero);
            let b = r.get(&k).cloned().unwrap_or_else(R::zero);
            if a.is_zero() && b.is_zero() {
                continue;
            }
            let nj = a.clone() * m[0][0].clone() + b.clone() * m[1][0].clone();
            let nk = a * m[0][1].clone() + b * m[1][1].clone();
            for (c, v) in [(j, nj), (k, nk)] {
                if v.is_zero() {
                    r.remove(&c);
                } else {
                    r.insert(c, v);
                }
            }
        }
    }

    pub(crate) fn scale_row(&mut self, i: usize, u: &R) {
        for v in self.rows[i].values_mut() {
            *v = v.clone() * u.clone();
        }
        self.rows[i].retain(|_, v| !v.is_zero());
    }

    pub(crate) fn scale_col(&mut self, j: usize, u: &R) {
        for r in self.rows.iter_mut() {
            if let Some(v) = r.get_mut(&j) {
                *v = v.clone() * u.clone();
                if v.is_zero() {
                    r.remove(&j);
                }
            }
        }
    }
}

fn combine<R: Coeff>(
    a: &BTreeMap<usize, R>,
    b: &BTreeMap<usize, R>,
    x: &R,
    y: &R,
) -> BTreeMap<usize, R> {
    let mut out: BTreeMap<usize, R> = BTreeMap::new();
    if !x.is_zero() {
        for (&j, v) in a {
            out.insert(j, x.clone() * v.clone());
        }
    }
    if !y.is_zero() {
        for (&j, v) in b {
            let e = out.entry(j).or_insert_with(R::zero);
            *e = e.clone() + y.clone() * v.clone();
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn z(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn products() {
        let a = SparseMatrix::from_dense(&[vec![z(1), z(2)], vec![z(0), z(3)]]);
        let b = SparseMatrix::from_dense(&[vec![z(4)], vec![z(5)]]);
        assert_eq!(a.mul(&b).column(0), vec![z(14), z(15)]);
        assert_eq!(a.mul_vec(&[z(1), z(1)]), vec![z(3), z(3)]);
        assert_eq!(a.transpose().get(1, 0), z(2));
        assert_eq!(a.nnz(), 3);
        assert_eq!(a.coordinate_dump(), "0 0 1\n0 1 2\n1 1 3\n");
    }
}
