use crate::exactalg::{smith_normal_form, EuclideanDomain, SparseMatrix};

/// Explicit homology of `C_prev --d_in--> C --d_out--> C_next` over a
/// Euclidean domain: generators with representatives, and a coordinate map
/// from cycles to homology.
#[derive(Clone, Debug)]
pub struct HomologyBasis<R: EuclideanDomain> {
    /// Order of each generator; zero for free generators.
    pub orders: Vec<R>,
    /// Representative cycle of each generator, in the basis of `C`.
    pub reps: Vec<Vec<R>>,
    /// Rows of `R^{-1}` (from the Smith form of `d_out`) spanning kernel coordinates.
    to_kernel: SparseMatrix<R>,
    /// Rows of `L_B` for the kept generators.
    to_homology: SparseMatrix<R>,
}

impl<R: EuclideanDomain> HomologyBasis<R> {
    /// `d_in` is `dim C x dim C_prev`, `d_out` is `dim C_next x dim C`.
    pub fn new(d_in: &SparseMatrix<R>, d_out: &SparseMatrix<R>) -> Self {
        let n = d_out.ncols();
        assert_eq!(d_in.nrows(), n, "composable differentials");
        let s_out = smith_normal_form(d_out, true);
        let t_out = s_out.transforms.expect("requested");
        let pivot_cols: std::collections::BTreeSet<usize> =
            s_out.pivots.iter().map(|p| p.1).collect();
        let kernel_cols: Vec<usize> = (0..n).filter(|j| !pivot_cols.contains(j)).collect();
        let all_cols: Vec<usize> = (0..n).collect();
        let to_kernel = t_out.r_inv.submatrix(&kernel_cols, &all_cols);
        let kernel = t_out.r.submatrix(&all_cols, &kernel_cols);

        let b = to_kernel.mul(d_in);
        let s_b = smith_normal_form(&b, true);
        let t_b = s_b.transforms.expect("requested");
        let k = kernel_cols.len();
        let mut order_of: Vec<Option<R>> = vec![Some(R::zero()); k];
        for (row, _, d) in &s_b.pivots {
            order_of[*row] = if d.is_unit() { None } else { Some(d.clone()) };
        }
        let kept: Vec<usize> = (0..k).filter(|&r| order_of[r].is_some()).collect();
        let orders: Vec<R> = kept
            .iter()
            .map(|&r| order_of[r].clone().expect("kept"))
            .collect();
        let all_k: Vec<usize> = (0..k).collect();
        let to_homology = t_b.l.submatrix(&kept, &all_k);
        let lift = kernel.mul(&t_b.l_inv);
        let reps = kept.iter().map(|&r| lift.column(r)).collect();
        HomologyBasis {
            orders,
            reps,
            to_kernel,
            to_homology,
        }
    }

    pub fn len(&self) -> usize {
        self.orders.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orders.is_empty()
    }

    pub fn free_count(&self) -> usize {
        self.orders.iter().filter(|o| o.is_zero()).count()
    }

    /// Coordinates of a cycle; torsion coordinates are reduced modulo the order.
    pub fn coords(&self, z: &[R]) -> Vec<R> {
        let kc = self.to_kernel.mul_vec(z);
        let mut c = self.to_homology.mul_vec(&kc);
        for (x, o) in c.iter_mut().zip(&self.orders) {
            if !o.is_zero() {
                *x = x.div_rem_e(o).1;
            }
        }
        c
    }
}
