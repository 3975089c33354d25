//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (default) `Mode::Parallel` runs on the rayon
//! pool; without it every mode runs sequentially. Results are always returned
//! in input order so output never depends on the thread count.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    Sequential,
    #[default]
    Parallel,
}

impl Mode {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Mode::Parallel
    }
}

pub fn map<T, U, F>(mode: Mode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return items.par_iter().map(f).collect();
    }
    let _ = mode;
    items.iter().map(f).collect()
}

pub fn map_range<U, F>(mode: Mode, n: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = mode;
    (0..n).map(f).collect()
}

/// Sum of `f(i)` over `0..n`, folded with `add`. The reduction tree differs
/// between modes, so `add` must be associative and commutative.
pub fn sum_range<U, F, A>(mode: Mode, n: usize, zero: U, f: F, add: A) -> U
where
    U: Send + Sync + Clone,
    F: Fn(usize) -> U + Sync + Send,
    A: Fn(U, U) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        return (0..n).into_par_iter().map(f).reduce(|| zero.clone(), &add);
    }
    let _ = mode;
    (0..n).map(f).fold(zero, add)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(Mode::Sequential, &xs, |x| x * x);
        let b = map(Mode::Parallel, &xs, |x| x * x);
        assert_eq!(a, b);
        let s1 = sum_range(Mode::Sequential, 1000, 0u64, |i| i as u64, |a, b| a + b);
        let s2 = sum_range(Mode::Parallel, 1000, 0u64, |i| i as u64, |a, b| a + b);
        assert_eq!(s1, 499500);
        assert_eq!(s1, s2);
    }
}
