//! Data-parallel helpers with a sequential fallback.
//!
//! The hot loops in this crate (series convolutions, Riordan matrix columns,
//! identity grids) are maps over independent indices with nontrivial
//! big-rational work per item. With the default `parallel` feature those maps
//! run on rayon; without it they run as plain loops. Both code paths are kept
//! callable when the feature is on so the benchmarks can compare them on
//! identical workloads.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Minimum item count before fanning out; below this the spawn overhead
/// outweighs the per-item rational arithmetic.
#[cfg(feature = "parallel")]
const PAR_MIN: usize = 16;

/// Maps `f` over `0..n`, in parallel when the `parallel` feature is enabled.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    #[cfg(feature = "parallel")]
    {
        par_map_indexed(n, f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        seq_map_indexed(n, f)
    }
}

/// Sequential map over `0..n`; always available.
pub fn seq_map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    (0..n).map(f).collect()
}

/// Rayon map over `0..n`.
#[cfg(feature = "parallel")]
pub fn par_map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Send + Sync,
{
    if n < PAR_MIN {
        return seq_map_indexed(n, f);
    }
    (0..n).into_par_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_preserves_order() {
        let v = map_indexed(100, |i| i * i);
        assert_eq!(v[0], 0);
        assert_eq!(v[99], 9801);
        assert_eq!(v, seq_map_indexed(100, |i| i * i));
    }
}
