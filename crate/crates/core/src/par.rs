//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) `Exec::Parallel` runs on the
//! rayon thread pool; without it both variants run sequentially. Results are
//! identical either way: searches return the leftmost hit and maps keep
//! input order.

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Exec {
    Sequential,
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Exec::Parallel
        } else {
            Exec::Sequential
        }
    }
}

/// The first index in `range` (in increasing order) for which `f` returns
/// `Some`, together with that value.
pub fn find_first<T, F>(exec: Exec, range: std::ops::Range<u64>, f: F) -> Option<T>
where
    T: Send,
    F: Fn(u64) -> Option<T> + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            range.into_par_iter().find_map_first(f)
        }
        _ => range.into_iter().find_map(f),
    }
}

/// `items.map(f)` in input order.
pub fn map<I, T, F>(exec: Exec, items: &[I], f: F) -> Vec<T>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Exec::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

/// Runs `f` on a dedicated pool of `threads` workers when the `parallel`
/// feature is on; otherwise (or if the pool cannot be built) calls `f`
/// directly.
pub fn with_threads<R, F>(threads: usize, f: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    #[cfg(feature = "parallel")]
    {
        if let Ok(pool) = rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            return pool.install(f);
        }
    }
    let _ = threads;
    f()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        for exec in [Exec::Sequential, Exec::Parallel] {
            assert_eq!(find_first(exec, 0..1000, |i| (i * i > 500).then_some(i)), Some(23));
            assert_eq!(find_first(exec, 0..10, |_| None::<u64>), None);
            assert_eq!(map(exec, &[1, 2, 3], |x| x * 2), vec![2, 4, 6]);
        }
        assert_eq!(with_threads(2, || map(Exec::Parallel, &[1, 2], |x| x + 1)), vec![2, 3]);
    }
}
