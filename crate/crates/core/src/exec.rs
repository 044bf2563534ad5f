//! Execution adapter for the data-parallel inner loops (verification
//! sweeps, property sampling, oracle enumeration).
//!
//! With the default `parallel` feature the parallel mode fans out through
//! rayon; without it, or in [`ExecMode::Sequential`], everything runs on
//! the calling thread. Results are order-stable in both modes.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl ExecMode {
    /// Parallel when the feature is compiled in, sequential otherwise.
    pub fn auto() -> ExecMode {
        if cfg!(feature = "parallel") {
            ExecMode::Parallel
        } else {
            ExecMode::Sequential
        }
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_collect<T, U, F>(mode: ExecMode, items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.into_iter().map(f).collect(),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().map(f).collect()
            }
        }
    }
}

/// True if every item satisfies `f`; short-circuits in parallel mode too.
pub fn all<T, F>(mode: ExecMode, items: Vec<T>, f: F) -> bool
where
    T: Send,
    F: Fn(T) -> bool + Sync + Send,
{
    match mode {
        ExecMode::Sequential => items.into_iter().all(f),
        ExecMode::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                items.into_par_iter().all(f)
            }
            #[cfg(not(feature = "parallel"))]
            {
                items.into_iter().all(f)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree() {
        let xs: Vec<u64> = (0..100).collect();
        let seq = map_collect(ExecMode::Sequential, xs.clone(), |x| x * x);
        let par = map_collect(ExecMode::Parallel, xs, |x| x * x);
        assert_eq!(seq, par);
    }
}
