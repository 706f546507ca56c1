//! Execution-mode switch for the data-parallel inner loops.
//!
//! With the `parallel` feature (default), `ExecMode::Parallel` fans work out
//! over rayon; without it, both modes run sequentially. Results are merged in
//! input order either way, so output is identical across modes.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExecMode {
    Sequential,
    Parallel,
}

impl Default for ExecMode {
    fn default() -> Self {
        default_mode()
    }
}

pub fn default_mode() -> ExecMode {
    #[cfg(feature = "parallel")]
    {
        ExecMode::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    {
        ExecMode::Sequential
    }
}

/// Order-preserving map over an owned vector.
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_preserve_order() {
        let items: Vec<u64> = (0..100).collect();
        let seq = map_collect(ExecMode::Sequential, items.clone(), |x| x * x);
        let par = map_collect(ExecMode::Parallel, items, |x| x * x);
        assert_eq!(seq, par);
        assert_eq!(seq[10], 100);
    }
}
