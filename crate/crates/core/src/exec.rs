//! Case evaluation strategy. With the `parallel` feature (on by default) work
//! is spread over the rayon pool; without it everything runs on the caller's
//! thread. Output order never depends on scheduling.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Exec {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

impl Exec {
    /// Order-preserving map.
    pub fn map<T, U, F>(self, items: &[T], f: F) -> Vec<U>
    where
        T: Sync,
        U: Send,
        F: Fn(&T) -> U + Sync + Send,
    {
        match self {
            Exec::Sequential => items.iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Exec::Parallel => {
                use rayon::prelude::*;
                items.par_iter().map(f).collect()
            }
        }
    }
}
