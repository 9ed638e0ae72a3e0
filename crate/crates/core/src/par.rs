//! Data-parallel mapping with a sequential fallback.
//!
//! With the `parallel` feature (default) [`par_map`] fans out over rayon's
//! global pool; without it, it is a plain iterator map. Output order always
//! matches input order, so results are deterministic either way.

/// How a batch should be executed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Parallel,
    Sequential,
}

impl Mode {
    /// The default for this build: parallel when the feature is on.
    pub fn preferred() -> Mode {
        if cfg!(feature = "parallel") {
            Mode::Parallel
        } else {
            Mode::Sequential
        }
    }
}

pub fn seq_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    F: Fn(&T) -> U,
{
    items.iter().map(f).collect()
}

#[cfg(feature = "parallel")]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    use rayon::prelude::*;
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn par_map<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    seq_map(items, f)
}

pub fn map_with<T, U, F>(mode: Mode, items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    match mode {
        Mode::Parallel => par_map(items, f),
        Mode::Sequential => seq_map(items, f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn modes_agree_and_preserve_order() {
        let xs: Vec<u64> = (0..200).collect();
        let a = map_with(Mode::Parallel, &xs, |x| x * x);
        let b = map_with(Mode::Sequential, &xs, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(a[17], 289);
    }
}
