//! Data-parallel helpers with a sequential fallback.
//!
//! The sweeps in this crate (region maps, enumeration, batch round trips)
//! are independent per item; with the `parallel` feature they fan out on the
//! rayon pool, otherwise they run as plain loops. Output order is the input
//! order either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Map over items, in parallel when the `parallel` feature is enabled.
#[cfg(feature = "parallel")]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}

/// Always-sequential twin of [`map_collect`], kept available for the
/// benchmark suite to compare against.
pub fn map_collect_seq<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    F: Fn(T) -> U,
{
    items.into_iter().map(f).collect()
}
