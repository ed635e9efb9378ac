//! Data-parallel helpers.
//!
//! With the `parallel` feature these dispatch to rayon's global pool; without
//! it they are plain sequential iterators. Output order is always the input
//! order, so results are identical either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).collect();
    #[cfg(not(feature = "parallel"))]
    return items.iter().map(f).collect();
}

/// Maps `f` over `items` and concatenates the results in order.
pub fn flat_map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Vec<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().flat_map_iter(f).collect();
    #[cfg(not(feature = "parallel"))]
    return items.iter().flat_map(f).collect();
}

/// Maps `f` over `start..end`, preserving order.
pub fn map_range<R, F>(start: i128, end: i128, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(i128) -> R + Sync + Send,
{
    let idx: Vec<i128> = (start..end).collect();
    map(&idx, |&i| f(i))
}

/// Sums `f` over `items`.
pub fn sum<T, F>(items: &[T], f: F) -> u64
where
    T: Sync,
    F: Fn(&T) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return items.par_iter().map(f).sum();
    #[cfg(not(feature = "parallel"))]
    return items.iter().map(f).sum();
}

/// True when this build dispatches to rayon.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_is_preserved() {
        let v: Vec<u32> = (0..1000).collect();
        assert_eq!(map(&v, |x| x * 2), v.iter().map(|x| x * 2).collect::<Vec<_>>());
        assert_eq!(flat_map(&v[..3], |&x| vec![x, x]), vec![0, 0, 1, 1, 2, 2]);
        assert_eq!(sum(&v, |&x| x as u64), 499_500);
        assert_eq!(map_range(-2, 2, |i| i), vec![-2, -1, 0, 1]);
    }
}
