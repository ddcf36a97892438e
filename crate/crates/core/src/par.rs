//! Data-parallel helpers with a sequential fallback.
//!
//! Every solver takes a [`Parallelism`] and routes its embarrassingly
//! parallel loops through [`map`]. Without the `parallel` feature both
//! settings run sequentially. Results are always returned in input order,
//! so merged outputs do not depend on the schedule.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    #[default]
    Rayon,
}

impl Parallelism {
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Parallelism::Rayon
    }
}

pub fn map<T, R, F>(mode: Parallelism, items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if mode.is_parallel() {
        use rayon::prelude::*;
        return items.into_par_iter().map(f).collect();
    }
    let _ = mode;
    items.into_iter().map(f).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_preserve_order() {
        let xs: Vec<u64> = (0..1000).collect();
        let a = map(Parallelism::Sequential, xs.clone(), |x| x * x);
        let b = map(Parallelism::Rayon, xs, |x| x * x);
        assert_eq!(a, b);
        assert_eq!(a[31], 961);
    }
}
