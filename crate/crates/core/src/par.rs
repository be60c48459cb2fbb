//! Chartwise parallelism, capped by `BLOWUP_CALC_THREADS`.
//!
//! All engine values are immutable, so per-chart work can run on a rayon
//! pool. The cap comes from the environment: unset, `0` or `1` means
//! sequential execution; larger values bound the pool size. Results are
//! collected in input order, so the outcome is identical either way.

use std::sync::OnceLock;

fn pool() -> Option<&'static rayon::ThreadPool> {
    static POOL: OnceLock<Option<rayon::ThreadPool>> = OnceLock::new();
    POOL.get_or_init(|| {
        let cap = std::env::var("BLOWUP_CALC_THREADS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .unwrap_or(1);
        if cap <= 1 {
            None
        } else {
            rayon::ThreadPoolBuilder::new().num_threads(cap).build().ok()
        }
    })
    .as_ref()
}

/// Maps `f` over `inputs`, preserving order.
pub fn par_map<I, O, F>(inputs: &[I], f: F) -> Vec<O>
where
    I: Sync,
    O: Send,
    F: Fn(&I) -> O + Sync,
{
    match pool() {
        Some(p) => p.install(|| {
            use rayon::prelude::*;
            inputs.par_iter().map(&f).collect()
        }),
        None => inputs.iter().map(&f).collect(),
    }
}
