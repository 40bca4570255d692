//! Execution policy for embarrassingly parallel workloads.
//!
//! Results are always collected in task-index order and reduced
//! sequentially, so outputs are bit-identical whatever the worker count.
//! The `parallel` feature gates the rayon dependency; without it
//! [`ExecPolicy::Parallel`] degrades to sequential execution.

/// Environment variable capping the worker thread count.
pub const THREADS_ENV: &str = "THIRDQ_THREADS";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExecPolicy {
    Sequential,
    #[default]
    Parallel,
}

#[cfg(feature = "parallel")]
fn ensure_pool() {
    use std::sync::Once;
    static INIT: Once = Once::new();
    INIT.call_once(|| {
        if let Some(k) = std::env::var(THREADS_ENV).ok().and_then(|s| s.parse::<usize>().ok()) {
            if k >= 1 {
                // Ignore failure: the global pool may already be running.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(k).build_global();
            }
        }
    });
}

/// Apply `f` to `0..count`, returning results in index order.
pub fn indexed_map<T, F>(count: usize, policy: ExecPolicy, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    match policy {
        ExecPolicy::Sequential => (0..count).map(f).collect(),
        ExecPolicy::Parallel => {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                ensure_pool();
                (0..count).into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..count).map(f).collect()
            }
        }
    }
}
