//! Optimizer restarts spread over threads. Each restart owns its random
//! stream and ties are broken by restart index, so the result equals the
//! sequential one.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::thread;

use tarkit_core::optimizer::{merge_restarts, run_restart, OptConfig, OptError, OptResult};
use tarkit_core::Graph;

pub fn maximize_tar_parallel(g: &Graph, cfg: &OptConfig, threads: usize) -> Result<OptResult, OptError> {
    cfg.check()?;
    if g.n() == 0 {
        return Err(OptError::EmptyGraph);
    }
    let threads = threads.clamp(1, cfg.restarts);
    let next = AtomicUsize::new(0);
    let outcomes = thread::scope(|s| {
        let workers: Vec<_> = (0..threads)
            .map(|_| {
                s.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next.fetch_add(1, Ordering::Relaxed);
                        if i >= cfg.restarts {
                            break mine;
                        }
                        mine.push(run_restart(g, cfg, i));
                    }
                })
            })
            .collect();
        workers.into_iter().flat_map(|w| w.join().expect("restart panicked")).collect()
    });
    Ok(merge_restarts(g, outcomes))
}

#[cfg(test)]
mod tests {
    use super::*;
    use tarkit_core::optimizer::maximize_tar;

    #[test]
    fn matches_sequential() {
        let g = Graph::cycle(5);
        let cfg = OptConfig { restarts: 6, steps: 300, ..OptConfig::default() };
        let a = maximize_tar(&g, &cfg).unwrap();
        let b = maximize_tar_parallel(&g, &cfg, 3).unwrap();
        assert_eq!(a.best, b.best);
        assert_eq!(a.trace, b.trace);
    }
}
