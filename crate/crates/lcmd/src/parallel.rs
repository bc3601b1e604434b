//! Rayon driver for the chunked brute-force fold.

use lcmd_core::{BigUint, BruteOptions, BrutePlan, IntMatrix, LcmAccumulator};
use rayon::prelude::*;

/// Parallel [`lcmd_core::lcmd_brute`]. `threads = None` uses the global
/// rayon pool. Chunk results are merged with the lcm monoid, so the value
/// does not depend on the thread count or chunk size.
pub fn lcmd_brute_parallel(
    m: &IntMatrix,
    opts: BruteOptions,
    threads: Option<usize>,
) -> lcmd_core::Result<BigUint> {
    let plan = BrutePlan::new(m, opts)?;
    let run = || {
        let chunks = u64::try_from(plan.chunk_count()).expect("chunk count fits u64");
        (0..chunks)
            .into_par_iter()
            .map(|i| plan.fold_chunk(i as u128))
            .reduce(LcmAccumulator::new, |mut a, b| {
                a.merge(&b);
                a
            })
            .finish()
    };
    match threads {
        Some(t) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(t.max(1))
                .build()
                .map_err(|e| lcmd_core::Error::Domain(e.to_string()))?;
            Ok(pool.install(run))
        }
        None => Ok(run()),
    }
}
