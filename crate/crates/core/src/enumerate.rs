//! Exhaustive scan over the coloring space `[k]^n`.
//!
//! Colorings are indexed by a mixed-radix counter: coloring `i` assigns
//! vertex `v` the color `(i / k^v) % k`, so the lowest vertex id is the
//! fastest digit. The index space is split into fixed, index-derived chunks
//! processed in parallel; reductions are sums, so results are identical for
//! every partitioning and thread count.

use rayon::prelude::*;

/// Number of colorings in `[k]^n` satisfying `pred`.
///
/// The caller must have budget-checked `k^n`; `k >= 1`.
pub(crate) fn count_colorings_where<F>(n: usize, k: usize, pred: F) -> u128
where
    F: Fn(&[usize]) -> bool + Sync,
{
    debug_assert!(k >= 1);
    let total = (k as u128).pow(n as u32);
    let chunk = chunk_size(total);
    let chunks = total.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * chunk;
            let end = (start + chunk).min(total);
            let mut coloring = decompose(start, n, k);
            let mut count = 0u128;
            for _ in start..end {
                if pred(&coloring) {
                    count += 1;
                }
                increment(&mut coloring, k);
            }
            count
        })
        .sum()
}

/// Tallies colorings satisfying `pred` into `bins` buckets keyed by `key`.
///
/// `key` must return a value below `bins` for every coloring.
pub(crate) fn tally_colorings_where<P, K>(
    n: usize,
    k: usize,
    bins: usize,
    pred: P,
    key: K,
) -> Vec<u128>
where
    P: Fn(&[usize]) -> bool + Sync,
    K: Fn(&[usize]) -> usize + Sync,
{
    debug_assert!(k >= 1);
    let total = (k as u128).pow(n as u32);
    let chunk = chunk_size(total);
    let chunks = total.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * chunk;
            let end = (start + chunk).min(total);
            let mut coloring = decompose(start, n, k);
            let mut tally = vec![0u128; bins];
            for _ in start..end {
                if pred(&coloring) {
                    tally[key(&coloring)] += 1;
                }
                increment(&mut coloring, k);
            }
            tally
        })
        .reduce(
            || vec![0u128; bins],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        )
}

fn chunk_size(total: u128) -> u128 {
    // Fixed function of the problem size so the work split never depends on
    // the thread pool.
    (total / 256).max(4096)
}

fn decompose(mut index: u128, n: usize, k: usize) -> Vec<usize> {
    let mut coloring = vec![0usize; n];
    for digit in coloring.iter_mut() {
        *digit = (index % k as u128) as usize;
        index /= k as u128;
    }
    coloring
}

fn increment(coloring: &mut [usize], k: usize) {
    for digit in coloring.iter_mut() {
        *digit += 1;
        if *digit < k {
            return;
        }
        *digit = 0;
    }
}
