use std::ops::RangeInclusive;

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::params::{AlgorithmType, DerivedParams};
use crate::pipeline::WorkCounters;

/// Chooses the positions of `I` (a union of 1-based inclusive intervals of a
/// sequence of length `seq_len`) whose windows take part in collision
/// detection, with block size `block`.
///
/// The deterministic variant, and randomized variants whose block is below
/// the sampling threshold, take every position. Otherwise each interval is cut
/// into consecutive blocks of `block` positions (the last one may be short)
/// and `ceil(M(block))` positions are drawn without replacement from each,
/// or the whole block when it is smaller. Output is sorted and deduplicated.
pub fn point_selection<R: Rng + ?Sized>(
    seq_len: usize,
    block: usize,
    intervals: &[RangeInclusive<usize>],
    algo: AlgorithmType,
    params: &DerivedParams,
    rng: &mut R,
    counters: &mut WorkCounters,
) -> Result<Vec<usize>> {
    if block == 0 {
        return Err(Error::InvalidArgument("block size must be at least 1".into()));
    }
    for iv in intervals {
        if !iv.is_empty() && (*iv.start() < 1 || *iv.end() > seq_len) {
            return Err(Error::InvalidArgument(format!(
                "interval [{}, {}] lies outside [1, {seq_len}]",
                iv.start(),
                iv.end()
            )));
        }
    }

    let take_all = !algo.is_randomized() || (block as f64) < params.sampling_threshold();
    let mut out = Vec::new();
    if take_all {
        for iv in intervals {
            out.extend(iv.clone());
        }
    } else {
        let per_block = params.m_of(block as f64).ceil() as usize;
        for iv in intervals.iter().filter(|iv| !iv.is_empty()) {
            let mut start = *iv.start();
            while start <= *iv.end() {
                let end = (start + block - 1).min(*iv.end());
                let len = end - start + 1;
                if len <= per_block {
                    out.extend(start..=end);
                } else {
                    out.extend(sample(rng, len, per_block).into_iter().map(|i| start + i));
                }
                start = end + 1;
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    counters.positions_sampled += out.len() as u64;
    Ok(out)
}

/// Clips `[center - radius, center + radius]` to `[lo, hi]`.
pub(crate) fn clipped(center: usize, radius: usize, lo: usize, hi: usize) -> RangeInclusive<usize> {
    let start = center.saturating_sub(radius).max(lo);
    let end = center.saturating_add(radius).min(hi);
    start..=end
}
