use crate::error::{Error, Result};
use crate::params::{omega_for, AlgorithmType, DerivedParams};
use crate::pipeline::collision::{collision_detection, improve_boundaries};
use crate::pipeline::selection::point_selection;
use crate::pipeline::{RoughBoundaries, WorkCounters};
use crate::rng::{Phase, Seeder};
use crate::seq::SymbolString;

/// Rough boundaries for both members of a pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PairBoundaries {
    pub first: RoughBoundaries,
    pub second: RoughBoundaries,
}

/// Converts improved window starts into rough boundaries; the right boundary
/// is the last position of the rightmost qualifying window.
pub(crate) fn to_rough(left: Option<usize>, right_start: Option<usize>, w: usize) -> RoughBoundaries {
    RoughBoundaries::new(left, right_start.map(|r| r + w - 1))
}

/// Rough motif boundaries of a pair by sampling and collision, halving the
/// block size until a collision appears.
///
/// Returns `None` (FAILURE) when no left and right collision is ever found.
/// Sub-streams are keyed by `pair_index` and the loop iteration.
pub fn initial_boundaries(
    s1: &SymbolString,
    s2: &SymbolString,
    algo: AlgorithmType,
    params: &DerivedParams,
    seeder: &Seeder,
    pair_index: usize,
    counters: &mut WorkCounters,
) -> Result<Option<PairBoundaries>> {
    let w = params.window();
    if s1.len() < w || s2.len() < w {
        return Err(Error::InvalidArgument(format!(
            "sequences of length {} and {} are shorter than the window {w}",
            s1.len(),
            s2.len()
        )));
    }
    let omega = omega_for(algo, params);
    let stop_below = params.sampling_threshold() / 2.0;
    let mut block = ((params.n as f64).powf(0.4).ceil() as usize).max(1);
    let starts1 = [1..=s1.len() - w + 1];
    let starts2 = [1..=s2.len() - w + 1];
    let full = |len: usize, u: &[usize]| u.len() == len - w + 1;

    let mut iteration = 0u64;
    loop {
        let mut rng1 = seeder.stream(Phase::InitialSelection, 2 * pair_index as u64, iteration);
        let mut rng2 = seeder.stream(Phase::InitialSelection, 2 * pair_index as u64 + 1, iteration);
        let u1 = point_selection(s1.len(), block, &starts1, algo, params, &mut rng1, counters)?;
        let u2 = point_selection(s2.len(), block, &starts2, algo, params, &mut rng2, counters)?;
        let anchors = collision_detection(s1, &u1, s2, &u2, omega, params, counters)?;
        if let (Some(a), Some(a_last), Some(f), Some(f_last)) = (
            anchors.first_s1,
            anchors.last_s1,
            anchors.first_s2,
            anchors.last_s2,
        ) {
            let improved = improve_boundaries(s1, a, a_last, s2, f, f_last, 2 * block, params, counters)?;
            return Ok(Some(PairBoundaries {
                first: to_rough(improved.left_s1, improved.right_s1, w),
                second: to_rough(improved.left_s2, improved.right_s2, w),
            }));
        }
        // a full selection on both sides will not change on later iterations
        if full(s1.len(), &u1) && full(s2.len(), &u2) {
            return Ok(None);
        }
        block /= 2;
        iteration += 1;
        if block == 0 || (block as f64) < stop_below {
            return Ok(None);
        }
    }
}

/// Lower median of `right - left` over the pairs with both boundaries known.
pub fn motif_length_median(rough: &[RoughBoundaries]) -> Result<usize> {
    let mut lengths: Vec<usize> = rough
        .iter()
        .filter_map(|b| b.known())
        .map(|(l, r)| r - l)
        .collect();
    if lengths.is_empty() {
        return Err(Error::EstimationFailure(
            "no sequence pair produced both rough boundaries".into(),
        ));
    }
    lengths.sort_unstable();
    Ok(lengths[(lengths.len() - 1) / 2])
}
