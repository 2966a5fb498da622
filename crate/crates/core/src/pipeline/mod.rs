//! Motif recovery: sampling, collision detection, boundary refinement,
//! length estimation, extraction and column voting.

mod boundaries;
mod collision;
mod extract;
mod selection;
mod vote;
mod window;

use std::ops::RangeInclusive;

pub use boundaries::{initial_boundaries, motif_length_median, PairBoundaries};
pub use collision::{collision_detection, improve_boundaries, Anchors, Improved};
pub use extract::{empty_threshold, extract_phase, match_region, Extraction};
pub use selection::point_selection;
pub use vote::voting_phase;

use crate::error::{Error, Result};
use crate::params::{omega_for, AlgorithmType, DerivedParams};
use crate::rng::{Phase, Seeder};
use crate::seq::SymbolString;

/// Work done by one run, in machine-independent units.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct WorkCounters {
    pub positions_sampled: u64,
    pub window_comparisons: u64,
    pub character_comparisons: u64,
    /// Symbols read by the voting phase.
    pub votes_cast: u64,
}

impl WorkCounters {
    /// Sampling plus window comparisons, the quantity the scaling fit uses.
    pub fn preprocessing(&self) -> u64 {
        self.positions_sampled + self.window_comparisons
    }
}

impl std::ops::AddAssign for WorkCounters {
    fn add_assign(&mut self, o: Self) {
        self.positions_sampled += o.positions_sampled;
        self.window_comparisons += o.window_comparisons;
        self.character_comparisons += o.character_comparisons;
        self.votes_cast += o.votes_cast;
    }
}

/// Estimated motif boundaries of one sequence; `None` is unknown.
///
/// `left` is the first motif position and `right` the last (1-based).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct RoughBoundaries {
    pub left: Option<usize>,
    pub right: Option<usize>,
}

impl RoughBoundaries {
    pub const UNKNOWN: Self = Self { left: None, right: None };

    pub fn new(left: Option<usize>, right: Option<usize>) -> Self {
        Self { left, right }
    }

    /// Both boundaries, when known and ordered.
    pub fn known(&self) -> Option<(usize, usize)> {
        match (self.left, self.right) {
            (Some(l), Some(r)) if l <= r => Some((l, r)),
            _ => None,
        }
    }
}

/// 1-based inclusive interval of a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Region {
    pub start: usize,
    pub end: usize,
}

impl Region {
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.end - self.start + 1
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RecoveryResult {
    pub consensus: SymbolString,
    /// Extracted region per `Z2` sequence, `None` for EMPTY.
    pub regions: Vec<Option<Region>>,
    /// Boundaries of the `Z1` sequences after the pairwise phase.
    pub z1_boundaries: Vec<RoughBoundaries>,
    /// Boundaries of the `Z2` sequences as seen by the accepted anchor.
    pub z2_boundaries: Vec<RoughBoundaries>,
    /// 0-based pair index of the anchor `Z1[2i]` that produced the regions.
    pub anchor: usize,
    /// Accepted `(a, b)` in the anchor sequence.
    pub candidate: (usize, usize),
    pub motif_length_estimate: usize,
    pub counters: WorkCounters,
    pub guarantee_regime: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    /// No `Z1` pair produced both boundaries.
    NoInitialBoundaries,
    /// Every anchor was exhausted without an acceptable candidate.
    NoCandidate,
}

impl std::fmt::Display for FailureReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FailureReason::NoInitialBoundaries => "no sequence pair produced rough boundaries",
            FailureReason::NoCandidate => "no anchor produced an acceptable candidate",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum RecoveryOutcome {
    Recovered(RecoveryResult),
    Failed {
        reason: FailureReason,
        counters: WorkCounters,
    },
}

impl RecoveryOutcome {
    pub fn result(&self) -> Option<&RecoveryResult> {
        match self {
            RecoveryOutcome::Recovered(r) => Some(r),
            RecoveryOutcome::Failed { .. } => None,
        }
    }

    pub fn into_result(self) -> Option<RecoveryResult> {
        match self {
            RecoveryOutcome::Recovered(r) => Some(r),
            RecoveryOutcome::Failed { .. } => None,
        }
    }

    pub fn counters(&self) -> &WorkCounters {
        match self {
            RecoveryOutcome::Recovered(r) => &r.counters,
            RecoveryOutcome::Failed { counters, .. } => counters,
        }
    }
}

/// Valid window starts around a rough boundary, `radius` either side.
fn around(center: usize, radius: usize, last_start: usize) -> RangeInclusive<usize> {
    selection::clipped(center.min(last_start), radius, 1, last_start)
}

/// Recovers the motif from `z1` (pairs `(z1[2i], z1[2i+1])`) and `z2`.
pub fn recover_motif(
    z1: &[SymbolString],
    z2: &[SymbolString],
    algo: AlgorithmType,
    params: &DerivedParams,
    seeder: &Seeder,
) -> Result<RecoveryOutcome> {
    if z1.is_empty() || !z1.len().is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "Z1 must hold a positive even number of sequences, got {}",
            z1.len()
        )));
    }
    if z2.is_empty() {
        return Err(Error::InvalidArgument("Z2 must not be empty".into()));
    }
    let w = params.window();
    for s in z1.iter().chain(z2) {
        s.check_alphabet(params.t)?;
        if s.len() < w {
            return Err(Error::InvalidArgument(format!(
                "sequence of length {} is shorter than the window {w}",
                s.len()
            )));
        }
    }

    let mut counters = WorkCounters::default();
    let k1 = z1.len() / 2;
    let mut z1_rough = vec![RoughBoundaries::UNKNOWN; z1.len()];
    for i in 0..k1 {
        let pair = initial_boundaries(&z1[2 * i], &z1[2 * i + 1], algo, params, seeder, i, &mut counters)?;
        if let Some(p) = pair {
            z1_rough[2 * i] = p.first;
            z1_rough[2 * i + 1] = p.second;
        }
    }
    let anchor_rough: Vec<RoughBoundaries> = (0..k1).map(|i| z1_rough[2 * i]).collect();
    let l_motif = match motif_length_median(&anchor_rough) {
        Ok(l) => l,
        Err(Error::EstimationFailure(_)) => {
            return Ok(RecoveryOutcome::Failed {
                reason: FailureReason::NoInitialBoundaries,
                counters,
            })
        }
        Err(e) => return Err(e),
    };
    let block = l_motif.div_ceil(4).max(1);

    // anchor positions near both rough boundaries
    let mut anchor_sets: Vec<Option<Vec<usize>>> = Vec::with_capacity(k1);
    for (i, rough) in anchor_rough.iter().enumerate() {
        let s = &z1[2 * i];
        let Some((left, right)) = rough.known() else {
            anchor_sets.push(None);
            continue;
        };
        let last = s.len() - w + 1;
        let intervals = [
            around(left, 2 * block, last),
            around((right + 1).saturating_sub(w).max(1), 2 * block, last),
        ];
        let mut rng = seeder.stream(Phase::AnchorSelection, i as u64, 0);
        anchor_sets.push(Some(point_selection(s.len(), block, &intervals, algo, params, &mut rng, &mut counters)?));
    }
    let mut target_sets = Vec::with_capacity(z2.len());
    for (j, s) in z2.iter().enumerate() {
        let mut rng = seeder.stream(Phase::TargetSelection, j as u64, 0);
        let full = [1..=s.len() - w + 1];
        target_sets.push(point_selection(s.len(), block, &full, algo, params, &mut rng, &mut counters)?);
    }

    let omega = omega_for(algo, params);
    for i in 0..k1 {
        let Some(u_anchor) = &anchor_sets[i] else { continue };
        let anchor = &z1[2 * i];
        let mut z2_rough = vec![RoughBoundaries::UNKNOWN; z2.len()];
        for (j, target) in z2.iter().enumerate() {
            let hits = collision_detection(anchor, u_anchor, target, &target_sets[j], omega, params, &mut counters)?;
            if let (Some(a_l), Some(a_r), Some(f_l), Some(f_r)) =
                (hits.first_s1, hits.last_s1, hits.first_s2, hits.last_s2)
            {
                let imp = improve_boundaries(anchor, a_l, a_r, target, f_l, f_r, 2 * block, params, &mut counters)?;
                z2_rough[j] = boundaries::to_rough(imp.left_s2, imp.right_s2, w);
            }
        }
        let Some(ext) = extract_phase(anchor, anchor_rough[i], z2, &z2_rough, params, &mut counters) else {
            continue;
        };
        let voted: Vec<&[u8]> = ext
            .regions
            .iter()
            .enumerate()
            .filter_map(|(j, r)| r.map(|r| z2[j].substring(r.start, r.end)))
            .collect();
        counters.votes_cast += voted.iter().map(|r| r.len() as u64).sum::<u64>();
        let consensus = voting_phase(&voted)?;
        return Ok(RecoveryOutcome::Recovered(RecoveryResult {
            consensus,
            candidate: (ext.a, ext.b),
            regions: ext.regions,
            z1_boundaries: z1_rough,
            z2_boundaries: z2_rough,
            anchor: i,
            motif_length_estimate: l_motif,
            counters,
            guarantee_regime: params.in_guarantee_regime(),
        }));
    }
    Ok(RecoveryOutcome::Failed {
        reason: FailureReason::NoCandidate,
        counters,
    })
}
