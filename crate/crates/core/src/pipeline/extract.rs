use crate::matchkit::{left_matched, right_matched};
use crate::params::DerivedParams;
use crate::pipeline::{Region, RoughBoundaries, WorkCounters};
use crate::seq::SymbolString;

/// Left search range `[left, left + slack]` restricted to valid window starts.
fn left_range(left: usize, slack: usize, len: usize, w: usize) -> std::ops::RangeInclusive<usize> {
    let hi = (left + slack).min(len.saturating_sub(w) + 1);
    left.max(1)..=hi
}

/// Right search range `[right - slack, right]` restricted to valid window ends.
fn right_range(right: usize, slack: usize, len: usize, w: usize) -> std::ops::RangeInclusive<usize> {
    right.saturating_sub(slack).max(w)..=right.min(len)
}

fn first_left(g_l: &[u8], s: &[u8], range: std::ops::RangeInclusive<usize>, params: &DerivedParams, counters: &mut WorkCounters) -> Option<usize> {
    let w = g_l.len();
    range.into_iter().find(|&a| {
        counters.window_comparisons += 1;
        counters.character_comparisons += w as u64;
        left_matched(g_l, &s[a - 1..a - 1 + w], w, params.v, params.beta, false)
    })
}

fn first_right(g_r: &[u8], s: &[u8], range: std::ops::RangeInclusive<usize>, params: &DerivedParams, counters: &mut WorkCounters) -> Option<usize> {
    let w = g_r.len();
    range.rev().find(|&b| {
        counters.window_comparisons += 1;
        counters.character_comparisons += w as u64;
        right_matched(g_r, &s[b - w..b], w, params.v, params.beta, false)
    })
}

/// Locates the motif region of `s` from a left part `g_l` and right part
/// `g_r` (both of the window length).
///
/// `a` is the first left match scanning up from the rough left boundary,
/// `b` the first right match scanning down from the rough right boundary,
/// each within `v + u2` positions. `None` when either is missing, `a > b`, or
/// a rough boundary is unknown.
pub fn match_region(
    g_l: &[u8],
    g_r: &[u8],
    s: &SymbolString,
    rough: RoughBoundaries,
    params: &DerivedParams,
    counters: &mut WorkCounters,
) -> Option<Region> {
    let (left, right) = rough.known()?;
    let w = g_l.len();
    if g_r.len() != w || s.len() < w {
        return None;
    }
    let slack = params.v + params.u2;
    let a = first_left(g_l, s.as_slice(), left_range(left, slack, s.len(), w), params, counters)?;
    let b = first_right(g_r, s.as_slice(), right_range(right, slack, s.len(), w), params, counters)?;
    (a <= b).then_some(Region { start: a, end: b })
}

/// Candidate accepted by [`extract_phase`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extraction {
    /// Start of the left part in the anchor sequence.
    pub a: usize,
    /// End of the right part in the anchor sequence.
    pub b: usize,
    /// One entry per target sequence, `None` for EMPTY.
    pub regions: Vec<Option<Region>>,
}

impl Extraction {
    pub fn candidate_len(&self) -> usize {
        self.b - self.a + 1
    }

    pub fn empties(&self) -> usize {
        self.regions.iter().filter(|r| r.is_none()).count()
    }
}

/// Largest EMPTY count a candidate may produce over `k2` targets.
pub fn empty_threshold(params: &DerivedParams, k2: usize) -> usize {
    let bound = ((params.q0 + params.r + 2.0 * params.epsilon) * k2 as f64).floor();
    (bound.max(0.0) as usize).min(k2 / 2)
}

/// Tries every candidate pair `(a, b)` around the anchor's rough boundaries,
/// `a` ascending then `b` descending, and returns the candidate with the
/// fewest EMPTY results over `targets` among those within
/// [`empty_threshold`]; ties go to the earliest candidate. A region whose
/// length differs from the candidate's `b - a + 1` counts as EMPTY.
pub fn extract_phase(
    anchor: &SymbolString,
    anchor_rough: RoughBoundaries,
    targets: &[SymbolString],
    target_rough: &[RoughBoundaries],
    params: &DerivedParams,
    counters: &mut WorkCounters,
) -> Option<Extraction> {
    assert_eq!(targets.len(), target_rough.len(), "one rough boundary pair per target");
    let (left, right) = anchor_rough.known()?;
    let w = params.window();
    if anchor.len() < w {
        return None;
    }
    let k2 = targets.len();
    let threshold = empty_threshold(params, k2);
    let slack = params.v + params.u1;
    let s = anchor.as_slice();
    let match_slack = params.v + params.u2;

    let b_range = right_range(right, slack, anchor.len(), w);
    // right hits depend only on b, so they are shared across all a
    let mut best: Option<Extraction> = None;
    let mut right_hits: Vec<Option<Vec<Option<usize>>>> = vec![None; b_range.clone().count()];
    for a in left_range(left, slack, anchor.len(), w) {
        let g_l = &s[a - 1..a - 1 + w];
        let left_hits: Vec<Option<usize>> = targets
            .iter()
            .zip(target_rough)
            .map(|(t, r)| {
                let (tl, _) = r.known()?;
                first_left(g_l, t.as_slice(), left_range(tl, match_slack, t.len(), w), params, counters)
            })
            .collect();
        for b in b_range.clone().rev() {
            let slot = b - b_range.start();
            if b < a {
                break;
            }
            let hits = right_hits[slot].get_or_insert_with(|| {
                let g_r = &s[b - w..b];
                targets
                    .iter()
                    .zip(target_rough)
                    .map(|(t, r)| {
                        let (_, tr) = r.known()?;
                        first_right(g_r, t.as_slice(), right_range(tr, match_slack, t.len(), w), params, counters)
                    })
                    .collect()
            });
            let len = b - a + 1;
            let regions: Vec<Option<Region>> = left_hits
                .iter()
                .zip(hits.iter())
                .map(|(&l, &r)| match (l, r) {
                    (Some(x), Some(y)) if x <= y && y - x + 1 == len => Some(Region { start: x, end: y }),
                    _ => None,
                })
                .collect();
            let empties = regions.iter().filter(|r| r.is_none()).count();
            if empties <= threshold && best.as_ref().is_none_or(|e| empties < e.empties()) {
                best = Some(Extraction { a, b, regions });
                if empties == 0 {
                    return best;
                }
            }
        }
    }
    best
}
