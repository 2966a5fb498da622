//! Left/right matching predicates used by boundary detection and extraction.

use crate::error::{Error, Result};
use crate::params::DerivedParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatchKind {
    WeakLeft,
    Left,
    WeakRight,
    Right,
    /// Both left and right matched.
    Full,
}

/// `mismatches / len <= bound`, the single comparison every distance test uses.
#[inline]
pub(crate) fn within(mismatches: usize, len: usize, bound: f64) -> bool {
    mismatches as f64 / len as f64 <= bound
}

/// Largest mismatch count a `len`-long comparison may have under `bound`.
pub(crate) fn mismatch_budget(len: usize, bound: f64) -> usize {
    (0..=len).rev().find(|&k| within(k, len, bound)).unwrap_or(0)
}

/// Prefix test over the first `w` symbols yielded by the two iterators.
///
/// The first `min(v - 1, w)` symbols must agree when `exact_prefix` is set;
/// every prefix of length `i` with `v <= i <= w` must have relative distance
/// at most `beta`. One pass with a running mismatch count.
fn prefix_match<'a>(
    x1: impl Iterator<Item = &'a u8>,
    x2: impl Iterator<Item = &'a u8>,
    w: usize,
    v: usize,
    beta: f64,
    exact_prefix: bool,
) -> bool {
    let mut mismatches = 0usize;
    for (i, (a, b)) in x1.zip(x2).take(w).enumerate() {
        let i = i + 1;
        if a != b {
            mismatches += 1;
            if exact_prefix && i < v {
                return false;
            }
        }
        if i >= v && !within(mismatches, i, beta) {
            return false;
        }
    }
    true
}

pub(crate) fn left_matched(x1: &[u8], x2: &[u8], w: usize, v: usize, beta: f64, weak: bool) -> bool {
    prefix_match(x1.iter(), x2.iter(), w, v, beta, !weak)
}

pub(crate) fn right_matched(x1: &[u8], x2: &[u8], w: usize, v: usize, beta: f64, weak: bool) -> bool {
    prefix_match(x1.iter().rev(), x2.iter().rev(), w, v, beta, !weak)
}

/// Evaluates one matching predicate with window `w`, using `params.v` and
/// `params.beta`.
pub fn match_predicate(
    kind: MatchKind,
    x1: &[u8],
    x2: &[u8],
    params: &DerivedParams,
    w: usize,
) -> Result<bool> {
    match_predicate_with(kind, x1, x2, w, params.v, params.beta)
}

/// [`match_predicate`] with explicit `v` and `beta`.
pub fn match_predicate_with(
    kind: MatchKind,
    x1: &[u8],
    x2: &[u8],
    w: usize,
    v: usize,
    beta: f64,
) -> Result<bool> {
    if x1.len() < w || x2.len() < w {
        return Err(Error::InvalidArgument(format!(
            "strings of length {} and {} are shorter than the window {w}",
            x1.len(),
            x2.len()
        )));
    }
    Ok(match kind {
        MatchKind::WeakLeft => left_matched(x1, x2, w, v, beta, true),
        MatchKind::Left => left_matched(x1, x2, w, v, beta, false),
        MatchKind::WeakRight => right_matched(x1, x2, w, v, beta, true),
        MatchKind::Right => right_matched(x1, x2, w, v, beta, false),
        MatchKind::Full => {
            left_matched(x1, x2, w, v, beta, false) && right_matched(x1, x2, w, v, beta, false)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const KINDS: [MatchKind; 5] = [
        MatchKind::WeakLeft,
        MatchKind::Left,
        MatchKind::WeakRight,
        MatchKind::Right,
        MatchKind::Full,
    ];

    fn base() -> Vec<u8> {
        (0..32u8).map(|i| (i * 7 + 3) % 4).collect()
    }

    #[test]
    fn identical_strings_match_every_kind() {
        let x = base();
        for k in KINDS {
            assert!(match_predicate_with(k, &x, &x, 32, 10, 0.0).unwrap());
        }
    }

    #[test]
    fn first_position_difference_breaks_only_exact_prefix() {
        let x1 = base();
        let mut x2 = x1.clone();
        x2[0] = (x2[0] + 1) % 4;
        // 1/i <= 0.12 for every i >= 10
        assert!(match_predicate_with(MatchKind::WeakLeft, &x1, &x2, 32, 10, 0.12).unwrap());
        assert!(!match_predicate_with(MatchKind::Left, &x1, &x2, 32, 10, 0.12).unwrap());
        assert!(match_predicate_with(MatchKind::Right, &x1, &x2, 32, 10, 0.12).unwrap());
    }

    #[test]
    fn last_position_difference_breaks_right() {
        let x1 = base();
        let mut x2 = x1.clone();
        x2[31] = (x2[31] + 1) % 4;
        assert!(match_predicate_with(MatchKind::Left, &x1, &x2, 32, 10, 0.12).unwrap());
        assert!(!match_predicate_with(MatchKind::Right, &x1, &x2, 32, 10, 0.12).unwrap());
        assert!(match_predicate_with(MatchKind::WeakRight, &x1, &x2, 32, 10, 0.12).unwrap());
        assert!(!match_predicate_with(MatchKind::Full, &x1, &x2, 32, 10, 0.12).unwrap());
    }

    #[test]
    fn short_prefix_distance_is_checked_from_v() {
        // mismatch at position 10: prefix distance 1/10 > 0.09
        let x1 = base();
        let mut x2 = x1.clone();
        x2[9] = (x2[9] + 1) % 4;
        assert!(!match_predicate_with(MatchKind::WeakLeft, &x1, &x2, 32, 10, 0.09).unwrap());
        assert!(match_predicate_with(MatchKind::WeakLeft, &x1, &x2, 32, 10, 0.1).unwrap());
    }

    #[test]
    fn window_shorter_than_v_is_exact() {
        let x1 = vec![0u8, 1, 2, 3, 0, 1];
        let mut x2 = x1.clone();
        assert!(match_predicate_with(MatchKind::Left, &x1, &x2, 6, 10, 0.5).unwrap());
        x2[5] = 3;
        assert!(!match_predicate_with(MatchKind::Left, &x1, &x2, 6, 10, 0.5).unwrap());
        // weak variant has no exact clause and no distance clause left
        assert!(match_predicate_with(MatchKind::WeakLeft, &x1, &x2, 6, 10, 0.5).unwrap());
    }

    #[test]
    fn too_short_is_an_error() {
        assert!(match_predicate_with(MatchKind::Left, &[0, 1], &[0, 1, 2], 3, 2, 0.1).is_err());
    }

    #[test]
    fn budget_agrees_with_within() {
        assert_eq!(mismatch_budget(10, 0.0), 0);
        assert_eq!(mismatch_budget(10, 0.12), 1);
        assert_eq!(mismatch_budget(10, 0.2), 2);
        assert_eq!(mismatch_budget(32, 0.12), 3);
        assert_eq!(mismatch_budget(4, 1.0), 4);
    }
}
