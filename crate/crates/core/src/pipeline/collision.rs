use crate::error::{Error, Result};
use crate::params::DerivedParams;
use crate::pipeline::selection::clipped;
use crate::pipeline::window::WindowComparator;
use crate::pipeline::WorkCounters;
use crate::seq::SymbolString;

/// Extreme window starts among qualifying window pairs, each `None` when no
/// pair qualifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Anchors {
    /// Least qualifying start in the first sequence.
    pub first_s1: Option<usize>,
    /// Greatest qualifying start in the first sequence.
    pub last_s1: Option<usize>,
    /// Least qualifying start in the second sequence.
    pub first_s2: Option<usize>,
    /// Greatest qualifying start in the second sequence.
    pub last_s2: Option<usize>,
}

impl Anchors {
    pub fn is_complete(&self) -> bool {
        self.first_s1.is_some()
            && self.last_s1.is_some()
            && self.first_s2.is_some()
            && self.last_s2.is_some()
    }

    fn record(&mut self, a: usize, a_last: usize, b_first: usize, b_last: usize) {
        self.first_s1 = Some(self.first_s1.map_or(a, |x| x.min(a)));
        self.last_s1 = Some(self.last_s1.map_or(a_last, |x| x.max(a_last)));
        self.first_s2 = Some(self.first_s2.map_or(b_first, |x| x.min(b_first)));
        self.last_s2 = Some(self.last_s2.map_or(b_last, |x| x.max(b_last)));
    }
}

fn check_positions(name: &str, positions: &[usize], seq_len: usize, w: usize) -> Result<()> {
    if let Some(&bad) = positions.iter().find(|&&u| u < 1 || u + w - 1 > seq_len) {
        return Err(Error::InvalidArgument(format!(
            "position {bad} in {name} has no full window of length {w} in a sequence of length {seq_len}"
        )));
    }
    Ok(())
}

/// Finds the extreme window starts over all pairs `(a in u1, b in u2)` whose
/// windows of length `params.window()` are within relative distance `omega`.
///
/// With `omega == 0` windows are grouped by exact content through fingerprint
/// buckets; otherwise every pair is compared directly.
pub fn collision_detection(
    s1: &SymbolString,
    u1: &[usize],
    s2: &SymbolString,
    u2: &[usize],
    omega: f64,
    params: &DerivedParams,
    counters: &mut WorkCounters,
) -> Result<Anchors> {
    let w = params.window();
    check_positions("U1", u1, s1.len(), w)?;
    check_positions("U2", u2, s2.len(), w)?;
    if !(0.0..1.0).contains(&omega) {
        return Err(Error::InvalidArgument(format!(
            "omega must lie in [0, 1), got {omega}"
        )));
    }
    let cmp = WindowComparator::new(params.t, w, omega);
    let (x, y) = (s1.as_slice(), s2.as_slice());
    let mut anchors = Anchors::default();
    if cmp.exact_only() {
        cmp.bucket_exact(x, u1, y, u2, counters, |a, b_min, b_max| {
            anchors.record(a, a, b_min, b_max)
        });
    } else {
        cmp.scan_pairs(x, u1, y, u2, counters, |a, b| anchors.record(a, a, b, b));
    }
    Ok(anchors)
}

/// Refined window starts returned by [`improve_boundaries`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Improved {
    pub left_s1: Option<usize>,
    pub right_s1: Option<usize>,
    pub left_s2: Option<usize>,
    pub right_s2: Option<usize>,
}

/// Re-searches `radius` around each rough anchor with threshold `beta`.
///
/// The left box pairs `[a_l - radius, a_l + radius]` in `s1` with
/// `[f_l - radius, f_l + radius]` in `s2` and yields the least qualifying
/// start on each side; the right box does the same around `a_r`/`f_r` and
/// yields the greatest. Boxes are clipped to valid window starts.
#[allow(clippy::too_many_arguments)]
pub fn improve_boundaries(
    s1: &SymbolString,
    a_l: usize,
    a_r: usize,
    s2: &SymbolString,
    f_l: usize,
    f_r: usize,
    radius: usize,
    params: &DerivedParams,
    counters: &mut WorkCounters,
) -> Result<Improved> {
    let w = params.window();
    if s1.len() < w || s2.len() < w {
        return Err(Error::InvalidArgument(format!(
            "sequences must be at least the window length {w}"
        )));
    }
    if radius == 0 {
        return Err(Error::InvalidArgument("radius must be at least 1".into()));
    }
    let last1 = s1.len() - w + 1;
    let last2 = s2.len() - w + 1;
    let cmp = WindowComparator::new(params.t, w, params.beta);
    let (x, y) = (s1.as_slice(), s2.as_slice());

    let left1: Vec<usize> = clipped(a_l, radius, 1, last1).collect();
    let left2: Vec<usize> = clipped(f_l, radius, 1, last2).collect();
    let right1: Vec<usize> = clipped(a_r, radius, 1, last1).collect();
    let right2: Vec<usize> = clipped(f_r, radius, 1, last2).collect();

    let mut out = Improved::default();
    cmp.scan_pairs(x, &left1, y, &left2, counters, |a, b| {
        out.left_s1 = Some(out.left_s1.map_or(a, |m| m.min(a)));
        out.left_s2 = Some(out.left_s2.map_or(b, |m| m.min(b)));
    });
    cmp.scan_pairs(x, &right1, y, &right2, counters, |a, b| {
        out.right_s1 = Some(out.right_s1.map_or(a, |m| m.max(a)));
        out.right_s2 = Some(out.right_s2.map_or(b, |m| m.max(b)));
    });
    Ok(out)
}
