//! Brute-force references: optimal consensus by offset enumeration and an
//! all-pairs collision scan.

use rand::Rng;

use crate::error::{Error, Result};
use crate::params::DerivedParams;
use crate::pipeline::Anchors;
use crate::rng::{Phase, Seeder};
use crate::seq::SymbolString;

/// Largest offset space enumerated exhaustively.
pub const EXHAUSTIVE_LIMIT: u128 = 10_000_000;
/// Most sequences the coordinate-descent fallback accepts.
pub const HEURISTIC_MAX_SEQUENCES: usize = 8;
pub const HEURISTIC_RESTARTS: u64 = 50;
/// Largest `|S1| * |S2|` the boundary oracle scans.
pub const PAIR_LIMIT: u128 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleKind {
    /// Proven optimal by enumeration.
    Exact,
    /// Best of several coordinate-descent runs; not a proof of optimality.
    Heuristic,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub consensus: SymbolString,
    /// 1-based window start per sequence.
    pub offsets: Vec<usize>,
    /// Total mismatches between the chosen windows and the consensus.
    pub cost: usize,
    pub kind: OracleKind,
}

/// Column counts of the windows chosen so far.
struct Columns {
    m: usize,
    t: usize,
    counts: Vec<u32>,
}

impl Columns {
    fn new(m: usize, t: usize) -> Self {
        Self {
            m,
            t,
            counts: vec![0; m * t],
        }
    }

    fn add(&mut self, window: &[u8]) {
        for (j, &c) in window.iter().enumerate() {
            self.counts[j * self.t + c as usize] += 1;
        }
    }

    fn remove(&mut self, window: &[u8]) {
        for (j, &c) in window.iter().enumerate() {
            self.counts[j * self.t + c as usize] -= 1;
        }
    }

    /// Cost of the plurality consensus over `depth` windows.
    fn cost(&self, depth: usize) -> usize {
        (0..self.m)
            .map(|j| depth - *self.counts[j * self.t..(j + 1) * self.t].iter().max().unwrap() as usize)
            .sum()
    }
}

fn vote(windows: &[&[u8]], m: usize) -> Vec<u8> {
    let mut counts = [0usize; 256];
    (0..m)
        .map(|j| {
            counts.fill(0);
            for w in windows {
                counts[w[j] as usize] += 1;
            }
            (0..256).rev().max_by_key(|&c| counts[c]).unwrap() as u8
        })
        .collect()
}

fn cost_of(z: &[SymbolString], m: usize, offsets: &[usize], consensus: &[u8]) -> usize {
    z.iter()
        .zip(offsets)
        .map(|(s, &o)| {
            s.window(o, m)
                .iter()
                .zip(consensus)
                .filter(|(a, b)| a != b)
                .count()
        })
        .sum()
}

fn finish(z: &[SymbolString], m: usize, offsets: Vec<usize>, kind: OracleKind) -> OracleResult {
    let windows: Vec<&[u8]> = z.iter().zip(&offsets).map(|(s, &o)| s.window(o, m)).collect();
    let consensus = vote(&windows, m);
    let cost = cost_of(z, m, &offsets, &consensus);
    OracleResult {
        consensus: SymbolString::new(consensus),
        offsets,
        cost,
        kind,
    }
}

/// Consensus of length `m` minimizing the total Hamming distance to one
/// window per sequence.
///
/// Enumerates every offset vector when there are at most
/// [`EXHAUSTIVE_LIMIT`] of them, returning the lexicographically smallest
/// optimal vector. Otherwise runs coordinate descent from
/// [`HEURISTIC_RESTARTS`] random starts (at most
/// [`HEURISTIC_MAX_SEQUENCES`] sequences) and labels the result heuristic.
pub fn brute_force_consensus(z: &[SymbolString], m: usize, seed: u64) -> Result<OracleResult> {
    if z.is_empty() {
        return Err(Error::InvalidInstance("no sequences".into()));
    }
    if m == 0 {
        return Err(Error::InvalidInstance("motif length must be positive".into()));
    }
    if let Some((i, s)) = z.iter().enumerate().find(|(_, s)| s.len() < m) {
        return Err(Error::InvalidInstance(format!(
            "sequence {} has length {} < {m}",
            i + 1,
            s.len()
        )));
    }
    let t = z.iter().flat_map(|s| s.as_slice()).max().map_or(1, |&c| c as usize + 1);
    let space = z
        .iter()
        .map(|s| (s.len() - m + 1) as u128)
        .try_fold(1u128, |acc, x| acc.checked_mul(x))
        .unwrap_or(u128::MAX);

    let heuristic = || coordinate_descent(z, m, t, &Seeder::new(seed));
    if space <= EXHAUSTIVE_LIMIT {
        let seed_bound = if z.len() > 2 { heuristic().cost } else { usize::MAX };
        let offsets = exhaustive(z, m, t, seed_bound);
        return Ok(finish(z, m, offsets, OracleKind::Exact));
    }
    if z.len() > HEURISTIC_MAX_SEQUENCES {
        return Err(Error::OracleRefusal(format!(
            "{} sequences with an offset space of {space} is beyond the oracle",
            z.len()
        )));
    }
    Ok(heuristic())
}

/// Depth-first enumeration in lexicographic order with branch and bound.
fn exhaustive(z: &[SymbolString], m: usize, t: usize, bound: usize) -> Vec<usize> {
    struct Search<'a> {
        z: &'a [SymbolString],
        m: usize,
        cols: Columns,
        current: Vec<usize>,
        best: Option<(usize, Vec<usize>)>,
        bound: usize,
    }

    impl Search<'_> {
        fn prune(&self, partial: usize) -> bool {
            match &self.best {
                Some((b, _)) => partial >= *b,
                None => partial > self.bound,
            }
        }

        fn go(&mut self, depth: usize) {
            if depth == self.z.len() {
                let cost = self.cols.cost(depth);
                if self.best.as_ref().is_none_or(|(b, _)| cost < *b) {
                    self.best = Some((cost, self.current.clone()));
                }
                return;
            }
            let s = &self.z[depth];
            for o in 1..=s.len() - self.m + 1 {
                let w = s.window(o, self.m);
                self.cols.add(w);
                if !self.prune(self.cols.cost(depth + 1)) {
                    self.current.push(o);
                    self.go(depth + 1);
                    self.current.pop();
                }
                self.cols.remove(w);
            }
        }
    }

    let mut search = Search {
        z,
        m,
        cols: Columns::new(m, t),
        current: Vec::with_capacity(z.len()),
        best: None,
        bound,
    };
    search.go(0);
    search.best.expect("the bound is attained by some offset vector").1
}

fn coordinate_descent(z: &[SymbolString], m: usize, t: usize, seeder: &Seeder) -> OracleResult {
    let mut best: Option<(usize, Vec<usize>)> = None;
    for restart in 0..HEURISTIC_RESTARTS {
        let mut rng = seeder.stream(Phase::Oracle, restart, 0);
        let mut offsets: Vec<usize> = z.iter().map(|s| rng.gen_range(1..=s.len() - m + 1)).collect();
        let mut cols = Columns::new(m, t);
        for (s, &o) in z.iter().zip(&offsets) {
            cols.add(s.window(o, m));
        }
        let mut cost = cols.cost(z.len());
        loop {
            let mut improved = false;
            for (i, s) in z.iter().enumerate() {
                cols.remove(s.window(offsets[i], m));
                let mut pick = (cost, offsets[i]);
                for o in 1..=s.len() - m + 1 {
                    cols.add(s.window(o, m));
                    let c = cols.cost(z.len());
                    if c < pick.0 {
                        pick = (c, o);
                    }
                    cols.remove(s.window(o, m));
                }
                cols.add(s.window(pick.1, m));
                if pick.1 != offsets[i] {
                    offsets[i] = pick.1;
                    cost = pick.0;
                    improved = true;
                }
            }
            if !improved {
                break;
            }
        }
        let better = match &best {
            None => true,
            Some((b, o)) => cost < *b || cost == *b && offsets < *o,
        };
        if better {
            best = Some((cost, offsets));
        }
    }
    let (_, offsets) = best.expect("at least one restart");
    finish(z, m, offsets, OracleKind::Heuristic)
}

/// All-pairs reference for collision detection with full position sets.
pub fn exhaustive_boundary_oracle(
    s1: &SymbolString,
    s2: &SymbolString,
    omega: f64,
    params: &DerivedParams,
) -> Result<Anchors> {
    let w = params.window();
    if (s1.len() as u128) * (s2.len() as u128) > PAIR_LIMIT {
        return Err(Error::OracleRefusal(format!(
            "{} x {} window pairs exceed the oracle limit",
            s1.len(),
            s2.len()
        )));
    }
    let mut out = Anchors::default();
    if s1.len() < w || s2.len() < w {
        return Ok(out);
    }
    for a in 1..=s1.len() - w + 1 {
        for b in 1..=s2.len() - w + 1 {
            let d = s1
                .window(a, w)
                .iter()
                .zip(s2.window(b, w))
                .filter(|(x, y)| x != y)
                .count();
            if d as f64 / w as f64 <= omega {
                out.first_s1 = Some(out.first_s1.map_or(a, |x| x.min(a)));
                out.last_s1 = Some(out.last_s1.map_or(a, |x| x.max(a)));
                out.first_s2 = Some(out.first_s2.map_or(b, |x| x.min(b)));
                out.last_s2 = Some(out.last_s2.map_or(b, |x| x.max(b)));
            }
        }
    }
    Ok(out)
}
