//! Fixed-length window comparison under a mismatch budget.
//!
//! When `bits(t) * w <= 64` a window packs into one `u64` and a comparison is
//! an xor, a fold and a popcount; otherwise symbols are compared one by one
//! with early exit.

use std::collections::HashMap;

use crate::matchkit::mismatch_budget;
use crate::pipeline::WorkCounters;

#[derive(Debug, Clone)]
pub(crate) struct WindowComparator {
    w: usize,
    budget: usize,
    bits: u32,
    packed: bool,
    low_mask: u64,
}

impl WindowComparator {
    pub(crate) fn new(t: usize, w: usize, bound: f64) -> Self {
        let bits = usize::BITS - (t.max(2) - 1).leading_zeros();
        let packed = bits as usize * w <= 64;
        let mut low_mask = 0u64;
        if packed {
            for k in 0..w {
                low_mask |= 1u64 << (k as u32 * bits);
            }
        }
        Self {
            w,
            budget: mismatch_budget(w, bound),
            bits,
            packed,
            low_mask,
        }
    }

    pub(crate) fn exact_only(&self) -> bool {
        self.budget == 0
    }

    /// Packed key of the window at 1-based `start`; exact content identity when packed.
    pub(crate) fn key(&self, s: &[u8], start: usize) -> u64 {
        let window = &s[start - 1..start - 1 + self.w];
        if self.packed {
            window
                .iter()
                .fold(0u64, |acc, &c| (acc << self.bits) | c as u64)
        } else {
            // polynomial fingerprint mod 2^61 - 1
            const P: u128 = (1 << 61) - 1;
            const B: u128 = 1_000_003;
            window
                .iter()
                .fold(0u128, |acc, &c| (acc * B + c as u128 + 1) % P) as u64
        }
    }

    #[inline]
    fn key_mismatches(&self, a: u64, b: u64) -> usize {
        let d = a ^ b;
        let mut folded = d;
        for s in 1..self.bits {
            folded |= d >> s;
        }
        (folded & self.low_mask).count_ones() as usize
    }

    /// Whether the windows at `a` in `s1` and `b` in `s2` are within budget.
    #[cfg(test)]
    pub(crate) fn matches(
        &self,
        s1: &[u8],
        a: usize,
        s2: &[u8],
        b: usize,
        counters: &mut WorkCounters,
    ) -> bool {
        counters.window_comparisons += 1;
        if self.packed {
            counters.character_comparisons += self.w as u64;
            return self.key_mismatches(self.key(s1, a), self.key(s2, b)) <= self.budget;
        }
        self.slice_matches(&s1[a - 1..a - 1 + self.w], &s2[b - 1..b - 1 + self.w], counters)
    }

    fn slice_matches(&self, x: &[u8], y: &[u8], counters: &mut WorkCounters) -> bool {
        let mut mismatches = 0;
        for (i, (p, q)) in x.iter().zip(y).enumerate() {
            if p != q {
                mismatches += 1;
                if mismatches > self.budget {
                    counters.character_comparisons += i as u64 + 1;
                    return false;
                }
            }
        }
        counters.character_comparisons += self.w as u64;
        true
    }

    /// All qualifying pairs `(a, b)` from `a in u1`, `b in u2`, visited by
    /// direct scan over the full product.
    pub(crate) fn scan_pairs(
        &self,
        s1: &[u8],
        u1: &[usize],
        s2: &[u8],
        u2: &[usize],
        counters: &mut WorkCounters,
        mut on_pair: impl FnMut(usize, usize),
    ) {
        if self.packed {
            let k1: Vec<u64> = u1.iter().map(|&a| self.key(s1, a)).collect();
            let k2: Vec<u64> = u2.iter().map(|&b| self.key(s2, b)).collect();
            let pairs = (u1.len() * u2.len()) as u64;
            counters.window_comparisons += pairs;
            counters.character_comparisons += pairs * self.w as u64;
            for (&a, &ka) in u1.iter().zip(&k1) {
                for (&b, &kb) in u2.iter().zip(&k2) {
                    if self.key_mismatches(ka, kb) <= self.budget {
                        on_pair(a, b);
                    }
                }
            }
        } else {
            for &a in u1 {
                for &b in u2 {
                    let x = &s1[a - 1..a - 1 + self.w];
                    let y = &s2[b - 1..b - 1 + self.w];
                    counters.window_comparisons += 1;
                    if self.slice_matches(x, y, counters) {
                        on_pair(a, b);
                    }
                }
            }
        }
    }

    /// Exact-content collisions by fingerprint bucketing. For every `a` in
    /// `u1` whose window content also occurs at some `b` in `u2`, calls
    /// `on_match(a, least such b, greatest such b)`.
    pub(crate) fn bucket_exact(
        &self,
        s1: &[u8],
        u1: &[usize],
        s2: &[u8],
        u2: &[usize],
        counters: &mut WorkCounters,
        mut on_match: impl FnMut(usize, usize, usize),
    ) {
        struct Class {
            rep: usize,
            min_b: usize,
            max_b: usize,
        }
        let mut buckets: HashMap<u64, Vec<Class>> = HashMap::with_capacity(u2.len());
        for &b in u2 {
            let classes = buckets.entry(self.key(s2, b)).or_default();
            let found = classes
                .iter_mut()
                .find(|c| self.same_content(s2, c.rep, s2, b, counters));
            match found {
                Some(c) => {
                    c.min_b = c.min_b.min(b);
                    c.max_b = c.max_b.max(b);
                }
                None => classes.push(Class {
                    rep: b,
                    min_b: b,
                    max_b: b,
                }),
            }
        }
        for &a in u1 {
            if let Some(classes) = buckets.get(&self.key(s1, a)) {
                for c in classes {
                    if self.same_content(s1, a, s2, c.rep, counters) {
                        on_match(a, c.min_b, c.max_b);
                        break;
                    }
                }
            }
        }
    }

    fn same_content(
        &self,
        s1: &[u8],
        a: usize,
        s2: &[u8],
        b: usize,
        counters: &mut WorkCounters,
    ) -> bool {
        counters.window_comparisons += 1;
        if self.packed {
            // equal packed keys already mean equal content
            counters.character_comparisons += self.w as u64;
            return true;
        }
        let x = &s1[a - 1..a - 1 + self.w];
        let y = &s2[b - 1..b - 1 + self.w];
        let eq = x == y;
        counters.character_comparisons += if eq {
            self.w as u64
        } else {
            x.iter().zip(y).take_while(|(p, q)| p == q).count() as u64 + 1
        };
        eq
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genmodel::hamming;

    #[test]
    fn packed_and_slice_paths_agree() {
        // t = 4, w = 20 packs; t = 5, w = 30 does not
        for (t, w) in [(4usize, 20usize), (5, 30), (2, 64), (3, 12)] {
            let s1: Vec<u8> = (0..200).map(|i| ((i * 31 + 7) % 97 % t) as u8).collect();
            let s2: Vec<u8> = (0..200).map(|i| ((i * 17 + 3) % 89 % t) as u8).collect();
            for bound in [0.0, 0.1, 0.25] {
                let cmp = WindowComparator::new(t, w, bound);
                let mut counters = WorkCounters::default();
                for a in (1..=200 - w + 1).step_by(7) {
                    for b in (1..=200 - w + 1).step_by(5) {
                        let d = hamming(&s1[a - 1..a - 1 + w], &s2[b - 1..b - 1 + w]);
                        let expected = d as f64 / w as f64 <= bound;
                        assert_eq!(cmp.matches(&s1, a, &s2, b, &mut counters), expected);
                    }
                }
            }
        }
    }
}
