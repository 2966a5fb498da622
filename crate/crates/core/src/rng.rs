//! Reproducible random sub-streams.
//!
//! Every random decision draws from a ChaCha stream keyed by the master seed
//! and a `(phase, index, iteration)` path, so reruns and variants with the
//! same seed see identical streams regardless of evaluation order.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// Phases that own disjoint families of sub-streams.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
#[repr(u64)]
pub enum Phase {
    Motif = 1,
    Sequence = 2,
    InitialSelection = 3,
    AnchorSelection = 4,
    TargetSelection = 5,
    Trial = 6,
    Restart = 7,
    Oracle = 8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seeder {
    master: u64,
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

impl Seeder {
    pub fn new(master: u64) -> Self {
        Self { master }
    }

    pub fn master(&self) -> u64 {
        self.master
    }

    pub fn derive(&self, phase: Phase, index: u64, iteration: u64) -> u64 {
        let mut h = splitmix64(self.master);
        h = splitmix64(h ^ phase as u64);
        h = splitmix64(h ^ index);
        splitmix64(h ^ iteration)
    }

    pub fn stream(&self, phase: Phase, index: u64, iteration: u64) -> StreamRng {
        StreamRng::seed_from_u64(self.derive(phase, index, iteration))
    }

    /// A child seeder for nested experiments (trials, restarts).
    pub fn child(&self, phase: Phase, index: u64) -> Seeder {
        Seeder::new(self.derive(phase, index, 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn streams_are_reproducible_and_distinct() {
        let s = Seeder::new(42);
        let a: u64 = s.stream(Phase::Sequence, 3, 0).gen();
        let b: u64 = s.stream(Phase::Sequence, 3, 0).gen();
        let c: u64 = s.stream(Phase::Sequence, 4, 0).gen();
        let d: u64 = s.stream(Phase::Motif, 3, 0).gen();
        assert_eq!(a, b);
        assert_ne!(a, c);
        assert_ne!(a, d);
    }
}
