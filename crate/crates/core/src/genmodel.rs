//! Planted-motif sequence generation and the two distance primitives.

use rand::seq::index::sample;
use rand::Rng;

use crate::error::{Error, Result};
use crate::rng::{Phase, Seeder};
use crate::seq::SymbolString;

/// How the planted copy of the motif is corrupted.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum MutationModel {
    /// Each motif character mutates independently with probability `alpha`.
    #[default]
    Theta,
    /// Exactly `min(kappa, |G|)` distinct random motif positions mutate.
    Psi { kappa: usize },
}

/// Default constant for the bounded-mutation model.
pub const DEFAULT_KAPPA: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Placement {
    /// Motif start drawn uniformly from `[1, n - |G| + 1]`.
    #[default]
    Uniform,
    /// Motif starts at this 1-based position.
    Fixed(usize),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlantConfig {
    pub n: usize,
    pub t: usize,
    pub alpha: f64,
    pub model: MutationModel,
    pub placement: Placement,
}

/// A generated sequence with its hidden ground truth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlantedSequence {
    pub seq: SymbolString,
    /// 1-based inclusive left motif boundary.
    pub lb: usize,
    /// 1-based inclusive right motif boundary.
    pub rb: usize,
    /// Motif-relative positions (1-based, ascending) where the copy differs from the motif.
    pub mutated: Vec<usize>,
}

impl PlantedSequence {
    /// The planted copy `seq[lb..=rb]`.
    pub fn motif_region(&self) -> &[u8] {
        self.seq.substring(self.lb, self.rb)
    }
}

pub fn random_string<R: Rng + ?Sized>(rng: &mut R, len: usize, t: usize) -> SymbolString {
    SymbolString::new((0..len).map(|_| rng.gen_range(0..t) as u8).collect())
}

fn uniform_other<R: Rng + ?Sized>(rng: &mut R, t: usize, original: u8) -> u8 {
    let r = rng.gen_range(0..t - 1) as u8;
    if r >= original {
        r + 1
    } else {
        r
    }
}

/// Generates one planted sequence with uniform replacement symbols.
pub fn generate_planted<R: Rng + ?Sized>(
    rng: &mut R,
    motif: &SymbolString,
    cfg: &PlantConfig,
) -> Result<PlantedSequence> {
    let t = cfg.t;
    generate_planted_with(rng, motif, cfg, |rng, _, g| uniform_other(rng, t, g))
}

/// Like [`generate_planted`] but the caller chooses each replacement symbol.
///
/// `replace(rng, motif_position, original)` must return a symbol index below
/// `t` different from `original`.
pub fn generate_planted_with<R, F>(
    rng: &mut R,
    motif: &SymbolString,
    cfg: &PlantConfig,
    mut replace: F,
) -> Result<PlantedSequence>
where
    R: Rng + ?Sized,
    F: FnMut(&mut R, usize, u8) -> u8,
{
    let m = motif.len();
    let n = cfg.n;
    if cfg.t < 2 {
        return Err(Error::InvalidConfiguration(format!(
            "alphabet size must be at least 2, got {}",
            cfg.t
        )));
    }
    if m == 0 {
        return Err(Error::InvalidInstance("motif is empty".into()));
    }
    if m > n {
        return Err(Error::InvalidInstance(format!(
            "motif length {m} exceeds sequence length {n}"
        )));
    }
    if !(0.0..1.0).contains(&cfg.alpha) {
        return Err(Error::InvalidConfiguration(format!(
            "alpha must lie in [0, 1), got {}",
            cfg.alpha
        )));
    }
    motif.check_alphabet(cfg.t)?;

    let mut symbols = random_string(rng, n, cfg.t).into_inner();
    let lb = match cfg.placement {
        Placement::Uniform => rng.gen_range(1..=n - m + 1),
        Placement::Fixed(p) => {
            if p < 1 || p > n - m + 1 {
                return Err(Error::InvalidInstance(format!(
                    "fixed motif start {p} outside [1, {}]",
                    n - m + 1
                )));
            }
            p
        }
    };

    let mutated: Vec<usize> = match cfg.model {
        MutationModel::Theta => (1..=m).filter(|_| rng.gen_bool(cfg.alpha)).collect(),
        MutationModel::Psi { kappa } => {
            let mut picks: Vec<usize> = sample(rng, m, kappa.min(m))
                .into_iter()
                .map(|i| i + 1)
                .collect();
            picks.sort_unstable();
            picks
        }
    };

    symbols[lb - 1..lb - 1 + m].copy_from_slice(motif.as_slice());
    for &pos in &mutated {
        let original = motif.at(pos);
        let replacement = replace(rng, pos, original);
        if replacement == original || replacement as usize >= cfg.t {
            return Err(Error::InvalidArgument(format!(
                "replacement {replacement} for motif position {pos} must differ from {original} and be below {}",
                cfg.t
            )));
        }
        symbols[lb - 1 + pos - 1] = replacement;
    }

    Ok(PlantedSequence {
        seq: SymbolString::new(symbols),
        lb,
        rb: lb + m - 1,
        mutated,
    })
}

/// A motif plus `k` independently generated planted sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlantedDataset {
    pub motif: SymbolString,
    pub sequences: Vec<PlantedSequence>,
}

impl PlantedDataset {
    pub fn symbol_strings(&self) -> Vec<SymbolString> {
        self.sequences.iter().map(|p| p.seq.clone()).collect()
    }
}

/// Draws a uniform random motif and `k` sequences, each from its own sub-stream.
pub fn generate_dataset(
    seeder: &Seeder,
    k: usize,
    motif_len: usize,
    cfg: &PlantConfig,
) -> Result<PlantedDataset> {
    let motif = random_string(&mut seeder.stream(Phase::Motif, 0, 0), motif_len, cfg.t);
    generate_dataset_for(seeder, k, &motif, cfg)
}

/// Plants a given motif into `k` sequences.
pub fn generate_dataset_for(
    seeder: &Seeder,
    k: usize,
    motif: &SymbolString,
    cfg: &PlantConfig,
) -> Result<PlantedDataset> {
    let sequences = (0..k)
        .map(|i| generate_planted(&mut seeder.stream(Phase::Sequence, i as u64, 0), motif, cfg))
        .collect::<Result<Vec<_>>>()?;
    Ok(PlantedDataset {
        motif: motif.clone(),
        sequences,
    })
}

/// Fraction of positions where two equal-length strings differ.
pub fn rel_hamming(s1: &[u8], s2: &[u8]) -> Result<f64> {
    if s1.len() != s2.len() {
        return Err(Error::InvalidArgument(format!(
            "length mismatch: {} vs {}",
            s1.len(),
            s2.len()
        )));
    }
    if s1.is_empty() {
        return Err(Error::InvalidArgument("relative distance of empty strings".into()));
    }
    Ok(hamming(s1, s2) as f64 / s1.len() as f64)
}

/// Mismatch count over the common prefix of two strings.
pub fn hamming(s1: &[u8], s2: &[u8]) -> usize {
    s1.iter().zip(s2).filter(|(a, b)| a != b).count()
}

/// `min(|i1 - i2|, |j1 - j2|)` for intervals `[i1, j1]` and `[i2, j2]`.
pub fn shift_distance(i1: i64, j1: i64, i2: i64, j2: i64) -> Result<u64> {
    if i1 > j1 || i2 > j2 {
        return Err(Error::InvalidArgument(format!(
            "malformed intervals [{i1}, {j1}] and [{i2}, {j2}]"
        )));
    }
    Ok(i1.abs_diff(i2).min(j1.abs_diff(j2)))
}
