//! Accuracy trials and work-scaling sweeps over generated datasets.

use std::fmt::Write as _;
use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::genmodel::{generate_dataset, hamming, MutationModel, Placement, PlantConfig};
use crate::params::{derive_and_validate, AlgorithmType, DerivedParams, ParamOverrides, DEFAULT_X};
use crate::pipeline::{initial_boundaries, recover_motif, RecoveryOutcome, WorkCounters};
use crate::rng::{Phase, Seeder};
use crate::seq::SymbolString;

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub trials: usize,
    pub n: usize,
    pub k: usize,
    pub motif_len: usize,
    /// Mutation rate of the planted copies; `None` means `1 / motif_len`.
    pub alpha: Option<f64>,
    pub algo: AlgorithmType,
    pub seed: u64,
    pub t: usize,
    pub x: u32,
    pub model: MutationModel,
    /// Ledger overrides; the mutation rate is used when `alpha` is unset here.
    pub overrides: ParamOverrides,
    /// Independent recovery runs per trial; the consensus with the lowest
    /// consensus-pattern cost is kept.
    pub restarts: usize,
    /// Fill the wall-time column; off keeps reports byte-reproducible.
    pub timing: bool,
}

impl ExperimentConfig {
    pub fn new(trials: usize, n: usize, k: usize, motif_len: usize, algo: AlgorithmType, seed: u64) -> Self {
        Self {
            trials,
            n,
            k,
            motif_len,
            alpha: None,
            algo,
            seed,
            t: 4,
            x: DEFAULT_X,
            model: MutationModel::Theta,
            overrides: ParamOverrides::default(),
            restarts: 1,
            timing: false,
        }
    }

    pub fn mutation_rate(&self) -> f64 {
        self.alpha.unwrap_or(1.0 / self.motif_len as f64)
    }

    /// Number of `Z1` pairs; the remaining sequences form `Z2`.
    pub fn k1(&self) -> usize {
        self.k / 4
    }

    pub fn params(&self) -> Result<DerivedParams> {
        let mut ov = self.overrides.clone();
        ov.alpha = ov.alpha.or(Some(self.mutation_rate()));
        derive_and_validate(self.t, self.x, &ov, self.n)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidConfiguration(m));
        if self.trials == 0 || self.restarts == 0 {
            return bad("trials and restarts must be at least 1".into());
        }
        if self.n == 0 || self.motif_len == 0 || self.motif_len > self.n {
            return bad(format!("need 1 <= motif_len <= n, got {} and {}", self.motif_len, self.n));
        }
        if self.k1() == 0 || self.k <= 2 * self.k1() {
            return bad(format!("k = {} leaves Z1 or Z2 empty", self.k));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialRow {
    pub trial: usize,
    pub recovered: bool,
    pub exact_match: bool,
    pub mismatch_count: usize,
    pub consensus_len: usize,
    pub counters: WorkCounters,
    pub guarantee_regime: bool,
    pub wall_time_ms: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentReport {
    pub config: ExperimentConfig,
    pub rows: Vec<TrialRow>,
}

impl ExperimentReport {
    pub fn accuracy(&self) -> f64 {
        100.0 * self.rows.iter().filter(|r| r.exact_match).count() as f64 / self.rows.len() as f64
    }

    pub fn mean_mismatches(&self) -> f64 {
        self.rows.iter().map(|r| r.mismatch_count as f64).sum::<f64>() / self.rows.len() as f64
    }

    pub fn mean_counters(&self) -> [f64; 3] {
        let n = self.rows.len() as f64;
        let sum = |f: fn(&WorkCounters) -> u64| self.rows.iter().map(|r| f(&r.counters) as f64).sum::<f64>() / n;
        [
            sum(|c| c.positions_sampled),
            sum(|c| c.window_comparisons),
            sum(|c| c.character_comparisons),
        ]
    }

    pub fn summary(&self) -> String {
        let [p, w, c] = self.mean_counters();
        format!(
            "trials={} accuracy={:.1}% mean_mismatches={:.3} mean_positions_sampled={p:.1} \
             mean_window_comparisons={w:.1} mean_character_comparisons={c:.1}",
            self.rows.len(),
            self.accuracy(),
            self.mean_mismatches()
        )
    }

    pub fn tsv_rows(&self) -> String {
        let c = &self.config;
        let mut out = String::new();
        for r in &self.rows {
            let time = r.wall_time_ms.map_or("NA".to_string(), |t| format!("{t:.3}"));
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                c.seed,
                r.trial,
                c.algo.short_name(),
                c.n,
                c.k,
                c.motif_len,
                c.mutation_rate(),
                r.recovered,
                r.exact_match,
                r.mismatch_count,
                r.consensus_len,
                r.counters.positions_sampled,
                r.counters.window_comparisons,
                r.counters.character_comparisons,
                r.counters.votes_cast,
                r.guarantee_regime,
                time
            )
            .expect("writing to a String");
        }
        out
    }
}

pub const REPORT_HEADER: &str = "seed\ttrial\talgorithm\tn\tk\tmotif_len\talpha\trecovered\texact_match\t\
mismatch_count\tconsensus_len\tpositions_sampled\twindow_comparisons\tcharacter_comparisons\t\
votes_cast\tguarantee_regime\twall_time_ms";

/// Appends `rows` (newline-terminated TSV) to `path`, writing `header` first
/// when the file is new or empty. An existing file with another header is an error.
pub fn append_tsv(path: impl AsRef<Path>, header: &str, rows: &str) -> Result<()> {
    let path = path.as_ref();
    if path.exists() {
        let mut first = String::new();
        BufReader::new(std::fs::File::open(path)?).read_line(&mut first)?;
        if !first.is_empty() && first.trim_end_matches(['\n', '\r']) != header {
            return Err(Error::InvalidArgument(format!(
                "{} already holds a report with a different header",
                path.display()
            )));
        }
    }
    let mut f = OpenOptions::new().create(true).append(true).open(path)?;
    if f.metadata()?.len() == 0 {
        writeln!(f, "{header}")?;
    }
    f.write_all(rows.as_bytes())?;
    Ok(())
}

/// Positions where `got` and `truth` differ, aligned at the start; missing
/// positions of the shorter string count as mismatches.
pub fn mismatches(got: &[u8], truth: &[u8]) -> usize {
    let common = got.len().min(truth.len());
    hamming(&got[..common], &truth[..common]) + got.len().abs_diff(truth.len())
}

/// Total distance from `consensus` to its best window in each sequence.
pub fn consensus_cost(consensus: &[u8], sequences: &[SymbolString]) -> usize {
    let m = consensus.len();
    sequences
        .iter()
        .map(|s| {
            if s.len() < m {
                return m;
            }
            (1..=s.len() - m + 1)
                .map(|o| hamming(s.window(o, m), consensus))
                .min()
                .unwrap_or(m)
        })
        .sum()
}

/// One trial: generate, recover (possibly several times), score.
fn run_trial(cfg: &ExperimentConfig, params: &DerivedParams, trial: usize) -> Result<TrialRow> {
    let start = Instant::now();
    let trial_seeder = Seeder::new(cfg.seed).child(Phase::Trial, trial as u64);
    let plant = PlantConfig {
        n: cfg.n,
        t: cfg.t,
        alpha: cfg.mutation_rate(),
        model: cfg.model,
        placement: Placement::Uniform,
    };
    let data = generate_dataset(&trial_seeder, cfg.k, cfg.motif_len, &plant)?;
    let seqs = data.symbol_strings();
    let (z1, z2) = seqs.split_at(2 * cfg.k1());

    let mut counters = WorkCounters::default();
    let mut best: Option<(usize, SymbolString, bool)> = None;
    for r in 0..cfg.restarts {
        let seeder = trial_seeder.child(Phase::Restart, r as u64);
        let outcome = recover_motif(z1, z2, cfg.algo, params, &seeder)?;
        counters += *outcome.counters();
        if let RecoveryOutcome::Recovered(res) = outcome {
            let cost = if cfg.restarts > 1 {
                consensus_cost(res.consensus.as_slice(), &seqs)
            } else {
                0
            };
            if best.as_ref().is_none_or(|(c, _, _)| cost < *c) {
                best = Some((cost, res.consensus, res.guarantee_regime));
            }
        }
    }
    let truth = data.motif.as_slice();
    let (recovered, exact, mism, len, regime) = match &best {
        Some((_, g, regime)) => (true, g.as_slice() == truth, mismatches(g.as_slice(), truth), g.len(), *regime),
        None => (false, false, truth.len(), 0, params.in_guarantee_regime()),
    };
    Ok(TrialRow {
        trial,
        recovered,
        exact_match: exact,
        mismatch_count: mism,
        consensus_len: len,
        counters,
        guarantee_regime: regime,
        wall_time_ms: cfg.timing.then(|| start.elapsed().as_secs_f64() * 1e3),
    })
}

pub fn run_accuracy_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    cfg.validate()?;
    let params = cfg.params()?;
    let rows = (0..cfg.trials)
        .map(|i| run_trial(cfg, &params, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport {
        config: cfg.clone(),
        rows,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingConfig {
    pub ns: Vec<usize>,
    pub seeds: Vec<u64>,
    pub algos: Vec<AlgorithmType>,
    pub t: usize,
    pub x: u32,
    /// Mutation rate of the planted copies.
    pub alpha: f64,
    pub overrides: ParamOverrides,
}

impl ScalingConfig {
    pub fn new(ns: Vec<usize>, seeds: Vec<u64>, algos: Vec<AlgorithmType>) -> Self {
        Self {
            ns,
            seeds,
            algos,
            t: 4,
            x: DEFAULT_X,
            alpha: 0.0,
            overrides: ParamOverrides::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingRow {
    pub algo: AlgorithmType,
    pub n: usize,
    pub seed: u64,
    pub motif_len: usize,
    pub found: bool,
    pub counters: WorkCounters,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScalingTable {
    pub rows: Vec<ScalingRow>,
}

pub const SCALING_HEADER: &str =
    "algorithm\tn\tseed\tmotif_len\tfound\tpositions_sampled\twindow_comparisons\tpreprocessing";

/// Least-squares slope of `ln y` against `ln x`.
pub fn loglog_slope(points: &[(f64, f64)]) -> Option<f64> {
    if points.len() < 2 || points.iter().any(|&(x, y)| x <= 0.0 || y <= 0.0) {
        return None;
    }
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let n = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / n;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (sxx > 0.0).then(|| sxy / sxx)
}

impl ScalingTable {
    fn points(&self, algo: AlgorithmType, seed: Option<u64>, metric: fn(&WorkCounters) -> u64) -> Vec<(f64, f64)> {
        self.rows
            .iter()
            .filter(|r| r.algo == algo && seed.is_none_or(|s| s == r.seed))
            .map(|r| (r.n as f64, metric(&r.counters) as f64))
            .collect()
    }

    /// Slope of `positions_sampled + window_comparisons` over every seed.
    pub fn preprocessing_slope(&self, algo: AlgorithmType) -> Option<f64> {
        loglog_slope(&self.points(algo, None, WorkCounters::preprocessing))
    }

    pub fn window_comparison_slope(&self, algo: AlgorithmType) -> Option<f64> {
        loglog_slope(&self.points(algo, None, |c| c.window_comparisons))
    }

    pub fn preprocessing_slope_for_seed(&self, algo: AlgorithmType, seed: u64) -> Option<f64> {
        loglog_slope(&self.points(algo, Some(seed), WorkCounters::preprocessing))
    }

    pub fn tsv_rows(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            writeln!(
                out,
                "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.algo.short_name(),
                r.n,
                r.seed,
                r.motif_len,
                r.found,
                r.counters.positions_sampled,
                r.counters.window_comparisons,
                r.counters.preprocessing()
            )
            .expect("writing to a String");
        }
        out
    }

    /// `# slope` comment lines, one per algorithm.
    pub fn slope_lines(&self) -> String {
        let algos: Vec<AlgorithmType> = AlgorithmType::ALL
            .into_iter()
            .filter(|a| self.rows.iter().any(|r| r.algo == *a))
            .collect();
        let fmt = |s: Option<f64>| s.map_or("NA".to_string(), |s| format!("{s:.4}"));
        algos
            .iter()
            .map(|&a| {
                format!(
                    "# slope\t{}\tpreprocessing={}\twindow_comparisons={}\n",
                    a.short_name(),
                    fmt(self.preprocessing_slope(a)),
                    fmt(self.window_comparison_slope(a))
                )
            })
            .collect()
    }
}

/// Runs the pairwise boundary phase on one planted pair per `(n, seed)` with
/// motif length `ceil(n^(2/5))` and records its work counters.
pub fn run_scaling_benchmark(cfg: &ScalingConfig) -> Result<ScalingTable> {
    let mut rows = Vec::new();
    for &algo in &cfg.algos {
        for &n in &cfg.ns {
            let motif_len = (n as f64).powf(0.4).ceil() as usize;
            let mut ov = cfg.overrides.clone();
            ov.alpha = ov.alpha.or(Some(cfg.alpha));
            let params = derive_and_validate(cfg.t, cfg.x, &ov, n)?;
            for &seed in &cfg.seeds {
                let seeder = Seeder::new(seed).child(Phase::Trial, n as u64);
                let plant = PlantConfig {
                    n,
                    t: cfg.t,
                    alpha: cfg.alpha,
                    model: MutationModel::Theta,
                    placement: Placement::Uniform,
                };
                let data = generate_dataset(&seeder, 2, motif_len, &plant)?;
                let mut counters = WorkCounters::default();
                let found = initial_boundaries(
                    &data.sequences[0].seq,
                    &data.sequences[1].seq,
                    algo,
                    &params,
                    &seeder,
                    0,
                    &mut counters,
                )?
                .is_some();
                rows.push(ScalingRow {
                    algo,
                    n,
                    seed,
                    motif_len,
                    found,
                    counters,
                });
            }
        }
    }
    Ok(ScalingTable { rows })
}
