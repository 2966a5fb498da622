//! `motif`: generate planted-motif data, recover motifs, run experiments.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use motif_core::experiment::{append_tsv, REPORT_HEADER, SCALING_HEADER};
use motif_core::fasta::{read_fasta, write_boundaries, write_fasta, write_fasta_file, write_ground_truth};
use motif_core::genmodel::generate_dataset;
use motif_core::{
    brute_force_consensus, derive_and_validate, recover_motif, run_accuracy_experiment, run_scaling_benchmark,
    AlgorithmType, Alphabet, DerivedParams, Error, ExperimentConfig, FastaRecord, MutationModel, OracleKind,
    Placement, PlantConfig, RecoveryOutcome, RunConfig, ScalingConfig, Seeder,
};

#[derive(Parser)]
#[command(name = "motif", version, about = "Planted motif recovery")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// `key = value` parameter file.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Master seed; overrides `seed` from the config file.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Symbols in index order.
    #[arg(long, global = true, default_value = "ACGT")]
    alphabet: String,
}

#[derive(Subcommand)]
enum Command {
    /// Write planted sequences, the motif and the ground truth.
    Gen {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        motif_len: usize,
        /// Per-symbol mutation rate; defaults to 1/motif_len.
        #[arg(long)]
        alpha: Option<f64>,
        /// Mutate exactly this many motif positions instead of independently.
        #[arg(long)]
        psi: Option<usize>,
        /// Output directory.
        #[arg(long)]
        out: PathBuf,
    },
    /// Recover the motif from a FASTA file.
    Recover {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        algo: Option<Algo>,
        /// Number of sequence pairs used for boundary estimation; defaults to k/4.
        #[arg(long)]
        k1: Option<usize>,
        #[arg(long, default_value_t = 1)]
        restarts: usize,
        /// Output directory for consensus.fa and boundaries.tsv; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Accuracy and scaling experiments.
    Bench {
        #[command(subcommand)]
        kind: Bench,
    },
    /// Optimal consensus by brute force.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        motif_len: usize,
        /// FASTA file for the consensus; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum Bench {
    Accuracy {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 50)]
        trials: usize,
        #[arg(long, default_value_t = 600)]
        n: usize,
        #[arg(long, default_value_t = 20)]
        k: usize,
        #[arg(long, default_value_t = 15)]
        motif_len: usize,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long, value_enum)]
        algo: Option<Algo>,
        #[arg(long, default_value_t = 1)]
        restarts: usize,
        /// Record wall time per trial (makes the report machine-dependent).
        #[arg(long)]
        timing: bool,
        /// Report TSV, appended to.
        #[arg(long)]
        out: PathBuf,
    },
    Scaling {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', default_values_t = [4096usize, 8192, 16384, 32768, 65536])]
        ns: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2, 3])]
        seeds: Vec<u64>,
        #[arg(long, value_delimiter = ',', value_enum, default_values_t = [Algo::Sublinear, Algo::Deterministic])]
        algos: Vec<Algo>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Algo {
    Sublinear,
    Subquadratic,
    Deterministic,
}

impl From<Algo> for AlgorithmType {
    fn from(a: Algo) -> Self {
        match a {
            Algo::Sublinear => AlgorithmType::RandomizedSublinear,
            Algo::Subquadratic => AlgorithmType::RandomizedSubquadratic,
            Algo::Deterministic => AlgorithmType::DeterministicSuperquadratic,
        }
    }
}

/// Loaded config plus the alphabet it must agree with.
struct Setup {
    cfg: RunConfig,
    alphabet: Alphabet,
    seed: u64,
}

impl Setup {
    fn new(common: &Common) -> Result<Self, Error> {
        let cfg = match &common.config {
            Some(p) => RunConfig::load(p)?,
            None => RunConfig::default(),
        };
        let alphabet = Alphabet::new(common.alphabet.as_bytes())?;
        if let Some(t) = cfg.t {
            if t != alphabet.size() {
                return Err(Error::InvalidConfiguration(format!(
                    "config sets t = {t} but the alphabet '{}' has {} symbols",
                    common.alphabet,
                    alphabet.size()
                )));
            }
        }
        let seed = common.seed.or(cfg.seed).unwrap_or(0);
        Ok(Self { cfg, alphabet, seed })
    }

    fn x(&self) -> u32 {
        self.cfg.x.unwrap_or(motif_core::params::DEFAULT_X)
    }

    fn algo(&self, flag: Option<Algo>) -> Result<AlgorithmType, Error> {
        flag.map(AlgorithmType::from).or(self.cfg.algorithm_type).ok_or_else(|| {
            Error::InvalidConfiguration("no algorithm: pass --algo or set algorithm_type in the config".into())
        })
    }

    fn params(&self, n: usize) -> Result<DerivedParams, Error> {
        let p = derive_and_validate(self.alphabet.size(), self.x(), &self.cfg.overrides, n)?;
        if !p.in_guarantee_regime() {
            let names: Vec<&str> = p.violations().iter().map(|c| c.name()).collect();
            eprintln!("note: parameters outside the guarantee regime ({})", names.join(", "));
        }
        Ok(p)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, Error> {
    match command {
        Command::Gen { common, n, k, motif_len, alpha, psi, out } => {
            let s = Setup::new(&common)?;
            let alpha = alpha.or(s.cfg.overrides.alpha).unwrap_or(1.0 / motif_len as f64);
            let plant = PlantConfig {
                n,
                t: s.alphabet.size(),
                alpha,
                model: psi.map_or(MutationModel::Theta, |kappa| MutationModel::Psi { kappa }),
                placement: Placement::Uniform,
            };
            let data = generate_dataset(&Seeder::new(s.seed), k, motif_len, &plant)?;
            fs::create_dir_all(&out)?;
            let ids: Vec<String> = (1..=k).map(|i| format!("seq{i}")).collect();
            let records: Vec<FastaRecord> = ids
                .iter()
                .zip(&data.sequences)
                .map(|(id, p)| FastaRecord::new(id.clone(), p.seq.clone()))
                .collect();
            write_fasta_file(out.join("sequences.fa"), &records, &s.alphabet)?;
            write_fasta_file(out.join("motif.fa"), &[FastaRecord::new("motif", data.motif.clone())], &s.alphabet)?;
            write_ground_truth(io::BufWriter::new(fs::File::create(out.join("truth.tsv"))?), &ids, &data.sequences)?;
            println!("wrote {k} sequences of length {n} to {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Recover { common, input, algo, k1, restarts, out } => {
            let s = Setup::new(&common)?;
            let algo = s.algo(algo)?;
            let records = read_fasta(&input, &s.alphabet)?;
            recover(&s, algo, &records, k1, restarts, out.as_deref())
        }
        Command::Bench { kind } => bench(kind),
        Command::Oracle { common, input, motif_len, out } => {
            let s = Setup::new(&common)?;
            let records = read_fasta(&input, &s.alphabet)?;
            let z: Vec<_> = records.iter().map(|r| r.seq.clone()).collect();
            let r = brute_force_consensus(&z, motif_len, s.seed)?;
            let offsets: Vec<String> = r.offsets.iter().map(|o| o.to_string()).collect();
            let kind = match r.kind {
                OracleKind::Exact => "EXACT",
                OracleKind::Heuristic => "HEURISTIC",
            };
            eprintln!("{kind} cost={} offsets={}", r.cost, offsets.join(","));
            let rec = [FastaRecord::new("consensus", r.consensus)];
            match out {
                Some(p) => write_fasta_file(p, &rec, &s.alphabet)?,
                None => write_fasta(io::stdout().lock(), &rec, &s.alphabet)?,
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn recover(
    s: &Setup,
    algo: AlgorithmType,
    records: &[FastaRecord],
    k1: Option<usize>,
    restarts: usize,
    out: Option<&Path>,
) -> Result<ExitCode, Error> {
    let k = records.len();
    let k1 = k1.unwrap_or(k / 4);
    if k1 == 0 || 2 * k1 >= k {
        return Err(Error::InvalidInstance(format!(
            "{k} sequences cannot be split into {k1} pairs plus at least one more"
        )));
    }
    if restarts == 0 {
        return Err(Error::InvalidConfiguration("restarts must be at least 1".into()));
    }
    let seqs: Vec<_> = records.iter().map(|r| r.seq.clone()).collect();
    let n = seqs.iter().map(|q| q.len()).max().unwrap_or(0);
    let params = s.params(n)?;
    let (z1, z2) = seqs.split_at(2 * k1);

    let seeder = Seeder::new(s.seed);
    let mut best = None;
    let mut last_failure = None;
    for r in 0..restarts {
        let sub = if restarts == 1 {
            seeder
        } else {
            seeder.child(motif_core::rng::Phase::Restart, r as u64)
        };
        match recover_motif(z1, z2, algo, &params, &sub)? {
            RecoveryOutcome::Recovered(res) => {
                let cost = motif_core::experiment::consensus_cost(res.consensus.as_slice(), &seqs);
                if best.as_ref().is_none_or(|(c, _)| cost < *c) {
                    best = Some((cost, res));
                }
            }
            RecoveryOutcome::Failed { reason, .. } => last_failure = Some(reason),
        }
    }
    let Some((_, res)) = best else {
        let reason = last_failure.expect("at least one restart ran");
        eprintln!("recovery failed: {reason}");
        return Ok(ExitCode::from(1));
    };

    let consensus = [FastaRecord::new("consensus", res.consensus.clone())];
    let ids: Vec<String> = records[2 * k1..].iter().map(|r| r.id.clone()).collect();
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            write_fasta_file(dir.join("consensus.fa"), &consensus, &s.alphabet)?;
            write_boundaries(io::BufWriter::new(fs::File::create(dir.join("boundaries.tsv"))?), &ids, &res.regions)?;
        }
        None => {
            let mut stdout = io::stdout().lock();
            write_fasta(&mut stdout, &consensus, &s.alphabet)?;
            write_boundaries(&mut stdout, &ids, &res.regions)?;
        }
    }
    let c = res.counters;
    eprintln!(
        "recovered length {} (anchor {}, {} of {} regions): positions_sampled={} window_comparisons={} character_comparisons={}",
        res.consensus.len(),
        records[res.anchor].id,
        res.regions.iter().flatten().count(),
        res.regions.len(),
        c.positions_sampled,
        c.window_comparisons,
        c.character_comparisons
    );
    Ok(ExitCode::SUCCESS)
}

fn bench(kind: Bench) -> Result<ExitCode, Error> {
    match kind {
        Bench::Accuracy { common, trials, n, k, motif_len, alpha, algo, restarts, timing, out } => {
            let s = Setup::new(&common)?;
            let mut cfg = ExperimentConfig::new(trials, n, k, motif_len, s.algo(algo)?, s.seed);
            cfg.alpha = alpha.or(s.cfg.overrides.alpha);
            cfg.t = s.alphabet.size();
            cfg.x = s.x();
            cfg.overrides = s.cfg.overrides.clone();
            cfg.restarts = restarts;
            cfg.timing = timing;
            let report = run_accuracy_experiment(&cfg)?;
            append_tsv(&out, REPORT_HEADER, &report.tsv_rows())?;
            println!("{}", report.summary());
        }
        Bench::Scaling { common, ns, seeds, algos, out } => {
            let s = Setup::new(&common)?;
            let mut cfg = ScalingConfig::new(ns, seeds, algos.into_iter().map(AlgorithmType::from).collect());
            cfg.t = s.alphabet.size();
            cfg.x = s.x();
            cfg.alpha = s.cfg.overrides.alpha.unwrap_or(0.0);
            cfg.overrides = s.cfg.overrides.clone();
            let table = run_scaling_benchmark(&cfg)?;
            append_tsv(&out, SCALING_HEADER, &table.tsv_rows())?;
            io::stdout().write_all(table.slope_lines().as_bytes())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}
