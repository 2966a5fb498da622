//! Planted-motif generation and recovery.
//!
//! Sequences are generated under a planted model with recorded ground truth
//! ([`genmodel`]) and the motif is recovered by sampling, collision detection,
//! boundary refinement, extraction and column voting ([`pipeline`]). The
//! [`oracle`] module holds brute-force references used for testing and
//! [`experiment`] the accuracy and work-scaling harness.

pub mod config;
pub mod error;
pub mod experiment;
pub mod fasta;
pub mod genmodel;
pub mod matchkit;
pub mod oracle;
pub mod params;
pub mod pipeline;
pub mod rng;
pub mod seq;
pub mod tail;

pub use config::RunConfig;
pub use error::{Error, Result};
pub use experiment::{
    run_accuracy_experiment, run_scaling_benchmark, ExperimentConfig, ExperimentReport, ScalingConfig,
    ScalingTable,
};
pub use fasta::FastaRecord;
pub use genmodel::{MutationModel, Placement, PlantConfig, PlantedDataset, PlantedSequence};
pub use matchkit::{match_predicate, MatchKind};
pub use oracle::{brute_force_consensus, exhaustive_boundary_oracle, OracleKind, OracleResult};
pub use params::{derive_and_validate, omega_for, AlgorithmType, DerivedParams, ParamOverrides};
pub use pipeline::{
    recover_motif, FailureReason, RecoveryOutcome, RecoveryResult, Region, RoughBoundaries, WorkCounters,
};
pub use rng::Seeder;
pub use seq::{Alphabet, SymbolString};
