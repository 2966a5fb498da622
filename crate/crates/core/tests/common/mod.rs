#![allow(dead_code)]

use motif_core::genmodel::generate_dataset;
use motif_core::{
    derive_and_validate, Alphabet, DerivedParams, MutationModel, ParamOverrides, PlantConfig,
    PlantedDataset, Placement, Seeder, SymbolString,
};

pub const MOTIF: &str = "TTTTTAACGATTAGCS";

pub const Z1: [&str; 2] = [
    "GTACCATGGATTATTAACGATTAGCSTAGAGGACCTA",
    "AATCCTTACTTTTAACGATTAGCSGTC",
];

pub const Z2: [&str; 5] = [
    "ATTCGATCCAGTTTTTAACGGTTAGCSCAATTACTTAG",
    "GCATTGCATTTTTTAACGATTACCSGTACTTAGCTAGATC",
    "TCAGGGCATCGAGACTTTTTAGCGATTAGCSCTAGAATCAGACCT",
    "GTACCTGGCATTGAACGTTTTTAACGATTAGCATGCAGATGGACCTTTA",
    "AATGGATCAGATTTTTAACGATTCGCSCTAGATTCAG",
];

/// Motif start of each `Z2` sequence.
pub const Z2_STARTS: [usize; 5] = [12, 10, 16, 18, 12];

pub fn fixture_alphabet() -> Alphabet {
    Alphabet::new(b"ACGST").unwrap()
}

pub fn encode_all(al: &Alphabet, seqs: &[&str]) -> Vec<SymbolString> {
    seqs.iter().map(|s| al.encode(s).unwrap()).collect()
}

/// Ledger for the worked fixture: a window of 10 tolerating three
/// mismatches, a two-symbol exact prefix and small slack.
pub fn fixture_params() -> DerivedParams {
    let ov = ParamOverrides {
        alpha: Some(0.0625),
        epsilon: Some(0.11),
        window_override: Some(10),
        v: Some(3),
        u1: Some(4),
        u2: Some(3),
        ..Default::default()
    };
    derive_and_validate(5, 10, &ov, 49).unwrap()
}

/// Desk ledger for zero-mutation runs: `beta < 1/w`, so every comparison is exact.
pub fn exact_params(n: usize, w: usize) -> DerivedParams {
    let ov = ParamOverrides {
        alpha: Some(0.0),
        epsilon: Some(0.01),
        window_override: Some(w),
        ..Default::default()
    };
    derive_and_validate(4, 10, &ov, n).unwrap()
}

pub fn planted(seed: u64, k: usize, n: usize, m: usize, alpha: f64) -> PlantedDataset {
    let cfg = PlantConfig {
        n,
        t: 4,
        alpha,
        model: MutationModel::Theta,
        placement: Placement::Uniform,
    };
    generate_dataset(&Seeder::new(seed), k, m, &cfg).unwrap()
}
