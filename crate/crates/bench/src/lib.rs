//! Shared instances for the criterion benches.

use motif_core::genmodel::generate_dataset;
use motif_core::{derive_and_validate, DerivedParams, ParamOverrides, PlantConfig, Seeder, SymbolString};

pub struct Instance {
    pub z1: Vec<SymbolString>,
    pub z2: Vec<SymbolString>,
    pub params: DerivedParams,
}

/// `k` planted sequences of length `n` over DNA, split `k/4` pairs into `Z1`.
pub fn planted_instance(seed: u64, n: usize, k: usize, motif_len: usize, alpha: f64, window: usize) -> Instance {
    let plant = PlantConfig {
        n,
        t: 4,
        alpha,
        model: Default::default(),
        placement: Default::default(),
    };
    let data = generate_dataset(&Seeder::new(seed), k, motif_len, &plant).expect("valid instance");
    let mut z1 = data.symbol_strings();
    let z2 = z1.split_off(2 * (k / 4));
    let overrides = ParamOverrides {
        epsilon: Some(0.01),
        alpha: Some(alpha),
        window_override: Some(window),
        ..Default::default()
    };
    let params = derive_and_validate(4, 10, &overrides, n).expect("valid parameters");
    Instance { z1, z2, params }
}
