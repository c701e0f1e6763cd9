//! Shared fixtures for the benchmarks.

use lindeg_core::matroid::ValuatedMatroid;
use lindeg_core::realization::{random_ld_realization, ValuedMatrix};
use lindeg_core::relations::DegenerationType;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn uniform(r: usize, n: usize) -> ValuatedMatroid {
    ValuatedMatroid::uniform(r, n)
}

/// A deterministic random full-rank matrix over the Laurent field.
pub fn random_matrix(rows: usize, cols: usize, seed: u64) -> ValuedMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dt = DegenerationType::new(cols, vec![rows], vec![]).expect("valid shape");
    random_ld_realization(&dt, (-3, 3), &mut rng)
        .expect("random matrix")
        .remove(0)
}
