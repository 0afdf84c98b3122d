#![allow(dead_code)]

use pellmat::{DenseMatrix, GaussInt};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n×n` matrix with both components drawn uniformly from `-bound..=bound`.
pub fn random_matrix(rng: &mut impl Rng, n: usize, bound: i64) -> DenseMatrix {
    DenseMatrix::from_fn(n, n, |_, _| {
        GaussInt::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound))
    })
    .unwrap()
}
