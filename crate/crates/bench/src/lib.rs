//! Workload generators shared by the benchmarks.

use platknot_core::PlatPresentation;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random plats on `strands` strands with words of length `len`.
pub fn random_plats(seed: u64, count: usize, strands: usize, len: usize) -> Vec<PlatPresentation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let letters = (0..len)
                .map(|_| {
                    let g = rng.gen_range(1..strands as i32);
                    if rng.gen_bool(0.5) {
                        g
                    } else {
                        -g
                    }
                })
                .collect();
            PlatPresentation::from_letters(strands, letters).expect("valid letters")
        })
        .collect()
}
