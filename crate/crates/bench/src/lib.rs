//! Seeded inputs shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use typeb::freeprob::{make_free_pair, FreePair};
use typeb::series::random_series_b;
use typeb::SeriesB;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Two random type-B series of the given order.
pub fn series_pair(order: usize, seed: u64) -> (SeriesB, SeriesB) {
    let mut r = rng(seed);
    (random_series_b(order, &mut r).expect("positive order"), random_series_b(order, &mut r).expect("positive order"))
}

/// Free marked pairs with random R-transforms of the given order.
pub fn free_pair(order: usize, seed: u64) -> FreePair {
    let (r1, r2) = series_pair(order, seed);
    make_free_pair(&r1, &r2, order).expect("positive order")
}
