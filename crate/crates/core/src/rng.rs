//! Seeded randomness.
//!
//! Every randomized operation in this crate draws from ChaCha8 keyed by a
//! caller-provided 64-bit seed (via `ChaCha8Rng::seed_from_u64`). Derived
//! generators for independent sub-tasks (multi-start searches, per-step
//! seeds) use either ChaCha streams or the splitmix-style [`derive_seed`]
//! below, so results are reproducible across platforms and thread counts.

use rand_chacha::rand_core::SeedableRng;

pub use rand_chacha::rand_core::RngCore;
pub use rand_chacha::ChaCha8Rng;

/// A ChaCha8 generator keyed by `seed`, positioned on stream `stream`.
pub fn chacha(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Mixes a base seed with an index (splitmix64 finalizer over
/// `seed + (index+1) * 0x9e3779b97f4a7c15`).
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add((index.wrapping_add(1)).wrapping_mul(0x9e3779b97f4a7c15));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Uniform f64 in `[0, 1)` built from the top 53 bits of one `next_u64`.
pub fn unit_f64<R: RngCore>(rng: &mut R) -> f64 {
    const SCALE: f64 = 1.0 / (1u64 << 53) as f64;
    (rng.next_u64() >> 11) as f64 * SCALE
}

/// Uniform integer in `[0, n)` by rejection sampling (no modulo bias).
pub fn below<R: RngCore>(rng: &mut R, n: u64) -> u64 {
    assert!(n > 0, "below(rng, 0)");
    let zone = u64::MAX - u64::MAX % n;
    loop {
        let x = rng.next_u64();
        if x < zone {
            return x % n;
        }
    }
}
