//! Deterministic seed derivation.
//!
//! Every source of randomness in a run is a pure function of the master seed
//! plus a handful of integer coordinates (iteration, repeat, stream tag) so
//! that parallel execution, resumption, and re-runs reproduce results
//! bit-for-bit on any platform.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Stream tags keep independent random streams from colliding when they are
/// derived from the same (seed, iteration) pair.
pub mod stream {
    pub const INIT: u64 = 0x1;
    pub const LAMBDA: u64 = 0x2;
    pub const PROPOSE: u64 = 0x3;
    pub const GP_FIT: u64 = 0x4;
    pub const SPLIT: u64 = 0x5;
}

/// Finalizer from the splitmix64 generator.
pub fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    x = (x ^ (x >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    x ^ (x >> 31)
}

/// Combines any number of u64 parts into a single well-mixed seed.
pub fn combine(parts: &[u64]) -> u64 {
    let mut acc = 0x853C_49E6_748F_EA9Bu64;
    for &p in parts {
        acc = splitmix64(acc ^ splitmix64(p));
    }
    acc
}

/// Stable hash of a string, independent of the platform and std's hasher.
pub fn hash_str(s: &str) -> u64 {
    let mut acc = 0xCBF2_9CE4_8422_2325u64;
    for b in s.as_bytes() {
        acc ^= u64::from(*b);
        acc = acc.wrapping_mul(0x0000_0100_0000_01B3);
    }
    splitmix64(acc)
}

/// The crate's reproducible RNG (ChaCha8 keyed from a derived u64).
pub fn rng_from(parts: &[u64]) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(combine(parts))
}
