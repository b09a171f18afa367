//! Deterministic seed derivation and uniform sampling.
//!
//! Every stochastic operation in this crate is a pure function of a 64-bit
//! master seed. Per-trial seeds come from [`mix64`], a stateless SplitMix64
//! finalizer, so that ensembles can be evaluated in any order and on any
//! number of worker threads without changing a single output bit.

use rand_chacha::ChaCha12Rng;
use rand_core::{RngCore, SeedableRng};

/// Multiplier applied to the stream index before mixing (golden-ratio odd
/// constant, as in SplitMix64's stream increment).
pub const MIX_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;
/// First SplitMix64 finalizer multiplier.
pub const MIX_M1: u64 = 0xBF58_476D_1CE4_E5B9;
/// Second SplitMix64 finalizer multiplier.
pub const MIX_M2: u64 = 0x94D0_49BB_1331_11EB;

/// Name recorded in output metadata alongside the constants above.
pub const MIX_NAME: &str = "splitmix64";

/// Derive a child seed from `(master, index)`.
///
/// SplitMix64 finalizer over `master ^ (index * gamma)`. Stateless, so the
/// mapping `(master, index) -> seed` is identical regardless of evaluation
/// order or thread count.
#[inline]
pub fn mix64(master: u64, index: u64) -> u64 {
    let mut z = master ^ index.wrapping_mul(MIX_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(MIX_M1);
    z = (z ^ (z >> 27)).wrapping_mul(MIX_M2);
    z ^ (z >> 31)
}

/// Stream RNG used everywhere sampling needs more than one draw.
pub type StreamRng = ChaCha12Rng;

/// Construct the deterministic RNG for a derived seed.
pub fn rng_from_seed(seed: u64) -> StreamRng {
    StreamRng::seed_from_u64(seed)
}

/// Uniform draw in `[0, 1)` with 53 random bits.
///
/// Built directly on `next_u64` so the value depends only on the ChaCha
/// stream, not on distribution code in any external crate.
#[inline]
pub fn uniform01(rng: &mut impl RngCore) -> f64 {
    (rng.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Uniform draw in the open interval `(0, 1)`.
///
/// Zero is remapped to the smallest representable draw so downstream
/// inverse-CDF transforms never see an endpoint.
#[inline]
pub fn uniform01_open(rng: &mut impl RngCore) -> f64 {
    let u = uniform01(rng);
    if u == 0.0 {
        0.5 / (1u64 << 53) as f64
    } else {
        u
    }
}
