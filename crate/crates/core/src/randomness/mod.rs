//! Random simplicial complexes.
//!
//! A [`ProbabilitySystem`] assigns a probability `p_σ` to every simplex. The
//! measure on complexes over `{1, 2, ...}` gives the cylinder of complexes
//! whose restriction to `{1..n}` is `Y` the mass
//! `Π_{σ∈Y} p_σ · Π_{σ∈E(Y|Δ_n)} q_σ` with `q_σ = 1 - p_σ`.
//!
//! The sampler realizes that measure by including each simplex with
//! probability `p_σ` once all its boundary faces are in. Every simplex owns an
//! independent uniform draw from its own ChaCha8 stream, so membership of any
//! single simplex can be decided without generating the rest of the complex.

mod measure;
mod sample;
mod system;

pub use measure::{
    cylinder_measure, extension_probability, induced_measure, lemma21_bruteforce, lemma21_bruteforce_exact,
    lemma21_sum, lemma21_sum_exact, p_of_subcomplex, p_of_subcomplex_exact, BruteForce, CylinderSet,
    BRUTEFORCE_BOUND, CYLINDER_BOUND,
};
pub use sample::{sample_complex, sample_induced, sample_induced_view, select_vertices, RandomComplex};
pub use system::{ProbabilitySpec, ProbabilitySystem, TableEntry};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::vertex::Vertex;

const GOLDEN: u64 = 0x9e37_79b9_7f4a_7c15;

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d4_9bb1_3311_49eb);
    z ^ (z >> 31)
}

/// Stream index for a label sequence inside a domain (simplex coins, vertex selection, parameters).
pub(crate) fn stream_of<'a>(domain: u64, labels: impl IntoIterator<Item = &'a Vertex>) -> u64 {
    let mut h = splitmix(domain);
    for v in labels {
        match v.as_u64() {
            Some(small) => h = splitmix(h ^ small),
            None => {
                for digit in v.to_biguint().to_u64_digits() {
                    h = splitmix(h ^ digit);
                }
                h = splitmix(h ^ GOLDEN);
            }
        }
        // separates label boundaries
        h = splitmix(h.rotate_left(17));
    }
    h
}

/// The first uniform in `[0, 1)` of the given stream of the seeded generator.
pub(crate) fn uniform(seed: u64, stream: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng.random::<f64>()
}

pub(crate) const DOMAIN_COIN: u64 = 1;
pub(crate) const DOMAIN_SELECT: u64 = 2;
pub(crate) const DOMAIN_PARAMETER: u64 = 3;
