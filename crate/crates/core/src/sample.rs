//! Seeded random full finite monomial ideals for property corpora.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::ideal::{minimalize, MonomialIdeal};
use crate::lattice::ExponentVector;

/// Samples pure powers `x_i^{d_i}` with `d_i` uniform in `[1, max_exp]`, adds
/// up to `n` random generators strictly below the box, minimalizes, and
/// resamples until the ideal is full.
pub fn random_ideal<R: Rng + ?Sized>(rng: &mut R, n: usize, max_exp: i64) -> Result<MonomialIdeal> {
    if n == 0 {
        return Err(Error::ZeroDimension);
    }
    if max_exp < 2 {
        return Err(Error::InvalidArgument(format!(
            "max exponent must be at least 2 for a full ideal, got {max_exp}"
        )));
    }
    loop {
        let powers: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=max_exp)).collect();
        let mut gens: Vec<ExponentVector> = (0..n)
            .map(|i| ExponentVector::unit(n, i).shifted(i, powers[i] - 1))
            .collect();
        let extra = rng.gen_range(0..=n);
        for _ in 0..extra {
            gens.push(ExponentVector::new(
                powers.iter().map(|&d| rng.gen_range(0..d)).collect(),
            ));
        }
        let Ok(ideal) = minimalize(gens, n) else {
            continue; // drew the zero vector
        };
        if ideal.is_full() {
            return Ok(ideal);
        }
    }
}

/// `count` ideals from a ChaCha8 stream seeded with `seed`; the number of
/// variables of each is uniform in `dims`.
pub fn corpus(
    seed: u64,
    count: usize,
    dims: std::ops::RangeInclusive<usize>,
    max_exp: i64,
) -> Result<Vec<MonomialIdeal>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(dims.clone());
            random_ideal(&mut rng, n, max_exp)
        })
        .collect()
}
