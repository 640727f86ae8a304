//! Seeded random rotations and subsets for the property suites:
//! a random permutation of the multiset {1,1,...,n,n} with independent fair
//! sign bits, then normalized. Reproducible for a fixed seed.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use petrial_core::rotation::{EdgeSubset, Letter, Sign, SignedRotation};

/// Default seed for every randomized suite; override with --seed.
pub const DEFAULT_SEED: u64 = 0x5eed;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Sampler {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// A uniform random normalized rotation on exactly `n` chords.
    pub fn rotation(&mut self, n: usize) -> SignedRotation {
        let mut labels: Vec<u32> = (1..=n as u32).flat_map(|l| [l, l]).collect();
        labels.shuffle(&mut self.rng);
        let word: Vec<Letter> = labels
            .into_iter()
            .map(|label| {
                let sign = if self.rng.gen_bool(0.5) {
                    Sign::Minus
                } else {
                    Sign::Plus
                };
                Letter::new(label, sign).expect("label >= 1")
            })
            .collect();
        SignedRotation::new(word)
            .expect("double occurrence by construction")
            .normalize()
    }

    /// A rotation with chord count drawn uniformly from `lo..=hi`.
    pub fn rotation_sized(&mut self, lo: usize, hi: usize) -> SignedRotation {
        let n = self.rng.gen_range(lo..=hi);
        self.rotation(n)
    }

    /// Each label of `r` joins the subset independently with probability 1/2.
    pub fn subset_of(&mut self, r: &SignedRotation) -> EdgeSubset {
        r.labels()
            .into_iter()
            .filter(|_| self.rng.gen_bool(0.5))
            .collect()
    }

    pub fn pick<'a, T>(&mut self, items: &'a [T]) -> &'a T {
        &items[self.rng.gen_range(0..items.len())]
    }

    pub fn flip(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }
}
