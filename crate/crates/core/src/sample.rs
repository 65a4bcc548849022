use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::set::ElemSet;

/// Seed for every sampled subset check unless the caller overrides it.
pub const DEFAULT_SEED: u64 = 0x5EED_B001;

/// How subset-quantified laws are checked: exhaustively for carriers of at
/// most `cap` elements, otherwise on `samples` random tuples drawn from a
/// fixed seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SubsetPolicy {
    pub cap: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for SubsetPolicy {
    fn default() -> Self {
        SubsetPolicy { cap: 12, samples: 2000, seed: DEFAULT_SEED }
    }
}

impl SubsetPolicy {
    pub fn with_cap(cap: usize) -> Self {
        SubsetPolicy { cap, ..Default::default() }
    }

    pub fn exhaustive(&self, n: usize) -> bool {
        n <= self.cap
    }

    pub fn sampler(&self, n: usize) -> SubsetSampler {
        SubsetSampler { rng: ChaCha8Rng::seed_from_u64(self.seed), full: ElemSet::full(n) }
    }
}

pub struct SubsetSampler {
    rng: ChaCha8Rng,
    full: ElemSet,
}

impl SubsetSampler {
    /// A uniformly random subset of the carrier.
    pub fn subset(&mut self) -> ElemSet {
        ElemSet::from_bits(self.rng.gen::<u64>()) & self.full
    }

    /// A uniformly random non-empty subset (by rejection).
    pub fn nonempty(&mut self) -> ElemSet {
        loop {
            let s = self.subset();
            if !s.is_empty() || self.full.is_empty() {
                return s;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sampling_is_reproducible() {
        let p = SubsetPolicy::default();
        let a: Vec<ElemSet> = {
            let mut s = p.sampler(20);
            (0..10).map(|_| s.nonempty()).collect()
        };
        let b: Vec<ElemSet> = {
            let mut s = p.sampler(20);
            (0..10).map(|_| s.nonempty()).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(|s| !s.is_empty() && s.is_subset(ElemSet::full(20))));
    }
}
