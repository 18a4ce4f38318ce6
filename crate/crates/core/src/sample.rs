//! Seeded random trees and forests, uniform by exact counts.
//!
//! Sampling goes through precomputed [`TreeTables`]: a tree of a given
//! weight is a uniform index into the full enumeration, a forest of a given
//! weight picks its first-tree weight in proportion to exact forest counts
//! and recurses. Streams let callers derive independent deterministic
//! sequences from one seed, one per trial.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::enumerate::TreeTables;
use crate::tree::{Forest, PlanarTree, RootedTree};

pub struct TreeSampler<'t> {
    tables: &'t TreeTables,
    rng: ChaCha8Rng,
}

impl<'t> TreeSampler<'t> {
    pub fn new(tables: &'t TreeTables, seed: u64) -> Self {
        TreeSampler {
            tables,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Same seed, independent stream: trial `i` sees the same randomness no
    /// matter what other trials ran before it or on which thread.
    pub fn for_trial(tables: &'t TreeTables, seed: u64, trial: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial);
        TreeSampler { tables, rng }
    }

    pub fn tables(&self) -> &'t TreeTables {
        self.tables
    }

    /// Uniform planar tree of exact weight, if any exists.
    pub fn planar(&mut self, weight: u64) -> Option<PlanarTree> {
        let count = self.tables.planar_count(weight);
        (count > 0).then(|| {
            let i = self.rng.random_range(0..count) as usize;
            self.tables.planar(weight)[i].clone()
        })
    }

    /// Uniform rooted tree of exact weight, if any exists.
    pub fn rooted(&mut self, weight: u64) -> Option<RootedTree> {
        let count = self.tables.rooted_count(weight);
        (count > 0).then(|| {
            let i = self.rng.random_range(0..count) as usize;
            self.tables.rooted(weight)[i].clone()
        })
    }

    /// Uniform over all planar trees of weight `1..=max_weight`.
    pub fn planar_up_to(&mut self, max_weight: u64) -> Option<PlanarTree> {
        let total: u128 = (1..=max_weight).map(|w| self.tables.planar_count(w)).sum();
        if total == 0 {
            return None;
        }
        let mut r = self.rng.random_range(0..total);
        for w in 1..=max_weight {
            let c = self.tables.planar_count(w);
            if r < c {
                return self.planar(w);
            }
            r -= c;
        }
        unreachable!("count prefix sums cover the range")
    }

    /// Uniform over all rooted trees of weight `1..=max_weight`.
    pub fn rooted_up_to(&mut self, max_weight: u64) -> Option<RootedTree> {
        let total: u128 = (1..=max_weight).map(|w| self.tables.rooted_count(w)).sum();
        if total == 0 {
            return None;
        }
        let mut r = self.rng.random_range(0..total);
        for w in 1..=max_weight {
            let c = self.tables.rooted_count(w);
            if r < c {
                return self.rooted(w);
            }
            r -= c;
        }
        unreachable!("count prefix sums cover the range")
    }

    /// Uniform ordered forest of exact total weight; the empty forest at
    /// weight 0.
    pub fn forest(&mut self, weight: u64) -> Option<Forest> {
        if self.tables.forest_count(weight) == 0 {
            return None;
        }
        let mut trees = Vec::new();
        let mut remaining = weight;
        while remaining > 0 {
            // First-tree weight k with probability count(k)*forests(rest).
            let total = self.tables.forest_count(remaining);
            let mut r = self.rng.random_range(0..total);
            let mut picked = 0;
            for k in 1..=remaining {
                let ways = self.tables.planar_count(k) * self.tables.forest_count(remaining - k);
                if r < ways {
                    picked = k;
                    break;
                }
                r -= ways;
            }
            trees.push(self.planar(picked).expect("picked weight has trees"));
            remaining -= picked;
        }
        Some(Forest::new(trees))
    }

    /// Splits `total` into `slots` positive weights, each split drawn with
    /// probability proportional to the number of planar-tree tuples it
    /// carries, then samples each slot uniformly. Uniform over all tuples
    /// of the given total weight.
    pub fn planar_tuple(&mut self, slots: usize, total: u64) -> Option<Vec<PlanarTree>> {
        if slots == 0 {
            return (total == 0).then(Vec::new);
        }
        let splits = compositions(slots, total);
        let weights: Vec<u128> = splits
            .iter()
            .map(|s| s.iter().map(|&w| self.tables.planar_count(w)).product())
            .collect();
        let sum: u128 = weights.iter().sum();
        if sum == 0 {
            return None;
        }
        let mut r = self.rng.random_range(0..sum);
        for (split, &ways) in splits.iter().zip(&weights) {
            if r < ways {
                return split.iter().map(|&w| self.planar(w)).collect();
            }
            r -= ways;
        }
        unreachable!("composition weights cover the range")
    }

    /// Rooted-tree variant of [`TreeSampler::planar_tuple`].
    pub fn rooted_tuple(&mut self, slots: usize, total: u64) -> Option<Vec<RootedTree>> {
        if slots == 0 {
            return (total == 0).then(Vec::new);
        }
        let splits = compositions(slots, total);
        let weights: Vec<u128> = splits
            .iter()
            .map(|s| s.iter().map(|&w| self.tables.rooted_count(w)).product())
            .collect();
        let sum: u128 = weights.iter().sum();
        if sum == 0 {
            return None;
        }
        let mut r = self.rng.random_range(0..sum);
        for (split, &ways) in splits.iter().zip(&weights) {
            if r < ways {
                return split.iter().map(|&w| self.rooted(w)).collect();
            }
            r -= ways;
        }
        unreachable!("composition weights cover the range")
    }
}

/// All ways to write `total` as an ordered sum of `slots` positive parts.
pub(crate) fn compositions(slots: usize, total: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(slots);
    fn go(slots: usize, total: u64, current: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if slots == 1 {
            if total >= 1 {
                current.push(total);
                out.push(current.clone());
                current.pop();
            }
            return;
        }
        for first in 1..=total.saturating_sub(slots as u64 - 1) {
            current.push(first);
            go(slots - 1, total - first, current, out);
            current.pop();
        }
    }
    go(slots, total, &mut current, &mut out);
    out
}
