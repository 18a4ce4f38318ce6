//! Exhaustive enumeration of trees by weight.
//!
//! Lists are in canonical order. [`TreeTables`] precomputes every weight up
//! to a bound once, so repeated lookups (products over whole degrees, random
//! sampling) stay cheap.

use crate::alphabet::DecorationAlphabet;
use crate::tree::{PlanarTree, RootedTree};

/// Per-weight lists of all trees over a fixed alphabet, plus forest counts.
#[derive(Clone, Debug)]
pub struct TreeTables {
    alphabet: DecorationAlphabet,
    max_weight: u64,
    planar: Vec<Vec<PlanarTree>>,
    rooted: Vec<Vec<RootedTree>>,
    forest_counts: Vec<u128>,
}

impl TreeTables {
    /// Builds all planar and rooted trees of weight `1..=max_weight`.
    pub fn new(alphabet: DecorationAlphabet, max_weight: u64) -> Self {
        let top = max_weight as usize;
        let mut planar: Vec<Vec<PlanarTree>> = vec![Vec::new()];
        // Ordered forests by total weight, kept only while building.
        let mut forests: Vec<Vec<Vec<PlanarTree>>> = vec![vec![Vec::new()]];
        for w in 1..=top {
            let mut level = Vec::new();
            for d in alphabet.decorations() {
                let g = alphabet.grade(d) as usize;
                if g > w {
                    continue;
                }
                for forest in &forests[w - g] {
                    level.push(PlanarTree::from_parts(d, g as u64, forest.clone()));
                }
            }
            level.sort();
            debug_assert!(level.windows(2).all(|p| p[0] < p[1]));
            planar.push(level);
            // Forests of weight w split uniquely as first tree plus rest.
            let mut level_forests = Vec::new();
            for k in 1..=w {
                for t in &planar[k] {
                    for rest in &forests[w - k] {
                        let mut f = Vec::with_capacity(1 + rest.len());
                        f.push(t.clone());
                        f.extend(rest.iter().cloned());
                        level_forests.push(f);
                    }
                }
            }
            forests.push(level_forests);
        }

        let mut rooted: Vec<Vec<RootedTree>> = vec![Vec::new()];
        for w in 1..=top {
            let mut level = Vec::new();
            for d in alphabet.decorations() {
                let g = alphabet.grade(d) as usize;
                if g > w {
                    continue;
                }
                // Pool of candidate children, globally sorted: canonical
                // order sorts by weight first.
                let pool: Vec<&RootedTree> = rooted[1..=w - g].iter().flatten().collect();
                let mut children = Vec::new();
                multisets(&pool, 0, (w - g) as u64, &mut children, &mut |c| {
                    level.push(RootedTree::from_parts(d, g as u64, c.to_vec()));
                });
            }
            level.sort();
            debug_assert!(level.windows(2).all(|p| p[0] < p[1]));
            rooted.push(level);
        }

        let mut forest_counts = vec![1u128];
        for w in 1..=top {
            let count = (1..=w)
                .map(|k| planar[k].len() as u128 * forest_counts[w - k])
                .sum();
            forest_counts.push(count);
        }

        TreeTables {
            alphabet,
            max_weight,
            planar,
            rooted,
            forest_counts,
        }
    }

    pub fn alphabet(&self) -> &DecorationAlphabet {
        &self.alphabet
    }

    pub fn max_weight(&self) -> u64 {
        self.max_weight
    }

    /// All planar trees of weight `n`, canonically ordered. Panics above the
    /// precomputed bound.
    pub fn planar(&self, n: u64) -> &[PlanarTree] {
        &self.planar[n as usize]
    }

    /// All rooted trees of weight `n`, canonically ordered.
    pub fn rooted(&self, n: u64) -> &[RootedTree] {
        &self.rooted[n as usize]
    }

    pub fn planar_count(&self, n: u64) -> u128 {
        self.planar[n as usize].len() as u128
    }

    pub fn rooted_count(&self, n: u64) -> u128 {
        self.rooted[n as usize].len() as u128
    }

    /// Number of ordered planar forests of total weight `n`; 1 at weight 0
    /// for the empty forest.
    pub fn forest_count(&self, n: u64) -> u128 {
        self.forest_counts[n as usize]
    }
}

/// Emits every non-decreasing selection from `pool[start..]` with total
/// weight exactly `remaining`. The pool is sorted, so the scan stops at the
/// first tree too heavy to fit.
fn multisets<'p>(
    pool: &[&'p RootedTree],
    start: usize,
    remaining: u64,
    current: &mut Vec<&'p RootedTree>,
    emit: &mut impl FnMut(Vec<RootedTree>),
) {
    if remaining == 0 {
        emit(current.iter().map(|t| (*t).clone()).collect());
        return;
    }
    for i in start..pool.len() {
        let w = pool[i].weight();
        if w > remaining {
            break;
        }
        current.push(pool[i]);
        multisets(pool, i, remaining - w, current, emit);
        current.pop();
    }
}

/// All planar trees of weight exactly `n`, in canonical order.
pub fn enumerate_planar(alphabet: &DecorationAlphabet, n: u64) -> Vec<PlanarTree> {
    let mut tables = TreeTables::new(alphabet.clone(), n);
    tables.planar.swap_remove(n as usize)
}

/// All rooted trees of weight exactly `n`, in canonical order.
pub fn enumerate_rooted(alphabet: &DecorationAlphabet, n: u64) -> Vec<RootedTree> {
    let mut tables = TreeTables::new(alphabet.clone(), n);
    tables.rooted.swap_remove(n as usize)
}
