//! Degree-by-degree freeness certificates.
//!
//! For each weight `n` this module row-reduces the star products
//! `t1 ⋆ t2` over all basis pairs, reads off a canonical complement `V(n)`
//! of the span (the non-pivot basis trees), checks that `dim V(n)` matches
//! the generator-counting series, and then certifies that `V(n)` together
//! with all pre-Lie products `<t1; t2>` spans the whole degree. The two
//! checks are the finite-degree content of the freeness theorems: the brace
//! algebra on planar trees is free as a NAP algebra and free as a pre-Lie
//! algebra, with the same graded generator space.
//!
//! Everything is exact; a report is only produced when every degree passes,
//! and any mismatch is returned as a structured error naming the degree.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::alphabet::DecorationAlphabet;
use crate::enumerate::TreeTables;
use crate::linalg::RowReducer;
use crate::lincomb::LinComb;
use crate::par::maybe_par_map;
use crate::products::{prelie_planar, star_planar};
use crate::series::{decoration_series, generator_hilbert, Series};
use crate::tree::PlanarTree;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FreenessError {
    #[error(
        "degree {degree}: complement of the star span has dimension {found}, \
         expected {expected} generators"
    )]
    GeneratorCountMismatch {
        degree: u64,
        found: usize,
        expected: usize,
    },
    #[error("degree {degree}: complement plus pre-Lie products span {rank} of {dim} dimensions")]
    RankDeficient {
        degree: u64,
        rank: usize,
        dim: usize,
    },
}

/// All planar basis trees of one weight, with index lookup.
pub struct DegreeBasis {
    degree: u64,
    trees: Vec<PlanarTree>,
    index: HashMap<PlanarTree, usize>,
}

impl DegreeBasis {
    pub fn new(tables: &TreeTables, degree: u64) -> Self {
        let trees = tables.planar(degree).to_vec();
        let index = trees
            .iter()
            .enumerate()
            .map(|(i, t)| (t.clone(), i))
            .collect();
        DegreeBasis {
            degree,
            trees,
            index,
        }
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.trees.len()
    }

    pub fn trees(&self) -> &[PlanarTree] {
        &self.trees
    }

    pub fn index_of(&self, t: &PlanarTree) -> Option<usize> {
        self.index.get(t).copied()
    }

    /// Coordinates of a combination supported in this degree.
    pub fn vector(&self, comb: &LinComb<PlanarTree>) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.trees.len()];
        for (t, c) in comb.terms() {
            let i = self.index[t];
            v[i] = c.clone();
        }
        v
    }
}

/// Span of one (weight, fertility) block of the gradation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FertilityBlock {
    pub fertility: usize,
    pub dim: usize,
    pub star_span: usize,
    pub complement: usize,
}

/// Outcome of reducing all star products of one weight.
#[derive(Clone, Debug)]
pub struct SpanResult {
    pub degree: u64,
    pub dim: usize,
    pub span_dim: usize,
    /// Basis indices the elimination pivoted on.
    pub pivots: Vec<usize>,
    /// Non-pivot basis indices, increasing: the canonically least trees.
    pub complement: Vec<usize>,
    pub blocks: Vec<FertilityBlock>,
}

/// Row-reduces `star_planar(t1, t2)` over every basis pair with weights
/// summing to `n` and selects the canonical complement.
pub fn star_span(n: u64, alphabet: &DecorationAlphabet) -> SpanResult {
    let tables = TreeTables::new(alphabet.clone(), n);
    star_span_with(&tables, n, false)
}

/// As [`star_span`], over precomputed tables; `parallel` fans the product
/// expansion out over threads (the elimination itself stays sequential and
/// insertion order is fixed, so results do not depend on scheduling).
pub fn star_span_with(tables: &TreeTables, n: u64, parallel: bool) -> SpanResult {
    let basis = DegreeBasis::new(tables, n);
    let pairs = weight_split_pairs(tables, n);
    let vectors = maybe_par_map(pairs, parallel, |(t1, t2)| {
        basis.vector(&star_planar(t1, t2))
    });
    let mut reducer = RowReducer::new(basis.dim());
    for v in &vectors {
        reducer.insert_rational(v);
    }
    let pivots: Vec<usize> = reducer.pivots().collect();
    let complement = reducer.non_pivots();

    let mut blocks: Vec<FertilityBlock> = Vec::new();
    let mut block_index: HashMap<usize, usize> = HashMap::new();
    for (i, t) in basis.trees().iter().enumerate() {
        let fert = t.root_fertility();
        let slot = *block_index.entry(fert).or_insert_with(|| {
            blocks.push(FertilityBlock {
                fertility: fert,
                dim: 0,
                star_span: 0,
                complement: 0,
            });
            blocks.len() - 1
        });
        blocks[slot].dim += 1;
        if pivots.binary_search(&i).is_ok() {
            blocks[slot].star_span += 1;
        } else {
            blocks[slot].complement += 1;
        }
    }
    blocks.sort_by_key(|b| b.fertility);

    SpanResult {
        degree: n,
        dim: basis.dim(),
        span_dim: reducer.rank(),
        pivots,
        complement,
        blocks,
    }
}

/// All ordered basis pairs whose weights sum to `n`.
fn weight_split_pairs(tables: &TreeTables, n: u64) -> Vec<(&PlanarTree, &PlanarTree)> {
    let mut pairs = Vec::new();
    for i in 1..n {
        for t1 in tables.planar(i) {
            for t2 in tables.planar(n - i) {
                pairs.push((t1, t2));
            }
        }
    }
    pairs
}

/// Per-degree record of the full verification, in the report's JSON shape.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub n: u64,
    pub dim: usize,
    pub star_span: usize,
    pub complement: usize,
    pub expected_generators: usize,
    pub prelie_full_rank: bool,
    pub complement_trees: Vec<String>,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct FreenessReport {
    pub degrees: Vec<DegreeReport>,
}

#[derive(Clone, Copy, Debug)]
pub struct FreenessOptions {
    pub max_degree: u64,
    /// Verify degrees on separate threads (needs the `parallel` feature).
    pub parallel: bool,
}

impl FreenessOptions {
    pub fn new(max_degree: u64) -> Self {
        FreenessOptions {
            max_degree,
            parallel: false,
        }
    }

    pub fn parallel(mut self, yes: bool) -> Self {
        self.parallel = yes;
        self
    }
}

fn expected_generator_counts(alphabet: &DecorationAlphabet, max_degree: u64) -> Series {
    let f_d = decoration_series(alphabet, max_degree as usize);
    generator_hilbert(&f_d).expect("alphabet series has no constant term")
}

fn verify_degree(
    tables: &TreeTables,
    expected: &Series,
    n: u64,
    check_prelie: bool,
) -> Result<DegreeReport, FreenessError> {
    let start = Instant::now();
    let span = star_span_with(tables, n, false);
    let expected_generators = usize::try_from(expected.coeff(n as usize).to_integer())
        .expect("generator counts are small nonnegative integers");
    if span.complement.len() != expected_generators {
        return Err(FreenessError::GeneratorCountMismatch {
            degree: n,
            found: span.complement.len(),
            expected: expected_generators,
        });
    }

    let basis = DegreeBasis::new(tables, n);
    let prelie_full_rank = if check_prelie {
        let mut reducer = RowReducer::new(basis.dim());
        for &i in &span.complement {
            let mut unit = vec![BigRational::zero(); basis.dim()];
            unit[i] = BigRational::from_integer(1.into());
            reducer.insert_rational(&unit);
        }
        for (t1, t2) in weight_split_pairs(tables, n) {
            reducer.insert_rational(&basis.vector(&prelie_planar(t1, t2)));
        }
        if reducer.rank() != basis.dim() {
            return Err(FreenessError::RankDeficient {
                degree: n,
                rank: reducer.rank(),
                dim: basis.dim(),
            });
        }
        true
    } else {
        false
    };

    Ok(DegreeReport {
        n,
        dim: span.dim,
        star_span: span.span_dim,
        complement: span.complement.len(),
        expected_generators,
        prelie_full_rank,
        complement_trees: span
            .complement
            .iter()
            .map(|&i| basis.trees()[i].serialize(tables.alphabet()))
            .collect(),
        elapsed: start.elapsed(),
    })
}

fn run_degrees(
    alphabet: &DecorationAlphabet,
    options: FreenessOptions,
    check_prelie: bool,
) -> Result<FreenessReport, FreenessError> {
    let tables = TreeTables::new(alphabet.clone(), options.max_degree);
    let expected = expected_generator_counts(alphabet, options.max_degree);
    let degrees: Vec<u64> = (1..=options.max_degree).collect();
    let results = maybe_par_map(degrees, options.parallel, |n| {
        verify_degree(&tables, &expected, n, check_prelie)
    });
    let mut reports = Vec::with_capacity(results.len());
    for r in results {
        reports.push(r?);
    }
    Ok(FreenessReport { degrees: reports })
}

/// Checks, for every degree up to the bound, that the complement of
/// `Br ⋆ Br` has exactly the dimension the generator series predicts: the
/// finite-degree witness that the brace algebra is NAP-free.
pub fn verify_nap_freeness(
    alphabet: &DecorationAlphabet,
    options: FreenessOptions,
) -> Result<FreenessReport, FreenessError> {
    run_degrees(alphabet, options, false)
}

/// Checks that the canonical complement plus all pre-Lie products span
/// every degree: the generation half of pre-Lie freeness. Includes the NAP
/// complement check as a prerequisite.
pub fn verify_prelie_generation(
    alphabet: &DecorationAlphabet,
    options: FreenessOptions,
) -> Result<FreenessReport, FreenessError> {
    run_degrees(alphabet, options, true)
}
