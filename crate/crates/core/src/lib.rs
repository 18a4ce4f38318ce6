//! Exact computer algebra on decorated rooted trees.
//!
//! Trees come in two flavours: [`PlanarTree`], where children are ordered,
//! and [`RootedTree`], where they form a canonically sorted multiset. Both
//! are decorated from a graded [`DecorationAlphabet`] and graded by weight,
//! the total grade of the decorations. On these bases the crate builds
//! formal linear combinations with exact rational coefficients and the
//! products that structure them:
//!
//! * the pre-Lie grafting product, on both flavours;
//! * the brace product on planar trees, by interval splitting;
//! * the permutative (NAP) star, grafting on the root;
//! * the shuffle product on forests.
//!
//! [`series`] tracks the matching dimension counts as truncated integer
//! power series, [`freeness`] turns the comparison into exact rank
//! computations degree by degree, and [`axioms`] stress-tests the defining
//! identities on enumerated and randomly sampled trees. The headline
//! computation, [`verify_nap_freeness`] plus [`verify_prelie_generation`],
//! exhibits a canonical generating set for the planar trees under the
//! pre-Lie product and checks its size against the predicted series.
//!
//! All arithmetic is exact: rationals over arbitrary-precision integers,
//! no floating point anywhere. With the `parallel` feature (on by default)
//! the rank and verification loops can fan out over threads without
//! changing any result.

pub mod alphabet;
pub mod axioms;
pub mod enumerate;
pub mod freeness;
mod linalg;
pub mod lincomb;
pub mod par;
pub mod parse;
pub mod products;
pub mod sample;
pub mod series;
pub mod tree;

pub use alphabet::{AlphabetError, Decoration, DecorationAlphabet};
pub use axioms::{
    check_brace, check_e1, check_nap, check_prelie, check_shuffle, Counterexample, SuiteOptions,
    SuiteReport,
};
pub use enumerate::{enumerate_planar, enumerate_rooted, TreeTables};
pub use freeness::{
    star_span, star_span_with, verify_nap_freeness, verify_prelie_generation, DegreeBasis,
    DegreeReport, FertilityBlock, FreenessError, FreenessOptions, FreenessReport, SpanResult,
};
pub use lincomb::{bilinear_extend, flatten, LinComb};
pub use par::parallel_enabled;
pub use parse::{parse_forest, parse_planar, parse_rooted, ParseError};
pub use products::{
    brace, brace_comb, prelie_planar, prelie_planar_comb, prelie_rooted, prelie_rooted_comb,
    shuffle, star_planar, star_planar_comb, star_rooted, star_rooted_comb,
};
pub use sample::TreeSampler;
pub use series::{
    brace_hilbert, decoration_series, euler_product, generator_hilbert, inv_euler, prelie_hilbert,
    w_sequence, Series, SeriesError,
};
pub use tree::{b_planar, b_rooted, canonicalize, Forest, PlanarTree, RootedTree};
