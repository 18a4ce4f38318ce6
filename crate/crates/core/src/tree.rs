//! Decorated rooted trees, planar and non-planar.
//!
//! [`PlanarTree`] keeps the left-to-right order of children; two trees that
//! differ by a sibling permutation are distinct. [`RootedTree`] identifies
//! them: children form a multiset, stored sorted under the canonical order,
//! recursively. Both carry a cached weight, the sum of the grades of their
//! vertices.
//!
//! The canonical total order compares weight first, then the root decoration
//! in alphabet order, then the child lists lexicographically. It drives the
//! sorted-children normal form, term order in linear combinations, and the
//! listing order of enumerations.

use std::cmp::Ordering;

use crate::alphabet::{AlphabetError, Decoration, DecorationAlphabet};

/// Planar decorated rooted tree: ordered children.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PlanarTree {
    decoration: Decoration,
    weight: u64,
    children: Vec<PlanarTree>,
}

/// Non-planar decorated rooted tree in canonical form: children sorted under
/// the canonical order, recursively.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RootedTree {
    decoration: Decoration,
    weight: u64,
    children: Vec<RootedTree>,
}

/// Ordered sequence of planar trees, possibly empty. The weight of a forest
/// is the sum of the weights of its trees; the empty forest has weight 0.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Forest(Vec<PlanarTree>);

macro_rules! canonical_ord {
    ($ty:ty) => {
        impl Ord for $ty {
            fn cmp(&self, other: &Self) -> Ordering {
                self.weight
                    .cmp(&other.weight)
                    .then_with(|| self.decoration.cmp(&other.decoration))
                    .then_with(|| self.children.cmp(&other.children))
            }
        }

        impl PartialOrd for $ty {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
    };
}

canonical_ord!(PlanarTree);
canonical_ord!(RootedTree);

/// Grafts the trees of `forest`, in order, onto a fresh root decorated `d`.
pub fn b_planar(
    alphabet: &DecorationAlphabet,
    d: Decoration,
    forest: Forest,
) -> Result<PlanarTree, AlphabetError> {
    alphabet.check(d)?;
    Ok(PlanarTree::from_parts(d, alphabet.grade(d), forest.0))
}

/// Grafts a multiset of trees onto a fresh root decorated `d`. Input order is
/// irrelevant; children end up sorted.
pub fn b_rooted(
    alphabet: &DecorationAlphabet,
    d: Decoration,
    children: Vec<RootedTree>,
) -> Result<RootedTree, AlphabetError> {
    alphabet.check(d)?;
    Ok(RootedTree::from_parts(d, alphabet.grade(d), children))
}

/// Forgets the planar embedding: sorts children recursively.
pub fn canonicalize(t: &PlanarTree) -> RootedTree {
    let children = t.children.iter().map(canonicalize).collect();
    RootedTree::from_parts(t.decoration, t.root_grade(), children)
}

impl PlanarTree {
    pub fn leaf(alphabet: &DecorationAlphabet, d: Decoration) -> Result<Self, AlphabetError> {
        b_planar(alphabet, d, Forest::empty())
    }

    /// Root grade is trusted, not looked up; callers recombine vertices that
    /// were validated against an alphabet on construction.
    pub(crate) fn from_parts(
        decoration: Decoration,
        root_grade: u64,
        children: Vec<PlanarTree>,
    ) -> Self {
        let weight = root_grade + children.iter().map(|c| c.weight).sum::<u64>();
        PlanarTree {
            decoration,
            weight,
            children,
        }
    }

    pub fn decoration(&self) -> Decoration {
        self.decoration
    }

    /// Sum of vertex grades; the vertex count when all grades are 1.
    pub fn weight(&self) -> u64 {
        self.weight
    }

    pub fn children(&self) -> &[PlanarTree] {
        &self.children
    }

    /// Number of children of the root.
    pub fn root_fertility(&self) -> usize {
        self.children.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub(crate) fn root_grade(&self) -> u64 {
        self.weight - self.children.iter().map(|c| c.weight).sum::<u64>()
    }

    pub fn serialize(&self, alphabet: &DecorationAlphabet) -> String {
        let mut out = String::new();
        self.write_text(alphabet, &mut out);
        out
    }

    fn write_text(&self, alphabet: &DecorationAlphabet, out: &mut String) {
        out.push_str(alphabet.symbol(self.decoration));
        if !self.children.is_empty() {
            out.push('[');
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                c.write_text(alphabet, out);
            }
            out.push(']');
        }
    }
}

impl RootedTree {
    pub fn leaf(alphabet: &DecorationAlphabet, d: Decoration) -> Result<Self, AlphabetError> {
        b_rooted(alphabet, d, Vec::new())
    }

    pub(crate) fn from_parts(
        decoration: Decoration,
        root_grade: u64,
        mut children: Vec<RootedTree>,
    ) -> Self {
        children.sort();
        let weight = root_grade + children.iter().map(|c| c.weight).sum::<u64>();
        RootedTree {
            decoration,
            weight,
            children,
        }
    }

    pub fn decoration(&self) -> Decoration {
        self.decoration
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Children in canonical order, with multiplicity.
    pub fn children(&self) -> &[RootedTree] {
        &self.children
    }

    pub fn root_fertility(&self) -> usize {
        self.children.len()
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub(crate) fn root_grade(&self) -> u64 {
        self.weight - self.children.iter().map(|c| c.weight).sum::<u64>()
    }

    pub fn serialize(&self, alphabet: &DecorationAlphabet) -> String {
        let mut out = String::new();
        self.write_text(alphabet, &mut out);
        out
    }

    fn write_text(&self, alphabet: &DecorationAlphabet, out: &mut String) {
        out.push_str(alphabet.symbol(self.decoration));
        if !self.children.is_empty() {
            out.push('[');
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                c.write_text(alphabet, out);
            }
            out.push(']');
        }
    }
}

impl Forest {
    pub fn new(trees: Vec<PlanarTree>) -> Self {
        Forest(trees)
    }

    pub fn empty() -> Self {
        Forest(Vec::new())
    }

    pub fn trees(&self) -> &[PlanarTree] {
        &self.0
    }

    pub fn into_trees(self) -> Vec<PlanarTree> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|t| t.weight()).sum()
    }

    pub fn serialize(&self, alphabet: &DecorationAlphabet) -> String {
        let mut out = String::new();
        for (i, t) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push_str(&t.serialize(alphabet));
        }
        out
    }
}

impl From<Vec<PlanarTree>> for Forest {
    fn from(trees: Vec<PlanarTree>) -> Self {
        Forest(trees)
    }
}

impl FromIterator<PlanarTree> for Forest {
    fn from_iter<I: IntoIterator<Item = PlanarTree>>(iter: I) -> Self {
        Forest(iter.into_iter().collect())
    }
}
