//! Decoration alphabets: finite graded sets of vertex labels.
//!
//! Every tree vertex carries a decoration drawn from a [`DecorationAlphabet`].
//! Symbols are identifiers, pairwise distinct, in a fixed total order; each
//! symbol has a positive integer grade (degree). A vertex contributes its
//! decoration's grade to the weight of a tree, so with all grades equal to 1
//! the weight is the vertex count.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of a symbol in its alphabet. The index order is the alphabet order
/// used by the canonical order on trees.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Decoration(pub u32);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("duplicate decoration symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("decoration symbol `{0}` has grade 0; grades must be positive")]
    ZeroGrade(String),
    #[error("`{0}` is not a valid decoration symbol (expected an identifier)")]
    InvalidSymbol(String),
    #[error("expected {expected} grades, got {got}")]
    GradeCountMismatch { expected: usize, got: usize },
    #[error("unknown decoration symbol `{0}`")]
    UnknownSymbol(String),
    #[error("decoration index {index} out of range for alphabet of {size} symbols")]
    UnknownDecoration { index: u32, size: usize },
}

/// A finite ordered set of decoration symbols with positive grades.
#[derive(Clone, Debug)]
pub struct DecorationAlphabet {
    symbols: Vec<String>,
    grades: Vec<u64>,
    index: HashMap<String, Decoration>,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl DecorationAlphabet {
    /// Alphabet with every symbol in grade 1.
    pub fn new<I, S>(symbols: I) -> Result<Self, AlphabetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let grades = vec![1; symbols.len()];
        Self::with_grades(symbols, grades)
    }

    /// Alphabet with an explicit grade per symbol.
    pub fn with_grades<I, S>(symbols: I, grades: Vec<u64>) -> Result<Self, AlphabetError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if grades.len() != symbols.len() {
            return Err(AlphabetError::GradeCountMismatch {
                expected: symbols.len(),
                got: grades.len(),
            });
        }
        let mut index = HashMap::with_capacity(symbols.len());
        for (i, symbol) in symbols.iter().enumerate() {
            if !is_identifier(symbol) {
                return Err(AlphabetError::InvalidSymbol(symbol.clone()));
            }
            if grades[i] == 0 {
                return Err(AlphabetError::ZeroGrade(symbol.clone()));
            }
            if index.insert(symbol.clone(), Decoration(i as u32)).is_some() {
                return Err(AlphabetError::DuplicateSymbol(symbol.clone()));
            }
        }
        Ok(Self {
            symbols,
            grades,
            index,
        })
    }

    /// Alphabet `x1, .., xD`, all in grade 1.
    pub fn of_size(d: usize) -> Self {
        let symbols: Vec<String> = (1..=d).map(|i| format!("x{i}")).collect();
        Self::new(symbols).expect("generated symbols are valid and distinct")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn decorations(&self) -> impl Iterator<Item = Decoration> + '_ {
        (0..self.symbols.len() as u32).map(Decoration)
    }

    pub fn symbol(&self, d: Decoration) -> &str {
        &self.symbols[d.0 as usize]
    }

    pub fn grade(&self, d: Decoration) -> u64 {
        self.grades[d.0 as usize]
    }

    pub fn contains(&self, d: Decoration) -> bool {
        (d.0 as usize) < self.symbols.len()
    }

    pub(crate) fn check(&self, d: Decoration) -> Result<(), AlphabetError> {
        if self.contains(d) {
            Ok(())
        } else {
            Err(AlphabetError::UnknownDecoration {
                index: d.0,
                size: self.symbols.len(),
            })
        }
    }

    pub fn resolve(&self, symbol: &str) -> Result<Decoration, AlphabetError> {
        self.index
            .get(symbol)
            .copied()
            .ok_or_else(|| AlphabetError::UnknownSymbol(symbol.to_string()))
    }

    /// Number of symbols in grade `n`.
    pub fn count_in_grade(&self, n: u64) -> usize {
        self.grades.iter().filter(|&&g| g == n).count()
    }

    /// Largest grade present, 0 for the empty alphabet.
    pub fn max_grade(&self) -> u64 {
        self.grades.iter().copied().max().unwrap_or(0)
    }
}

impl fmt::Display for DecorationAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
            if self.grades[i] != 1 {
                write!(f, ":{}", self.grades[i])?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates() {
        let err = DecorationAlphabet::new(["a", "b", "a"]).unwrap_err();
        assert_eq!(err, AlphabetError::DuplicateSymbol("a".into()));
    }

    #[test]
    fn rejects_zero_grade() {
        let err = DecorationAlphabet::with_grades(["a", "b"], vec![1, 0]).unwrap_err();
        assert_eq!(err, AlphabetError::ZeroGrade("b".into()));
    }

    #[test]
    fn rejects_non_identifier() {
        assert!(DecorationAlphabet::new(["a-b"]).is_err());
        assert!(DecorationAlphabet::new(["1a"]).is_err());
        assert!(DecorationAlphabet::new(["_ok9"]).is_ok());
    }

    #[test]
    fn resolve_and_order() {
        let a = DecorationAlphabet::new(["d", "a", "c"]).unwrap();
        assert_eq!(a.resolve("d"), Ok(Decoration(0)));
        assert_eq!(a.resolve("c"), Ok(Decoration(2)));
        assert!(a.resolve("b").is_err());
        assert!(Decoration(0) < Decoration(2));
    }

    #[test]
    fn grade_counts() {
        let a = DecorationAlphabet::with_grades(["a", "b", "c"], vec![1, 2, 1]).unwrap();
        assert_eq!(a.count_in_grade(1), 2);
        assert_eq!(a.count_in_grade(2), 1);
        assert_eq!(a.max_grade(), 2);
    }
}
