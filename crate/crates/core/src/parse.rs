//! Text format for trees and forests.
//!
//! Grammar, whitespace permitted between tokens:
//!
//! ```text
//! Tree   := Ident ( "[" Tree ("," Tree)* "]" )?
//! Forest := Tree ("," Tree)*
//! Ident  := [A-Za-z_][A-Za-z0-9_]*
//! ```
//!
//! `serialize` emits no whitespace, so parse/serialize round-trips are
//! byte-identical on serialized output.

use thiserror::Error;

use crate::alphabet::{Decoration, DecorationAlphabet};
use crate::tree::{canonicalize, Forest, PlanarTree, RootedTree};

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Byte offset of the first character that does not fit the grammar.
    #[error("syntax error at offset {0}")]
    Syntax(usize),
    /// Identifier not in the decoration alphabet, with its byte offset.
    #[error("unknown decoration {symbol:?} at offset {offset}")]
    UnknownSymbol { symbol: String, offset: usize },
}

struct Parser<'a> {
    input: &'a [u8],
    pos: usize,
    alphabet: &'a DecorationAlphabet,
}

impl<'a> Parser<'a> {
    fn new(input: &'a str, alphabet: &'a DecorationAlphabet) -> Self {
        Parser {
            input: input.as_bytes(),
            pos: 0,
            alphabet,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.input.len() && self.input[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.input.get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<Decoration, ParseError> {
        let start = self.pos;
        match self.peek() {
            Some(b) if b.is_ascii_alphabetic() || b == b'_' => self.pos += 1,
            _ => return Err(ParseError::Syntax(self.pos)),
        }
        while let Some(b) = self.peek() {
            if b.is_ascii_alphanumeric() || b == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        let symbol = std::str::from_utf8(&self.input[start..self.pos]).unwrap();
        self.alphabet
            .resolve(symbol)
            .map_err(|_| ParseError::UnknownSymbol {
                symbol: symbol.to_owned(),
                offset: start,
            })
    }

    fn tree(&mut self) -> Result<PlanarTree, ParseError> {
        self.skip_ws();
        let d = self.ident()?;
        let mut children = Vec::new();
        self.skip_ws();
        if self.peek() == Some(b'[') {
            self.pos += 1;
            loop {
                children.push(self.tree()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b']') => {
                        self.pos += 1;
                        break;
                    }
                    _ => return Err(ParseError::Syntax(self.pos)),
                }
            }
        }
        Ok(PlanarTree::from_parts(d, self.alphabet.grade(d), children))
    }

    fn forest(&mut self) -> Result<Forest, ParseError> {
        let mut trees = vec![self.tree()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b',') {
                self.pos += 1;
                trees.push(self.tree()?);
            } else {
                break;
            }
        }
        Ok(Forest::new(trees))
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.skip_ws();
        if self.pos < self.input.len() {
            Err(ParseError::Syntax(self.pos))
        } else {
            Ok(())
        }
    }
}

/// Parses a single planar tree; trailing input is an error.
pub fn parse_planar(input: &str, alphabet: &DecorationAlphabet) -> Result<PlanarTree, ParseError> {
    let mut p = Parser::new(input, alphabet);
    let t = p.tree()?;
    p.finish()?;
    Ok(t)
}

/// Parses a tree and canonicalizes it, so the written child order is
/// forgotten.
pub fn parse_rooted(input: &str, alphabet: &DecorationAlphabet) -> Result<RootedTree, ParseError> {
    Ok(canonicalize(&parse_planar(input, alphabet)?))
}

/// Parses a comma-separated nonempty forest; order is kept.
pub fn parse_forest(input: &str, alphabet: &DecorationAlphabet) -> Result<Forest, ParseError> {
    let mut p = Parser::new(input, alphabet);
    let f = p.forest()?;
    p.finish()?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha() -> DecorationAlphabet {
        DecorationAlphabet::new(["a", "b", "c", "d"]).unwrap()
    }

    #[test]
    fn round_trip() {
        let al = alpha();
        for s in ["a", "a[b]", "a[b[c],d]", "d[a,a,a]", "b[a[a[a]]]"] {
            let t = parse_planar(s, &al).unwrap();
            assert_eq!(t.serialize(&al), s);
        }
    }

    #[test]
    fn whitespace_tolerated() {
        let al = alpha();
        let t = parse_planar(" a [ b [ c ] , d ] ", &al).unwrap();
        assert_eq!(t.serialize(&al), "a[b[c],d]");
    }

    #[test]
    fn unknown_symbol_offset() {
        let al = alpha();
        let err = parse_planar("a[zz]", &al).unwrap_err();
        assert_eq!(
            err,
            ParseError::UnknownSymbol {
                symbol: "zz".into(),
                offset: 2
            }
        );
    }

    #[test]
    fn truncated_input() {
        let al = alpha();
        assert_eq!(parse_planar("d[", &al).unwrap_err(), ParseError::Syntax(2));
        assert_eq!(parse_planar("d[a", &al).unwrap_err(), ParseError::Syntax(3));
        assert_eq!(
            parse_planar("d[a,", &al).unwrap_err(),
            ParseError::Syntax(4)
        );
        assert_eq!(parse_planar("", &al).unwrap_err(), ParseError::Syntax(0));
    }

    #[test]
    fn trailing_garbage() {
        let al = alpha();
        assert_eq!(parse_planar("a]", &al).unwrap_err(), ParseError::Syntax(1));
        assert_eq!(parse_planar("a b", &al).unwrap_err(), ParseError::Syntax(2));
    }

    #[test]
    fn empty_bracket_rejected() {
        let al = alpha();
        assert_eq!(parse_planar("a[]", &al).unwrap_err(), ParseError::Syntax(2));
    }

    #[test]
    fn rooted_parse_canonicalizes() {
        let al = alpha();
        let t = parse_rooted("a[c,b]", &al).unwrap();
        let u = parse_rooted("a[b,c]", &al).unwrap();
        assert_eq!(t, u);
        assert_eq!(t.serialize(&al), "a[b,c]");
    }

    #[test]
    fn forest_parse() {
        let al = alpha();
        let f = parse_forest("a,b[c],d", &al).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f.serialize(&al), "a,b[c],d");
        assert_eq!(f.weight(), 4);
        assert!(parse_forest("a,,b", &al).is_err());
        assert!(parse_forest("", &al).is_err());
    }
}
