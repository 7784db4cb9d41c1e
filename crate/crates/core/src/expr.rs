//! Lattice name expressions: the grammar `U | A<n> | D<n> | E6|E7|E8 | <2>`
//! with `(k)` twist, `^j` repetition and `+` for orthogonal direct sum.
//!
//! The same grammar is used by the command line, by the embedded golden
//! tables and by the built-in catalog, so every printed name re-parses.

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum AtomKind {
    /// Hyperbolic plane, Gram `[[0,1],[1,0]]`.
    U,
    /// Root lattice A_n, negative definite.
    A(u32),
    /// Root lattice D_n (n >= 4), negative definite.
    D(u32),
    /// Root lattice E_n (n = 6, 7, 8), negative definite.
    E(u32),
    /// Rank-one lattice with Gram (2).
    Two,
}

impl AtomKind {
    pub fn rank(&self) -> usize {
        match self {
            AtomKind::U => 2,
            AtomKind::A(n) | AtomKind::D(n) | AtomKind::E(n) => *n as usize,
            AtomKind::Two => 1,
        }
    }
}

/// One grammar term: an atom with optional twist and repetition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AtomTerm {
    pub kind: AtomKind,
    pub twist: u32,
    pub repeat: u32,
}

impl AtomTerm {
    pub fn plain(kind: AtomKind) -> Self {
        AtomTerm {
            kind,
            twist: 1,
            repeat: 1,
        }
    }
}

/// A lattice expression: a nonempty direct sum of atom terms.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LatticeExpr {
    pub terms: Vec<AtomTerm>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExprError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("semantic error at byte {offset}: {message}")]
    Semantic { offset: usize, message: String },
}

impl LatticeExpr {
    pub fn parse(text: &str) -> Result<Self, ExprError> {
        Parser {
            text: text.as_bytes(),
            pos: 0,
        }
        .parse_expr()
    }

    /// Total rank of the underlying lattice.
    pub fn rank(&self) -> usize {
        self.terms
            .iter()
            .map(|t| t.kind.rank() * t.repeat as usize)
            .sum()
    }

    /// Flat list of (atom, twist), expanding repetitions.
    pub fn atoms(&self) -> Vec<(AtomKind, u32)> {
        let mut out = Vec::new();
        for t in &self.terms {
            for _ in 0..t.repeat {
                out.push((t.kind, t.twist));
            }
        }
        out
    }

    /// Canonical form: atoms sorted the way the tables print them
    /// (U parts first by twist, then E, D, A by descending subscript),
    /// with equal runs collapsed into repetitions.
    pub fn canonical(&self) -> LatticeExpr {
        let mut atoms = self.atoms();
        atoms.sort_by_key(|(kind, twist)| atom_sort_key(*kind, *twist));
        let mut terms: Vec<AtomTerm> = Vec::new();
        for (kind, twist) in atoms {
            match terms.last_mut() {
                Some(t) if t.kind == kind && t.twist == twist => t.repeat += 1,
                _ => terms.push(AtomTerm {
                    kind,
                    twist,
                    repeat: 1,
                }),
            }
        }
        LatticeExpr { terms }
    }

    /// Structural equality after canonicalization.
    pub fn same_lattice_name(&self, other: &LatticeExpr) -> bool {
        self.canonical() == other.canonical()
    }
}

fn atom_sort_key(kind: AtomKind, twist: u32) -> (u8, u32, std::cmp::Reverse<u32>) {
    // family order: U, <2>, E, D, A; subscripts descending within a family
    match kind {
        AtomKind::U => (0, twist, std::cmp::Reverse(0)),
        AtomKind::Two => (1, twist, std::cmp::Reverse(0)),
        AtomKind::E(n) => (2, twist, std::cmp::Reverse(n)),
        AtomKind::D(n) => (3, twist, std::cmp::Reverse(n)),
        AtomKind::A(n) => (4, twist, std::cmp::Reverse(n)),
    }
}

impl fmt::Display for LatticeExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            match t.kind {
                AtomKind::U => write!(f, "U")?,
                AtomKind::A(n) => write!(f, "A{n}")?,
                AtomKind::D(n) => write!(f, "D{n}")?,
                AtomKind::E(n) => write!(f, "E{n}")?,
                AtomKind::Two => write!(f, "<2>")?,
            }
            if t.twist != 1 {
                write!(f, "({})", t.twist)?;
            }
            if t.repeat != 1 {
                write!(f, "^{}", t.repeat)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn parse_expr(&mut self) -> Result<LatticeExpr, ExprError> {
        let mut terms = vec![self.parse_term()?];
        loop {
            self.skip_ws();
            if self.peek() == Some(b'+') {
                self.pos += 1;
                terms.push(self.parse_term()?);
            } else {
                break;
            }
        }
        self.skip_ws();
        if self.pos != self.text.len() {
            return Err(self.syntax("unexpected trailing input"));
        }
        Ok(LatticeExpr { terms })
    }

    fn parse_term(&mut self) -> Result<AtomTerm, ExprError> {
        self.skip_ws();
        let start = self.pos;
        let kind = match self.peek() {
            Some(b'U') => {
                self.pos += 1;
                AtomKind::U
            }
            Some(b'A') => {
                self.pos += 1;
                let n = self.parse_int("subscript of A")?;
                if n < 1 {
                    return Err(self.semantic_at(start, "An requires n >= 1"));
                }
                AtomKind::A(n)
            }
            Some(b'D') => {
                self.pos += 1;
                let n = self.parse_int("subscript of D")?;
                if n < 4 {
                    return Err(self.semantic_at(start, "Dn requires n >= 4"));
                }
                AtomKind::D(n)
            }
            Some(b'E') => {
                self.pos += 1;
                let n = self.parse_int("subscript of E")?;
                if !(6..=8).contains(&n) {
                    return Err(self.semantic_at(start, "En requires n in {6, 7, 8}"));
                }
                AtomKind::E(n)
            }
            Some(b'<') => {
                self.pos += 1;
                let n = self.parse_int("diagonal entry")?;
                if n != 2 {
                    return Err(self.semantic_at(start, "only the rank-1 form <2> is supported"));
                }
                self.skip_ws();
                if self.peek() != Some(b'>') {
                    return Err(self.syntax("expected '>'"));
                }
                self.pos += 1;
                AtomKind::Two
            }
            Some(c) => {
                return Err(self.syntax(&format!("unexpected character '{}'", c as char)));
            }
            None => return Err(self.syntax("unexpected end of input")),
        };
        let mut term = AtomTerm::plain(kind);
        self.skip_ws();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            let k = self.parse_int("twist factor")?;
            if k < 1 {
                return Err(self.semantic_at(start, "twist factor must be >= 1"));
            }
            self.skip_ws();
            if self.peek() != Some(b')') {
                return Err(self.syntax("expected ')'"));
            }
            self.pos += 1;
            term.twist = k;
        }
        self.skip_ws();
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let j = self.parse_int("repetition exponent")?;
            if j < 1 {
                return Err(self.semantic_at(start, "repetition exponent must be >= 1"));
            }
            term.repeat = j;
        }
        Ok(term)
    }

    fn parse_int(&mut self, what: &str) -> Result<u32, ExprError> {
        self.skip_ws();
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax(&format!("expected {what}")));
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.syntax(&format!("{what} out of range")))
    }

    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(|c| c.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn syntax(&self, message: &str) -> ExprError {
        ExprError::Syntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn semantic_at(&self, offset: usize, message: &str) -> ExprError {
        ExprError::Semantic {
            offset,
            message: message.to_string(),
        }
    }
}
