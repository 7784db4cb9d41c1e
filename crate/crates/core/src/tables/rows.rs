//! Row types for the classification tables and the cited exclusion rules.

use crate::expr::LatticeExpr;
use crate::fibers::KodairaFiber;
use serde::{Deserialize, Serialize};
use std::fmt;

/// The invariant fiber over the second fixed base point: smooth, or one of
/// the reducible types the classification admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CPrime {
    Smooth,
    Fiber(KodairaFiber),
}

impl fmt::Display for CPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CPrime::Smooth => write!(f, "I_0"),
            CPrime::Fiber(k) => write!(f, "{k}"),
        }
    }
}

impl std::str::FromStr for CPrime {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "I_0" {
            return Ok(CPrime::Smooth);
        }
        s.parse::<KodairaFiber>().map(CPrime::Fiber)
    }
}

impl Serialize for CPrime {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CPrime {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A cited constraint that removes candidates an enumerator would
/// otherwise admit. The justification states the mathematical reason in
/// full, so the rule is auditable on its own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExclusionRule {
    pub id: &'static str,
    pub justification: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table1Row {
    pub m: u32,
    pub r: u32,
    pub l: u32,
    pub n: u32,
    pub k: u32,
    pub a: u32,
    /// Possible types of the second invariant fiber for these invariants.
    pub c_prime: Vec<CPrime>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table2Row {
    pub m: u32,
    pub r: u32,
    pub l: u32,
    pub n: u32,
    pub k: u32,
    pub a: u32,
    pub g: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table3Row {
    pub m: u32,
    pub r: u32,
    pub l: u32,
    pub n: u32,
    pub k: u32,
    pub a: u32,
}

/// A Table 5 row as enumerated: invariants plus the resolved lattice names
/// for the invariant part and its orthogonal complement (singletons when
/// the catalog pins them down).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table5Row {
    pub m: u32,
    pub r: u32,
    pub n1: u32,
    pub n2: u32,
    pub k: u32,
    pub g: u32,
    pub s: Vec<LatticeExpr>,
    pub t: Vec<LatticeExpr>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table6Row {
    pub m: u32,
    pub r: u32,
    pub n1: u32,
    pub g: u32,
    pub a: u32,
    /// Candidate names for the square-invariant lattice; double-entry rows
    /// carry more than one.
    pub s: Vec<LatticeExpr>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Table7Row {
    pub m: u32,
    pub r: u32,
    pub l: u32,
    pub n1: u32,
    pub n2: u32,
    pub k: u32,
    pub a: u32,
    pub c_prime: CPrime,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Thm81Row {
    pub m: u32,
    pub l: u32,
    pub k: u32,
    pub g: u32,
    pub a: u32,
    pub n2: u32,
    pub n1: u32,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_prime_round_trips() {
        for s in ["I_0", "I_4", "I_16", "IV*", "III*", "I*_0"] {
            let c: CPrime = s.parse().unwrap();
            assert_eq!(c.to_string(), s);
        }
        assert_eq!("I_0".parse::<CPrime>().unwrap(), CPrime::Smooth);
        assert!("I_x".parse::<CPrime>().is_err());
    }
}
