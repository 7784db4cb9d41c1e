//! Constraint enumerators that regenerate the classification tables, the
//! embedded golden data they are diffed against, and the overall verifier.

mod enumerate;
mod golden;
mod rows;
mod verify;

pub use enumerate::{
    enumerate_table1, enumerate_table2, enumerate_table3, enumerate_table5, enumerate_table6,
    enumerate_table7, enumerate_thm81, Table2Exclusion, Table3Exclusion, Table5Exclusion,
    Table6Output, Table6Trace, Table7Exclusion, Thm81Output,
};
pub use golden::{golden_configurations, GoldenTables};
pub use rows::{
    CPrime, ExclusionRule, Table1Row, Table2Row, Table3Row, Table5Row, Table6Row, Table7Row,
    Thm81Row,
};
pub use verify::{verify_all, ScenarioDiff, TableDiff, Verdict, VerifyReport};

use crate::lefschetz::EigenspaceRanks;
use serde::Serialize;
use thiserror::Error;

/// Reorder rows so that those matching a golden key appear first, in
/// golden order; anything else keeps its relative order at the end.
pub fn order_like_golden<T, K: PartialEq>(
    rows: Vec<T>,
    golden_keys: &[K],
    key: impl Fn(&T) -> K,
) -> Vec<T> {
    let mut rows: Vec<(usize, T)> = rows.into_iter().enumerate().collect();
    rows.sort_by_key(|(i, row)| {
        let pos = golden_keys.iter().position(|k| *k == key(row));
        (pos.unwrap_or(usize::MAX), *i)
    });
    rows.into_iter().map(|(_, row)| row).collect()
}

/// Shape of the fixed locus of the square involution, as fed to the rank
/// solver: either the generic genus-plus-rational-curves form or one of
/// the two exceptional loci.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeInput {
    Generic { gamma: u32, j: u32 },
    TwoElliptic,
    Empty,
}

/// Ranks and 2-power data solved from a fixed-locus shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RankData {
    pub rho: u32,
    pub d: u32,
    pub r: u32,
    pub l: u32,
    pub m: u32,
}

impl RankData {
    pub fn eigenspace_ranks(&self) -> EigenspaceRanks {
        EigenspaceRanks {
            r: self.r as i64,
            l: self.l as i64,
            m: self.m as i64,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RanksError {
    #[error("rank data is not a nonnegative integer solution ({0})")]
    NotSolvable(String),
    #[error("2-power exponent {d} outside [0, min({rho}, {co})]")]
    DOutOfRange { d: i64, rho: i64, co: i64 },
}

/// Solve the eigenspace ranks of the order-4 action from the fixed locus
/// of its square plus the curve count alpha: the shape pins (rho, d) of
/// the square-invariant lattice, and r - l = 4 alpha + 2 splits rho.
pub fn ranks_from_fixed_locus(shape: ShapeInput, alpha: i64) -> Result<RankData, RanksError> {
    let (rho, d) = match shape {
        ShapeInput::Generic { gamma, j } => {
            let rho = 11 + j as i64 - gamma as i64;
            let d = 22 - rho - 2 * gamma as i64;
            (rho, d)
        }
        ShapeInput::TwoElliptic => (10, 8),
        ShapeInput::Empty => (10, 10),
    };
    if !(0..=22).contains(&rho) {
        return Err(RanksError::NotSolvable(format!("rho = {rho}")));
    }
    let co = 22 - rho;
    if d < 0 || d > rho.min(co) {
        return Err(RanksError::DOutOfRange { d, rho, co });
    }
    let two_r = rho + 4 * alpha + 2;
    let two_l = rho - 4 * alpha - 2;
    let two_m = 22 - rho;
    if two_r < 0 || two_l < 0 || two_m < 0 {
        return Err(RanksError::NotSolvable(format!(
            "2r = {two_r}, 2l = {two_l}, 2m = {two_m}"
        )));
    }
    if two_r % 2 != 0 || two_l % 2 != 0 || two_m % 2 != 0 {
        return Err(RanksError::NotSolvable(format!(
            "parity: 2r = {two_r}, 2l = {two_l}, 2m = {two_m}"
        )));
    }
    Ok(RankData {
        rho: rho as u32,
        d: d as u32,
        r: (two_r / 2) as u32,
        l: (two_l / 2) as u32,
        m: (two_m / 2) as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elliptic_fiber_row() {
        // genus 1, eight square-fixed rational curves, alpha = 0
        let r = ranks_from_fixed_locus(ShapeInput::Generic { gamma: 1, j: 8 }, 0).unwrap();
        assert_eq!((r.r, r.l, r.m), (10, 8, 2));
    }

    #[test]
    fn high_genus_row() {
        let r = ranks_from_fixed_locus(ShapeInput::Generic { gamma: 3, j: 0 }, -2).unwrap();
        assert_eq!((r.r, r.l, r.m), (1, 7, 7));
    }

    #[test]
    fn genus_ten_row() {
        let r = ranks_from_fixed_locus(ShapeInput::Generic { gamma: 10, j: 1 }, 0).unwrap();
        assert_eq!((r.r, r.l, r.m), (2, 0, 10));
        assert_eq!((r.rho, r.d), (2, 0));
    }

    #[test]
    fn two_elliptic_exception() {
        let r = ranks_from_fixed_locus(ShapeInput::TwoElliptic, 0).unwrap();
        assert_eq!((r.rho, r.d, r.r, r.l, r.m), (10, 8, 6, 4, 6));
    }

    #[test]
    fn rejects_inconsistent_shapes() {
        // d would be negative
        assert!(matches!(
            ranks_from_fixed_locus(ShapeInput::Generic { gamma: 10, j: 10 }, 0),
            Err(RanksError::DOutOfRange { .. })
        ));
        // odd split
        assert!(matches!(
            ranks_from_fixed_locus(ShapeInput::Generic { gamma: 1, j: 7 }, 0),
            Err(RanksError::NotSolvable(_))
        ));
    }
}
