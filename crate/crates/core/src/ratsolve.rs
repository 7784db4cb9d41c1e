//! Exact rational Gaussian elimination, used for the small linear systems
//! behind basis conversion and the contribution-table uniqueness solve.

use crate::matrix::IntMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Solution of an exactly determined rational system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolveOutcome {
    /// Full column rank and consistent: the unique solution.
    Unique(Vec<Rat>),
    /// Consistent but with free variables.
    Underdetermined,
    /// No solution.
    Inconsistent,
}

/// Solve A x = b over the rationals, reporting uniqueness.
/// `a` is row-major with `cols` unknowns; `b` has one entry per row.
pub fn solve(a: &[Vec<Rat>], b: &[Rat]) -> SolveOutcome {
    assert_eq!(a.len(), b.len());
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();

    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].clone();
        for x in m[row].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[row].clone();
                for (c, cell) in m[r].iter_mut().enumerate().skip(col) {
                    let sub = &f * &pivot_row[c];
                    *cell = &*cell - sub;
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == rows {
            break;
        }
    }

    if m.iter().skip(row).any(|r| !r[cols].is_zero()) {
        return SolveOutcome::Inconsistent;
    }
    if pivot_cols.len() < cols {
        return SolveOutcome::Underdetermined;
    }
    let mut x = vec![Rat::zero(); cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[r][cols].clone();
    }
    SolveOutcome::Unique(x)
}

/// Solve C X = B for X over the rationals and return it only if integral.
/// Both matrices must be square of equal size with C invertible.
pub fn solve_integral_matrix(c: &IntMatrix, b: &IntMatrix) -> Option<IntMatrix> {
    let n = c.rows();
    assert!(c.is_square() && b.rows() == n && b.cols() == n);
    let mut out = IntMatrix::zero(n, n);
    for col in 0..n {
        let a: Vec<Vec<Rat>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|k| Rat::from_integer(c[(r, k)].clone()))
                    .collect()
            })
            .collect();
        let rhs: Vec<Rat> = (0..n)
            .map(|r| Rat::from_integer(b[(r, col)].clone()))
            .collect();
        match solve(&a, &rhs) {
            SolveOutcome::Unique(x) => {
                for (r, v) in x.into_iter().enumerate() {
                    if !v.is_integer() {
                        return None;
                    }
                    out[(r, col)] = v.to_integer();
                }
            }
            _ => return None,
        }
    }
    Some(out)
}

/// Rank of a rational matrix.
pub fn rank(a: &[Vec<Rat>]) -> usize {
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<Rat>> = a.to_vec();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][col].clone();
        for x in m[rank].iter_mut() {
            *x = &*x / &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let pivot_row = m[rank].clone();
                for (c, cell) in m[r].iter_mut().enumerate().skip(col).take(cols - col) {
                    let sub = &f * &pivot_row[c];
                    *cell = &*cell - sub;
                }
            }
        }
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// Sign of a rational number as -1, 0, 1.
pub fn sign(x: &Rat) -> i32 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unique_system() {
        let a = vec![vec![rat(2), rat(1)], vec![rat(1), rat(-1)]];
        let b = vec![rat(5), rat(1)];
        assert_eq!(solve(&a, &b), SolveOutcome::Unique(vec![rat(2), rat(1)]));
    }

    #[test]
    fn inconsistent_and_underdetermined() {
        let a = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert_eq!(solve(&a, &[rat(1), rat(3)]), SolveOutcome::Inconsistent);
        assert_eq!(solve(&a, &[rat(1), rat(2)]), SolveOutcome::Underdetermined);
    }

    #[test]
    fn integral_matrix_solve() {
        let c = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        let b = IntMatrix::from_rows(&[vec![4, 3], vec![3, 2]]);
        // X = C^{-1} B = [[1,1],[2,1]]
        let x = solve_integral_matrix(&c, &b).unwrap();
        assert_eq!(x, IntMatrix::from_rows(&[vec![1, 1], vec![2, 1]]));
        assert_eq!(c.mul(&x), b);
    }

    #[test]
    fn rank_counts_pivots() {
        let a = vec![
            vec![rat(1), rat(2), rat(3)],
            vec![rat(2), rat(4), rat(6)],
            vec![rat(0), rat(1), rat(1)],
        ];
        assert_eq!(rank(&a), 2);
    }
}
