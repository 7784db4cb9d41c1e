//! Square roots of minus the identity acting trivially on the discriminant
//! group, for direct sums of U+U, U+U(2), E8 and D_{4k}.
//!
//! E8 and D_{4k} pick up the isometry from simultaneous quarter turns in
//! orthogonal coordinate planes, transported to the root basis. The two
//! hyperbolic cases are explicit matrices. Every returned isometry is
//! re-verified against its three defining properties.

use crate::expr::{AtomKind, LatticeExpr};
use crate::lattice::make_lattice;
use crate::matrix::{smith_normal_form, IntMatrix};
use crate::ratsolve::solve_integral_matrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SqrtError {
    #[error("no square root of -id is provided for {0}")]
    Unsupported(String),
    #[error("constructed map failed verification: {0}")]
    Verification(&'static str),
}

/// An isometry tau of the named lattice with tau^2 = -id and trivial action
/// on the discriminant group. Supported inputs are direct sums of U+U,
/// U+U(2), E8 and D_{4k}; the two hyperbolic planes of a pair need not be
/// adjacent in the expression.
pub fn square_root_of_minus_identity(expr: &LatticeExpr) -> Result<IntMatrix, SqrtError> {
    let atoms = expr.atoms();
    let unsupported = || SqrtError::Unsupported(expr.to_string());

    let mut offsets = Vec::with_capacity(atoms.len());
    let mut total = 0usize;
    for (kind, _) in &atoms {
        offsets.push(total);
        total += kind.rank();
    }

    // group atoms into blocks that carry a known isometry
    let mut plain_u = Vec::new();
    let mut twisted_u = Vec::new();
    let mut blocks: Vec<(Vec<usize>, IntMatrix)> = Vec::new();
    for (i, &(kind, twist)) in atoms.iter().enumerate() {
        match (kind, twist) {
            (AtomKind::U, 1) => plain_u.push(i),
            (AtomKind::U, 2) => twisted_u.push(i),
            (AtomKind::E(8), 1) => blocks.push((vec![i], e8_tau())),
            (AtomKind::D(n), 1) if n % 4 == 0 => blocks.push((vec![i], d4k_tau(n as usize))),
            _ => return Err(unsupported()),
        }
    }
    for u2 in twisted_u {
        let u = plain_u.pop().ok_or_else(unsupported)?;
        blocks.push((vec![u, u2], u_u2_tau()));
    }
    while let Some(a) = plain_u.pop() {
        let b = plain_u.pop().ok_or_else(unsupported)?;
        blocks.push((vec![b, a], u_u_tau()));
    }

    // assemble block-diagonally in permuted order, then conjugate back
    let mut perm = Vec::with_capacity(total);
    for (members, _) in &blocks {
        for &i in members {
            let rank = atoms[i].0.rank();
            perm.extend(offsets[i]..offsets[i] + rank);
        }
    }
    let p = IntMatrix::permutation(&perm);
    let tau_perm =
        IntMatrix::block_diag(&blocks.into_iter().map(|(_, tau)| tau).collect::<Vec<_>>());
    let tau = p.mul(&tau_perm).mul(&p.transpose());

    verify_square_root(make_lattice(expr).gram(), &tau)?;
    Ok(tau)
}

/// Check the three defining properties: isometry, square = -id, and
/// identity action on discriminant-group representatives.
pub fn verify_square_root(gram: &IntMatrix, tau: &IntMatrix) -> Result<(), SqrtError> {
    let n = gram.rows();
    if tau.transpose().mul(gram).mul(tau) != *gram {
        return Err(SqrtError::Verification("tau^T G tau != G"));
    }
    if tau.mul(tau) != IntMatrix::identity(n).neg() {
        return Err(SqrtError::Verification("tau^2 != -I"));
    }
    // dual representatives are columns of V scaled by 1/d_i; triviality
    // means d_i divides every entry of the i-th column of (V - tau V)
    let snf = smith_normal_form(gram);
    let moved = {
        let tv = tau.mul(&snf.v);
        IntMatrix::from_fn(n, n, |r, c| &snf.v[(r, c)] - &tv[(r, c)])
    };
    for i in 0..n {
        let d = &snf.d[(i, i)];
        if d.is_zero() || d.is_one() {
            continue;
        }
        for r in 0..n {
            if !(&moved[(r, i)] % d).is_zero() {
                return Err(SqrtError::Verification("nontrivial discriminant action"));
            }
        }
    }
    Ok(())
}

/// Quarter turn swapping the two hyperbolic planes of U + U.
fn u_u_tau() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![0, 0, -1, 0],
        vec![0, 0, 0, -1],
        vec![1, 0, 0, 0],
        vec![0, 1, 0, 0],
    ])
}

/// Square root of -id on U + U(2), basis (e, f) then (e', f').
fn u_u2_tau() -> IntMatrix {
    IntMatrix::from_rows(&[
        vec![-1, 0, -2, 0],
        vec![0, 1, 0, -2],
        vec![1, 0, 1, 0],
        vec![0, 1, 0, -1],
    ])
}

/// Simultaneous rotation by a quarter turn in the coordinate planes
/// (2i, 2i+1), written in the root basis of D_n, n = 4k.
fn d4k_tau(n: usize) -> IntMatrix {
    let mut basis = IntMatrix::zero(n, n);
    for i in 0..n - 1 {
        basis[(i, i)] = BigInt::one();
        basis[(i + 1, i)] = BigInt::from(-1);
    }
    basis[(n - 2, n - 1)] = BigInt::one();
    basis[(n - 1, n - 1)] = BigInt::one();
    conjugate_rotation(&basis, n)
}

/// The same rotation on the even coordinate model of E8 (doubled basis to
/// stay integral).
fn e8_tau() -> IntMatrix {
    let mut basis = IntMatrix::zero(8, 8);
    // doubled simple roots: 2a1 = (1,-1,...,-1,1), 2a2 = 2(e0 + e1),
    // 2a_j = 2(e_{j-2} - e_{j-3}) for j = 3..8
    for r in 0..8 {
        basis[(r, 0)] = if r == 0 || r == 7 {
            BigInt::one()
        } else {
            BigInt::from(-1)
        };
    }
    basis[(0, 1)] = BigInt::from(2);
    basis[(1, 1)] = BigInt::from(2);
    for j in 2..8 {
        basis[(j - 1, j)] = BigInt::from(2);
        basis[(j - 2, j)] = BigInt::from(-2);
    }
    conjugate_rotation(&basis, 8)
}

fn conjugate_rotation(basis: &IntMatrix, n: usize) -> IntMatrix {
    assert!(n.is_multiple_of(2));
    let mut rot = IntMatrix::zero(n, n);
    for b in 0..n / 2 {
        rot[(2 * b, 2 * b + 1)] = BigInt::from(-1);
        rot[(2 * b + 1, 2 * b)] = BigInt::one();
    }
    let rhs = rot.mul(basis);
    solve_integral_matrix(basis, &rhs)
        .expect("rotation must preserve the lattice spanned by the root basis")
}
