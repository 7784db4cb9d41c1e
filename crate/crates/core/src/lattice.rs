//! Integral lattices presented by Gram matrices, built from name expressions.
//!
//! Root lattices are taken negative definite (Picard convention), U is the
//! hyperbolic plane `[[0,1],[1,0]]` and a twist L(k) scales the Gram matrix.

use crate::expr::{AtomKind, LatticeExpr};
use crate::matrix::{inertia, Inertia, IntMatrix};
use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Lattice {
    gram: IntMatrix,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("Gram matrix must be square and symmetric")]
    NotSymmetric,
    #[error("lattice is odd: diagonal entry {0} is not even")]
    NotEven(String),
    #[error("lattice is degenerate (zero determinant)")]
    Degenerate,
    #[error("lattice is not 2-elementary: elementary divisor {0}")]
    NotTwoElementary(String),
    #[error("discriminant form enumeration over 2^{0} classes is out of range")]
    GroupTooLarge(usize),
}

impl Lattice {
    pub fn from_gram(gram: IntMatrix) -> Result<Self, LatticeError> {
        if !gram.is_symmetric() {
            return Err(LatticeError::NotSymmetric);
        }
        Ok(Lattice { gram })
    }

    pub fn gram(&self) -> &IntMatrix {
        &self.gram
    }

    pub fn rank(&self) -> usize {
        self.gram.rows()
    }

    pub fn det(&self) -> BigInt {
        self.gram.det()
    }

    pub fn is_even(&self) -> bool {
        (0..self.rank()).all(|i| (&self.gram[(i, i)] % BigInt::from(2)).is_zero())
    }

    pub fn signature(&self) -> Inertia {
        inertia(&self.gram)
    }

    /// Block-diagonal direct sum; rank adds, determinant multiplies.
    pub fn direct_sum(&self, other: &Lattice) -> Lattice {
        Lattice {
            gram: IntMatrix::block_diag(&[self.gram.clone(), other.gram.clone()]),
        }
    }
}

/// Build the Gram matrix named by a lattice expression.
pub fn make_lattice(expr: &LatticeExpr) -> Lattice {
    let blocks: Vec<IntMatrix> = expr
        .atoms()
        .into_iter()
        .map(|(kind, twist)| atom_gram(kind).scale(twist as i64))
        .collect();
    Lattice {
        gram: IntMatrix::block_diag(&blocks),
    }
}

pub fn make_lattice_named(name: &str) -> Lattice {
    make_lattice(&LatticeExpr::parse(name).expect("invalid lattice name"))
}

/// Gram matrix of a single untwisted atom.
pub fn atom_gram(kind: AtomKind) -> IntMatrix {
    match kind {
        AtomKind::U => IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]),
        AtomKind::Two => IntMatrix::from_rows(&[vec![2]]),
        AtomKind::A(n) => root_gram(n as usize, &chain_edges(n as usize)),
        AtomKind::D(n) => {
            let n = n as usize;
            let mut edges = chain_edges(n - 1);
            edges.push((n - 3, n - 1)); // fork node attached to the chain
            root_gram(n, &edges)
        }
        AtomKind::E(n) => {
            // Bourbaki numbering: chain 1-3-4-...-n with node 2 on node 4
            let n = n as usize;
            let mut edges = vec![(0, 2), (1, 3)];
            for i in 2..n - 1 {
                edges.push((i, i + 1));
            }
            root_gram(n, &edges)
        }
    }
}

fn chain_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect()
}

/// Negative definite root Gram: -2 on the diagonal, +1 on Dynkin edges.
fn root_gram(n: usize, edges: &[(usize, usize)]) -> IntMatrix {
    let mut g = IntMatrix::zero(n, n);
    for i in 0..n {
        g[(i, i)] = BigInt::from(-2);
    }
    for &(i, j) in edges {
        g[(i, j)] = BigInt::from(1);
        g[(j, i)] = BigInt::from(1);
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn named(name: &str) -> Lattice {
        make_lattice_named(name)
    }

    #[test]
    fn hyperbolic_plane_and_twist() {
        assert_eq!(
            named("U").gram(),
            &IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]])
        );
        assert_eq!(
            named("U(2)").gram(),
            &IntMatrix::from_rows(&[vec![0, 2], vec![2, 0]])
        );
    }

    #[test]
    fn root_determinants() {
        assert_eq!(named("A1").gram(), &IntMatrix::from_rows(&[vec![-2]]));
        for (name, det) in [
            ("A1", 2),
            ("A2", 3),
            ("A7", 8),
            ("D4", 4),
            ("D10", 4),
            ("E6", 3),
            ("E7", 2),
            ("E8", 1),
        ] {
            assert_eq!(named(name).det().abs(), BigInt::from(det), "{name}");
        }
    }

    #[test]
    fn sums_multiply_determinants() {
        let u = named("U");
        assert_eq!(u.direct_sum(&u).det(), BigInt::from(1)); // (-1)^2
        let ue8 = named("U+E8");
        assert_eq!(ue8.rank(), 10);
        assert_eq!(ue8.det().abs(), BigInt::from(1));
        let ud4 = named("U+D4");
        assert_eq!(ud4.rank(), 6);
        assert_eq!(ud4.det().abs(), BigInt::from(4));
        // E8 + A1: rank 9, |det| 2
        let e8a1 = named("E8+A1");
        assert_eq!(e8a1.rank(), 9);
        assert_eq!(e8a1.det().abs(), BigInt::from(2));
    }

    #[test]
    fn twist_scales_det_by_k_to_rank() {
        let d4 = named("D4");
        let d4_2 = named("D4(2)");
        assert_eq!(d4_2.det(), d4.det() * BigInt::from(16));
    }

    #[test]
    fn signatures() {
        let sig = named("U").signature();
        assert_eq!((sig.positive, sig.negative), (1, 1));
        let sig = named("E8").signature();
        assert_eq!((sig.positive, sig.negative), (0, 8));
        let sig = named("U+U+E8^2").signature();
        assert_eq!((sig.positive, sig.negative), (2, 18));
        let sig = named("<2>+A1").signature();
        assert_eq!((sig.positive, sig.negative), (1, 1));
    }

    #[test]
    fn all_catalog_style_lattices_even() {
        for name in ["U", "U(2)", "A5", "D7", "E6", "E7", "E8", "<2>", "U+E8(2)"] {
            assert!(named(name).is_even(), "{name}");
        }
    }
}
