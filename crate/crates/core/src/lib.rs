//! Exact arithmetic engine for the classification of purely non-symplectic
//! order-4 automorphisms of K3 surfaces: integer lattices with their
//! 2-elementary invariants, fixed-point (Lefschetz) bookkeeping, Kodaira
//! fiber combinatorics, the constraint enumerators that regenerate every
//! classification table, and Weierstrass discriminant audits.

pub mod catalog;
pub mod expr;
pub mod fibers;
pub mod fibration;
pub mod gaussian;
pub mod isometry;
pub mod lattice;
pub mod lefschetz;
pub mod matrix;
pub mod poly;
pub mod ratsolve;
pub mod tables;
pub mod twoelem;

pub use expr::{AtomKind, AtomTerm, ExprError, LatticeExpr};
pub use lattice::{make_lattice, make_lattice_named, Lattice, LatticeError};
pub use matrix::{inertia, smith_normal_form, Inertia, IntMatrix, Snf};
pub use twoelem::{
    discriminant_group, involution_fixed_shape, two_elementary_profile, DiscriminantGroup,
    InvolutionFixedShape, TwoElemProfile,
};
