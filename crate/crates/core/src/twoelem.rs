//! Discriminant groups, 2-elementary profiles and the fixed-locus shape of
//! a non-symplectic involution attached to such a profile.

use crate::lattice::{Lattice, LatticeError};
use crate::matrix::smith_normal_form;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

/// The finite group dual/L, encoded by its elementary divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantGroup {
    /// Divisors > 1 in divisibility order.
    pub elementary_divisors: Vec<BigInt>,
    /// Group order, equal to |det| of the Gram matrix.
    pub order: BigInt,
}

impl DiscriminantGroup {
    /// Minimal number of generators.
    pub fn length(&self) -> usize {
        self.elementary_divisors.len()
    }
}

pub fn discriminant_group(l: &Lattice) -> Result<DiscriminantGroup, LatticeError> {
    let snf = smith_normal_form(l.gram());
    let divisors = snf.nontrivial_divisors();
    let n = l.rank();
    for i in 0..n {
        if snf.d[(i, i)].is_zero() {
            return Err(LatticeError::Degenerate);
        }
    }
    let order = divisors.iter().product();
    Ok(DiscriminantGroup {
        elementary_divisors: divisors,
        order,
    })
}

/// Nikulin data of an even 2-elementary lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TwoElemProfile {
    /// Rank.
    pub rho: usize,
    /// |det| = 2^d.
    pub d: usize,
    /// 0 when the discriminant quadratic form is integer valued, else 1.
    pub delta: u8,
    pub sig_plus: usize,
    pub sig_minus: usize,
}

impl TwoElemProfile {
    pub fn is_hyperbolic(&self) -> bool {
        self.sig_plus == 1
    }
}

pub fn two_elementary_profile(l: &Lattice) -> Result<TwoElemProfile, LatticeError> {
    if !l.is_even() {
        let bad = (0..l.rank())
            .find(|&i| !(&l.gram()[(i, i)] % BigInt::from(2)).is_zero())
            .map(|i| l.gram()[(i, i)].to_string())
            .unwrap_or_default();
        return Err(LatticeError::NotEven(bad));
    }
    let snf = smith_normal_form(l.gram());
    let n = l.rank();
    let two = BigInt::from(2);
    let mut d = 0;
    let mut two_positions = Vec::new();
    for i in 0..n {
        let x = &snf.d[(i, i)];
        if x.is_zero() {
            return Err(LatticeError::Degenerate);
        }
        if x.is_one() {
            continue;
        }
        if *x == two {
            d += 1;
            two_positions.push(i);
        } else {
            return Err(LatticeError::NotTwoElementary(x.to_string()));
        }
    }

    if d > 20 {
        // every lattice in range here has d <= 10; refuse to walk 2^d classes
        return Err(LatticeError::GroupTooLarge(d));
    }

    // Dual representatives of the 2^d classes are V * t / 2 with t supported
    // on the divisor-2 positions of the Smith form, so the square of a class
    // is (t^T W t) / 4 with W = V^T G V. Integer-valued means 4 | t^T W t.
    let w = snf.v.transpose().mul(l.gram()).mul(&snf.v);
    let mut delta = 0u8;
    'classes: for mask in 0u32..(1u32 << d) {
        let mut t = vec![BigInt::zero(); n];
        for (bit, &pos) in two_positions.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                t[pos] = BigInt::one();
            }
        }
        let mut q = BigInt::zero();
        for i in 0..n {
            if t[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if t[j].is_zero() {
                    continue;
                }
                q += &w[(i, j)];
            }
        }
        if !(&q % BigInt::from(4)).is_zero() {
            delta = 1;
            break 'classes;
        }
    }

    let sig = l.signature();
    debug_assert_eq!(sig.zero, 0);
    Ok(TwoElemProfile {
        rho: n,
        d,
        delta,
        sig_plus: sig.positive,
        sig_minus: sig.negative,
    })
}

/// Fixed locus of a non-symplectic involution with invariant lattice of the
/// given profile: empty, two elliptic curves, or a genus-gamma curve plus j
/// rational curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum InvolutionFixedShape {
    Empty,
    TwoElliptic,
    Generic { gamma: u32, j: u32 },
}

impl InvolutionFixedShape {
    /// Highest genus of a fixed curve and rational-curve count, when the
    /// fixed locus is nonempty.
    pub fn top_genus_and_rationals(&self) -> Option<(u32, u32)> {
        match *self {
            InvolutionFixedShape::Empty => None,
            InvolutionFixedShape::TwoElliptic => Some((1, 0)),
            InvolutionFixedShape::Generic { gamma, j } => Some((gamma, j)),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ShapeError {
    #[error("profile is not hyperbolic: sig_plus = {0}")]
    NotHyperbolic(usize),
    #[error("rank {0} exceeds 20")]
    RankTooLarge(usize),
    #[error("no integral fixed-locus shape: 22 - rho - d = {0}, rho - d = {1}")]
    NonIntegral(i64, i64),
}

pub fn involution_fixed_shape(p: &TwoElemProfile) -> Result<InvolutionFixedShape, ShapeError> {
    if !p.is_hyperbolic() {
        return Err(ShapeError::NotHyperbolic(p.sig_plus));
    }
    if p.rho > 20 {
        return Err(ShapeError::RankTooLarge(p.rho));
    }
    // (rho, d, delta) = (10, 10, 0) fixes nothing and (10, 8, 0) fixes two
    // elliptic curves; everything else follows the genus/count formulas.
    match (p.rho, p.d, p.delta) {
        (10, 10, 0) => return Ok(InvolutionFixedShape::Empty),
        (10, 8, 0) => return Ok(InvolutionFixedShape::TwoElliptic),
        _ => {}
    }
    let two_gamma = 22 - p.rho as i64 - p.d as i64;
    let two_j = p.rho as i64 - p.d as i64;
    if two_gamma < 0 || two_j < 0 || two_gamma % 2 != 0 || two_j % 2 != 0 {
        return Err(ShapeError::NonIntegral(two_gamma, two_j));
    }
    Ok(InvolutionFixedShape::Generic {
        gamma: (two_gamma / 2) as u32,
        j: (two_j / 2) as u32,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::make_lattice_named;

    fn profile(name: &str) -> TwoElemProfile {
        two_elementary_profile(&make_lattice_named(name)).unwrap()
    }

    #[test]
    fn discriminant_groups() {
        let g = discriminant_group(&make_lattice_named("E8")).unwrap();
        assert!(g.elementary_divisors.is_empty());
        assert_eq!(g.order, BigInt::one());

        let g = discriminant_group(&make_lattice_named("A1")).unwrap();
        assert_eq!(g.elementary_divisors, vec![BigInt::from(2)]);

        let g = discriminant_group(&make_lattice_named("U+E8(2)")).unwrap();
        assert_eq!(g.elementary_divisors, vec![BigInt::from(2); 8]);

        let g = discriminant_group(&make_lattice_named("A17")).unwrap();
        assert_eq!(g.elementary_divisors, vec![BigInt::from(18)]);
    }

    #[test]
    fn order_equals_absolute_determinant() {
        use num_traits::Signed;
        for name in ["U", "U(2)", "D4", "E7", "U+D4^2", "A9^2", "U+E8(2)"] {
            let l = make_lattice_named(name);
            let g = discriminant_group(&l).unwrap();
            assert_eq!(g.order, l.det().abs(), "{name}");
        }
    }

    #[test]
    fn profile_u() {
        let p = profile("U");
        assert_eq!((p.rho, p.d, p.delta), (2, 0, 0));
        assert_eq!((p.sig_plus, p.sig_minus), (1, 1));
    }

    #[test]
    fn profile_u2_by_class_enumeration() {
        // classes e/2, f/2, (e+f)/2 have squares 0, 0, 1: all integers
        let p = profile("U(2)");
        assert_eq!((p.rho, p.d, p.delta), (2, 2, 0));
    }

    #[test]
    fn profile_u_d4() {
        let p = profile("U+D4");
        assert_eq!((p.rho, p.d), (6, 2));
        assert_eq!(p.delta, 0);
    }

    #[test]
    fn delta_one_examples() {
        assert_eq!(profile("A1").delta, 1);
        assert_eq!(profile("U+A1^4").delta, 1);
        assert_eq!(profile("<2>+A1").delta, 1);
        assert_eq!(profile("U+E7+A1").delta, 1);
        assert_eq!(profile("U+D6^2").delta, 1);
    }

    #[test]
    fn delta_zero_examples() {
        assert_eq!(profile("D4").delta, 0);
        assert_eq!(profile("U+E8(2)").delta, 0);
        assert_eq!(profile("U(2)+D4^2").delta, 0);
        // spinor classes of D8 have square 2, so D8 stays integer-valued
        assert_eq!(profile("U+D8^2").delta, 0);
    }

    #[test]
    fn rejects_non_two_elementary() {
        let err = two_elementary_profile(&make_lattice_named("A2")).unwrap_err();
        assert!(matches!(err, LatticeError::NotTwoElementary(_)));
    }

    #[test]
    fn shapes_for_table_lattices() {
        let s = involution_fixed_shape(&profile("U")).unwrap();
        assert_eq!(s, InvolutionFixedShape::Generic { gamma: 10, j: 1 });
        let s = involution_fixed_shape(&profile("U+E8")).unwrap();
        assert_eq!(s, InvolutionFixedShape::Generic { gamma: 6, j: 5 });
        let s = involution_fixed_shape(&profile("U+E8(2)")).unwrap();
        assert_eq!(s, InvolutionFixedShape::TwoElliptic);
        let s = involution_fixed_shape(&profile("U(2)+E8(2)")).unwrap();
        assert_eq!(s, InvolutionFixedShape::Empty);
        // delta = 1 at (10, 8) and (10, 10) stays generic
        let s = involution_fixed_shape(&profile("U+A1^8")).unwrap();
        assert_eq!(s, InvolutionFixedShape::Generic { gamma: 2, j: 1 });
        let s = involution_fixed_shape(&profile("U(2)+A1^8")).unwrap();
        assert_eq!(s, InvolutionFixedShape::Generic { gamma: 1, j: 0 });
    }

    #[test]
    fn shape_rejects_definite_lattices() {
        let err = involution_fixed_shape(&profile("A1^2")).unwrap_err();
        assert!(matches!(err, ShapeError::NotHyperbolic(0)));
    }
}
