//! The catalog of every lattice name the classification tables use, with
//! profile-based lookup.

use crate::expr::LatticeExpr;
use crate::lattice::make_lattice;
use crate::twoelem::{
    involution_fixed_shape, two_elementary_profile, InvolutionFixedShape, TwoElemProfile,
};
use std::sync::OnceLock;

/// Names appearing in the tables, the proofs' candidate lists and the
/// elliptic-fibration table of the Picard-rank-20 surface.
const CATALOG_NAMES: &[&str] = &[
    // invariant lattices of involutions, by rank
    "U",
    "U(2)",
    "<2>+A1",
    "U+A1^2",
    "U(2)+A1^2",
    "U+D4",
    "U(2)+D4",
    "U+A1^4",
    "U(2)+A1^4",
    "U+D6",
    "U+A1^6",
    "U(2)+A1^6",
    "U+E8",
    "U(2)+E8",
    "U+E7+A1",
    "U+D4^2",
    "U+D6+A1^2",
    "U(2)+D4^2",
    "U+D4+A1^4",
    "U+A1^8",
    "U(2)+A1^8",
    "U+E8(2)",
    "U+E8+A1^2",
    "U+E7+A1^3",
    "U+D8+A1^2",
    "U+D4^2+A1^2",
    "U(2)+D4^2+A1^2",
    "U+A1^10",
    "U+E8+D4",
    "U+E8+A1^4",
    "U+D6^2",
    "U(2)+E8+D4",
    "U(2)+D6^2",
    "U+D4^3",
    "U+D4^2+A1^4",
    "U+E7^2",
    "U(2)+E7^2",
    "U+D6^2+A1^2",
    "U+E8^2",
    "U(2)+E8^2",
    "U+E8+E7+A1",
    "U+E7^2+A1^2",
    "U+D8^2",
    "U+E8^2+A1^2",
    // transcendental partners
    "U+U",
    "U+U(2)",
    "U+U+D4",
    "U+U(2)+D4",
    "U+U+D4^2",
    "U+U(2)+D4^2",
    "U+U+E8",
    "U+U(2)+E8",
    "U+U+E8+D4",
    "U+U(2)+E8+D4",
    "U+U+E8^2",
    "U+U(2)+E8^2",
    // reducible-fiber root parts of the rank-20 surface's fibrations
    "E8^2+A1^2",
    "E8+D10",
    "D16+A1^2",
    "E7^2+D4",
    "E7+D10+A1",
    "A17+A1",
    "D18",
    "D12+D6",
    "D8^2+A1^2",
    "A15+A3",
    "E6+A11",
    "D6^3",
    "A9^2",
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub expr: LatticeExpr,
    /// Profile when the lattice is 2-elementary (root parts like A17+A1
    /// are catalogued but have no profile).
    pub profile: Option<TwoElemProfile>,
}

fn catalog() -> &'static Vec<CatalogEntry> {
    static CATALOG: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut seen: Vec<LatticeExpr> = Vec::new();
        let mut entries = Vec::new();
        for name in CATALOG_NAMES {
            let expr = LatticeExpr::parse(name).expect("catalog name must parse");
            let canon = expr.canonical();
            if seen.contains(&canon) {
                continue;
            }
            seen.push(canon.clone());
            let profile = two_elementary_profile(&make_lattice(&expr)).ok();
            entries.push(CatalogEntry { expr, profile });
        }
        entries
    })
}

pub fn catalog_entries() -> &'static [CatalogEntry] {
    catalog()
}

/// All catalog lattices whose (rho, d, delta, signature) equal the profile.
pub fn match_catalog(p: &TwoElemProfile) -> Vec<LatticeExpr> {
    catalog()
        .iter()
        .filter(|e| e.profile.as_ref() == Some(p))
        .map(|e| e.expr.clone())
        .collect()
}

/// Hyperbolic catalog lattices whose involution fixed locus has the given
/// top genus and rational-curve count. This sees the exceptional shapes,
/// so names keyed to the empty or two-elliptic-curve locus match through
/// their actual fixed locus rather than the generic formulas.
pub fn catalog_names_for_shape(top_genus: u32, rationals: u32) -> Vec<LatticeExpr> {
    catalog()
        .iter()
        .filter(|e| {
            e.profile
                .as_ref()
                .filter(|p| p.is_hyperbolic() && p.rho <= 20)
                .and_then(|p| involution_fixed_shape(p).ok())
                .and_then(|s| s.top_genus_and_rationals())
                == Some((top_genus, rationals))
        })
        .map(|e| e.expr.clone())
        .collect()
}

/// Hyperbolic catalog lattices with the given rank and 2-power exponent.
pub fn catalog_names_for_rho_d(rho: usize, d: usize) -> Vec<LatticeExpr> {
    catalog_names_where(|p| p.is_hyperbolic() && p.rho == rho && p.d == d)
}

/// Catalog lattices whose profile satisfies an arbitrary predicate.
pub fn catalog_names_where(f: impl Fn(&TwoElemProfile) -> bool) -> Vec<LatticeExpr> {
    catalog()
        .iter()
        .filter(|e| e.profile.as_ref().is_some_and(&f))
        .map(|e| e.expr.clone())
        .collect()
}

/// Profile of a named lattice, when 2-elementary.
pub fn profile_of(expr: &LatticeExpr) -> Option<TwoElemProfile> {
    two_elementary_profile(&make_lattice(expr)).ok()
}

/// Shape implied by a named lattice, if it is hyperbolic 2-elementary.
pub fn shape_of(expr: &LatticeExpr) -> Option<InvolutionFixedShape> {
    let p = two_elementary_profile(&make_lattice(expr)).ok()?;
    involution_fixed_shape(&p).ok()
}
