//! Acceptance suite: every criterion is one test that prints a PASS line.
//! The expected values are frozen from independent recomputation or from
//! the embedded golden data.

use k3fix4_core::catalog::profile_of;
use k3fix4_core::expr::LatticeExpr;
use k3fix4_core::fibers::{
    contribution, contribution_table_solve, enumerate_configurations, ContributionVector,
    FIBER_ACTIONS,
};
use k3fix4_core::fibration::{audit_table4, family_coeff_poly, family_discriminant_coeffs};
use k3fix4_core::gaussian::GaussianRational;
use k3fix4_core::isometry::square_root_of_minus_identity;
use k3fix4_core::lattice::make_lattice;
use k3fix4_core::lefschetz::{holomorphic_lefschetz, symplectic_square_cases};
use k3fix4_core::matrix::{smith_normal_form, IntMatrix};
use k3fix4_core::tables::{
    enumerate_table1, enumerate_table2, enumerate_table3, enumerate_table5, enumerate_table6,
    enumerate_table7, enumerate_thm81, golden_configurations, GoldenTables,
};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

fn pass(criterion: u32, summary: &str) {
    println!("ACCEPTANCE {criterion:>2}: PASS - {summary}");
}

#[test]
fn a01_symplectic_square_triples() {
    let cases = symplectic_square_cases();
    assert_eq!(
        cases,
        vec![(6, 8, 0), (7, 7, 2), (8, 6, 4), (9, 5, 6), (10, 4, 8)]
    );
    pass(
        1,
        "symplectic-square triples enumerate to the exact five cases",
    );
}

#[test]
fn a02_holomorphic_lefschetz_grid() {
    let target = GaussianRational::one_minus_i();
    for alpha in -5..=10i64 {
        for n in 0..=30u32 {
            let hit = holomorphic_lefschetz(n, alpha) == target;
            assert_eq!(
                hit,
                n as i64 == 2 * alpha + 4,
                "identity misclassified at n={n}, alpha={alpha}"
            );
        }
    }
    pass(
        2,
        "L = 1 - i exactly on the line n = 2 alpha + 4 over the full grid",
    );
}

#[test]
fn a03_fiber_configurations() {
    let golden = golden_configurations();
    let mut total = 0;
    for (scenario, want) in golden {
        let got = enumerate_configurations(*scenario);
        assert_eq!(got.len(), want.len(), "{}", scenario.label());
        for row in want {
            assert!(got.contains(row), "missing {row:?} in {}", scenario.label());
        }
        for row in &got {
            let e: u32 = row
                .fibers
                .iter()
                .map(|(fa, c)| fa.fiber.euler_number() * c)
                .sum();
            assert_eq!(e, 24);
        }
        total += got.len();
    }
    assert_eq!(total, 9 + 9 + 18 + 1);

    // uniqueness: the golden rows pin every contribution column
    let flat: Vec<_> = golden
        .iter()
        .flat_map(|(s, rows)| rows.iter().map(move |r| (*s, r.clone())))
        .collect();
    let solved = contribution_table_solve(&flat).expect("columns must solve uniquely");
    let hardcoded: Vec<ContributionVector> = FIBER_ACTIONS
        .iter()
        .map(|fa| contribution(fa).unwrap())
        .collect();
    assert_eq!(solved.to_vec(), hardcoded);
    pass(
        3,
        "all four scenarios match golden (9+9+18+1), Euler 24, contribution table unique",
    );
}

#[test]
fn a04_tables_1_2_3_7() {
    let golden = GoldenTables::get();

    let t1 = enumerate_table1();
    assert_eq!(t1.len(), 6);
    for row in &golden.table1 {
        assert!(t1.contains(row), "missing t1 row {row:?}");
    }

    let (t2, t2_excluded) = enumerate_table2();
    assert_eq!(t2.len(), 5);
    for row in &golden.table2 {
        assert!(t2.contains(row), "missing t2 row {row:?}");
    }
    assert_eq!(t2_excluded.len(), 4);
    for (r, k, g, a, names) in &golden.table2_excluded {
        let hit = t2_excluded
            .iter()
            .find(|e| (e.r, e.k, e.g, e.a) == (*r, *k, *g, *a))
            .unwrap_or_else(|| panic!("missing excluded tuple ({r},{k},{g},{a})"));
        assert!(!hit.rule.justification.is_empty());
        for name in names {
            assert!(hit.lattices.iter().any(|c| c.same_lattice_name(name)));
        }
    }

    let (t3, t3_excluded) = enumerate_table3();
    assert_eq!(t3.len(), 8);
    for row in &golden.table3 {
        assert!(t3.contains(row), "missing t3 row {row:?}");
    }
    let mut keys: Vec<(u32, u32, u32)> = t3_excluded.iter().map(|e| (e.r, e.k, e.a)).collect();
    keys.sort_unstable();
    assert_eq!(keys, vec![(15, 2, 2), (17, 3, 1)]);
    assert!(t3_excluded.iter().all(|e| !e.rule.justification.is_empty()));

    let (t7, t7_excluded) = enumerate_table7();
    assert_eq!(t7.len(), 5);
    for row in &golden.table7 {
        assert!(t7.contains(row), "missing t7 row {row:?}");
    }
    assert_eq!(t7_excluded.len(), 4);
    assert!(t7_excluded.iter().all(|e| !e.rule.justification.is_empty()));
    pass(
        4,
        "tables 1, 2, 3, 7 regenerate exactly with the cited excluded channels",
    );
}

#[test]
fn a05_table5_with_profile_arithmetic() {
    let golden = GoldenTables::get();
    let (rows, _) = enumerate_table5();
    assert_eq!(rows.len(), 12);
    for grow in &golden.table5 {
        let hit = rows
            .iter()
            .find(|r| {
                (r.m, r.r, r.n1, r.n2, r.k, r.g)
                    == (grow.m, grow.r, grow.n1, grow.n2, grow.k, grow.g)
            })
            .unwrap_or_else(|| panic!("missing t5 row {grow:?}"));
        assert_eq!(hit.s.len(), 1);
        assert_eq!(hit.t.len(), 1);
        assert!(hit.s[0].same_lattice_name(&grow.s[0]), "{grow:?}");
        assert!(hit.t[0].same_lattice_name(&grow.t[0]), "{grow:?}");

        // profile arithmetic from the named Gram matrices
        let sp = profile_of(&grow.s[0]).expect("S profile");
        let tp = profile_of(&grow.t[0]).expect("T profile");
        let j = grow.k + grow.n1 / 2;
        assert_eq!(
            2 * grow.g as i64,
            22 - sp.rho as i64 - sp.d as i64,
            "{grow:?}"
        );
        assert_eq!(2 * j as i64, sp.rho as i64 - sp.d as i64, "{grow:?}");
        assert_eq!(tp.rho, 22 - sp.rho);
        assert_eq!(tp.d, sp.d);
    }
    pass(5, "table 5 regenerates (12 rows) and the named Gram matrices satisfy the genus/count arithmetic");
}

#[test]
fn a06_table6_two_sided() {
    let golden = GoldenTables::get();
    let out = enumerate_table6();
    assert_eq!(
        golden.table6.len(),
        30,
        "the duplicated golden row is stored once"
    );

    for grow in &golden.table6 {
        let hit = out
            .rows
            .iter()
            .find(|r| (r.m, r.r, r.n1, r.g, r.a) == (grow.m, grow.r, grow.n1, grow.g, grow.a))
            .unwrap_or_else(|| panic!("missing golden t6 row {grow:?}"));
        for name in &grow.s {
            assert!(
                hit.s.iter().any(|c| c.same_lattice_name(name)),
                "row {grow:?} must keep golden name {name}"
            );
        }
    }
    // extras only get reported, each with a usable trace
    let mut extras = 0;
    for row in &out.rows {
        let known = golden
            .table6
            .iter()
            .any(|g| (g.m, g.r, g.n1, g.g, g.a) == (row.m, row.r, row.n1, row.g, row.a));
        if !known {
            extras += 1;
            assert!(
                !row.s.is_empty(),
                "extra rows carry their admitting candidates"
            );
            println!(
                "  t6 extra: m={} r={} n1={} g={} a={} via {:?}",
                row.m,
                row.r,
                row.n1,
                row.g,
                row.a,
                row.s.iter().map(|e| e.to_string()).collect::<Vec<_>>()
            );
        }
    }
    pass(
        6,
        &format!("table 6 covers all 30 golden rows and names; {extras} extra tuples reported with traces"),
    );
}

#[test]
fn a07_thm81_count() {
    let out = enumerate_thm81();
    assert_eq!(
        out.rows.len(),
        63,
        "expected 63 tuples at (m, l, k, g, a, n2); other granularities: without n2 = {}",
        out.count_without_n2
    );
    assert_eq!(out.branch_bounds, vec![(3, 3, 2), (2, 5, 3), (1, 7, 4)]);
    pass(7, "table thm81 yields exactly 63 tuples with branch bounds (3: g<=3 a<=2, 2: g<=5 a<=3, 1: g<=7 a<=4)");
}

#[test]
fn a08_family_discriminant_coefficients() {
    let (g1, g2, g3, g4) = family_discriminant_coeffs();
    let e1 = family_coeff_poly(&[(4, &[("f", 3)]), (27, &[("g", 2)])]);
    let e2 = family_coeff_poly(&[(12, &[("f", 2), ("a", 1)]), (54, &[("g", 1), ("c", 1)])]);
    let e3 = family_coeff_poly(&[
        (12, &[("f", 2), ("b", 1)]),
        (54, &[("g", 1), ("d", 1)]),
        (12, &[("f", 1), ("a", 2)]),
        (27, &[("c", 2)]),
    ]);
    let e4 = family_coeff_poly(&[
        (24, &[("f", 1), ("a", 1), ("b", 1)]),
        (4, &[("a", 3)]),
        (54, &[("g", 1), ("e", 1)]),
        (54, &[("c", 1), ("d", 1)]),
    ]);
    assert_eq!(g1, e1);
    assert_eq!(g2, e2);
    assert_eq!(g3, e3);
    assert_eq!(g4, e4);
    pass(
        8,
        "the four top discriminant coefficients equal the reference polynomials exactly",
    );
}

#[test]
fn a09_table4_audit() {
    // independent recomputation: euler number per root symbol is n+1 for
    // A_n, (n-4)+6 for D_n, and 8, 9, 10 for E6, E7, E8
    fn euler_of_symbol(kind: k3fix4_core::AtomKind) -> i64 {
        match kind {
            k3fix4_core::AtomKind::A(n) => n as i64 + 1,
            k3fix4_core::AtomKind::D(n) => n as i64 + 2,
            k3fix4_core::AtomKind::E(6) => 8,
            k3fix4_core::AtomKind::E(7) => 9,
            k3fix4_core::AtomKind::E(8) => 10,
            other => panic!("not a root symbol: {other:?}"),
        }
    }
    let audits = audit_table4();
    assert_eq!(audits.len(), 13);
    let mut residuals = Vec::new();
    for audit in &audits {
        assert!(audit.shioda_tate_ok, "row {}", audit.no);
        assert!(audit.residual_i1 >= 0, "row {}", audit.no);
        let expr = LatticeExpr::parse(&audit.roots).unwrap();
        let independent: i64 = expr.atoms().iter().map(|(k, _)| euler_of_symbol(*k)).sum();
        assert_eq!(24 - independent, audit.residual_i1, "row {}", audit.no);
        residuals.push(audit.residual_i1);
    }
    // frozen from the recomputation above
    assert_eq!(residuals, vec![0, 2, 2, 0, 1, 4, 4, 2, 0, 4, 4, 0, 4]);
    pass(
        9,
        "all 13 fibrations balance rank 18 with nonnegative recomputed residuals",
    );
}

#[test]
fn a10_square_roots_of_minus_identity() {
    for name in ["U+U", "U+U(2)", "E8", "D4", "D8"] {
        let expr = LatticeExpr::parse(name).unwrap();
        let gram = make_lattice(&expr).gram().clone();
        let tau = square_root_of_minus_identity(&expr).unwrap();
        let n = gram.rows();
        // isometry
        assert_eq!(tau.transpose().mul(&gram).mul(&tau), gram, "{name}");
        // square is minus the identity
        assert_eq!(tau.mul(&tau), IntMatrix::identity(n).neg(), "{name}");
        // trivial action on the discriminant group
        let snf = smith_normal_form(&gram);
        let tv = tau.mul(&snf.v);
        for i in 0..n {
            let d = &snf.d[(i, i)];
            if d.is_one() {
                continue;
            }
            for r in 0..n {
                let moved = &snf.v[(r, i)] - &tv[(r, i)];
                assert!((&moved % d).is_zero(), "{name}: class {i} moves");
            }
        }
    }
    pass(
        10,
        "isometry, square = -id and trivial discriminant action hold for U+U, U+U(2), E8, D4, D8",
    );
}

#[test]
fn a11_snf_property_suite() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20260810);
    for case in 0..1000 {
        let rows = rng.gen_range(1..=8);
        let cols = rng.gen_range(1..=8);
        let m = IntMatrix::from_fn(rows, cols, |_, _| BigInt::from(rng.gen_range(-9i64..=9)));
        let snf = smith_normal_form(&m);
        assert_eq!(
            snf.u.mul(&m).mul(&snf.v),
            snf.d,
            "factorization, case {case}"
        );
        assert_eq!(
            snf.u.det().abs(),
            BigInt::one(),
            "u unimodular, case {case}"
        );
        assert_eq!(
            snf.v.det().abs(),
            BigInt::one(),
            "v unimodular, case {case}"
        );
        let n = rows.min(cols);
        for r in 0..rows {
            for c in 0..cols {
                if r != c {
                    assert!(snf.d[(r, c)].is_zero(), "off-diagonal, case {case}");
                }
            }
        }
        for i in 0..n {
            assert!(!snf.d[(i, i)].is_negative(), "nonnegative, case {case}");
            if i + 1 < n {
                let (a, b) = (&snf.d[(i, i)], &snf.d[(i + 1, i + 1)]);
                if a.is_zero() {
                    assert!(b.is_zero(), "zeros trail, case {case}");
                } else {
                    assert!((b % a).is_zero(), "divisibility, case {case}");
                }
            }
        }
    }
    pass(
        11,
        "1000 random matrices: exact factorization, unimodular transforms, divisor chain",
    );
}
