//! Order-insensitive diffs of the enumerators against the golden tables
//! and the combined verification report.

use super::enumerate::{
    enumerate_table1, enumerate_table2, enumerate_table3, enumerate_table5, enumerate_table6,
    enumerate_table7, enumerate_thm81,
};
use super::golden::{golden_configurations, golden_configurations_flat, GoldenTables};
use super::rows::{Table5Row, Table6Row};
use crate::catalog::profile_of;
use crate::fibers::{
    contribution, contribution_table_solve, enumerate_configurations, FIBER_ACTIONS,
};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, Serialize)]
pub struct TableDiff {
    pub id: String,
    pub matched: bool,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
    pub notes: Vec<String>,
}

impl TableDiff {
    fn from_sets(id: &str, enumerated: Vec<String>, golden: Vec<String>) -> TableDiff {
        let missing: Vec<String> = golden
            .iter()
            .filter(|g| !enumerated.contains(g))
            .cloned()
            .collect();
        let extra: Vec<String> = enumerated
            .iter()
            .filter(|e| !golden.contains(e))
            .cloned()
            .collect();
        TableDiff {
            id: id.to_string(),
            matched: missing.is_empty() && extra.is_empty(),
            missing,
            extra,
            notes: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ScenarioDiff {
    pub label: String,
    pub matched: bool,
    pub missing: Vec<String>,
    pub extra: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub configurations: Vec<ScenarioDiff>,
    pub contribution_table_unique: bool,
    pub tables: Vec<TableDiff>,
    pub thm81_count: usize,
    pub thm81_count_without_n2: usize,
    pub thm81_bounds_ok: bool,
    pub table6_extras: Vec<String>,
    pub overall: Verdict,
}

fn t5_row_string(row: &Table5Row) -> String {
    let names = |v: &[crate::expr::LatticeExpr]| {
        let mut names: Vec<String> = v.iter().map(|e| e.canonical().to_string()).collect();
        names.sort();
        names.join(", ")
    };
    format!(
        "m={} r={} n1={} n2={} k={} g={} S=[{}] T=[{}]",
        row.m,
        row.r,
        row.n1,
        row.n2,
        row.k,
        row.g,
        names(&row.s),
        names(&row.t)
    )
}

fn t6_key(row: &Table6Row) -> (u32, u32, u32, u32, u32) {
    (row.m, row.r, row.n1, row.g, row.a)
}

/// Run every enumerator and diff against the golden data.
pub fn verify_all() -> VerifyReport {
    let golden = GoldenTables::get();
    let mut tables = Vec::new();

    // fiber configurations (table c1)
    let mut configurations = Vec::new();
    for (scenario, golden_rows) in golden_configurations() {
        let enumerated = enumerate_configurations(*scenario);
        let show = |rows: &[crate::fibers::ConfigurationRow]| -> Vec<String> {
            rows.iter()
                .map(|r| {
                    format!(
                        "g_sigma={:?} g_sigma2={:?} n={} k={} a={} [{}]",
                        r.g_sigma,
                        r.g_sigma2,
                        r.n,
                        r.k,
                        r.a,
                        r.fibers_string()
                    )
                })
                .collect()
        };
        let want = show(golden_rows);
        let got = show(&enumerated);
        let missing: Vec<String> = want.iter().filter(|w| !got.contains(w)).cloned().collect();
        let extra: Vec<String> = got.iter().filter(|g| !want.contains(g)).cloned().collect();
        let mut euler_ok = true;
        for row in &enumerated {
            let e: u32 = row
                .fibers
                .iter()
                .map(|(fa, c)| fa.fiber.euler_number() * c)
                .sum();
            euler_ok &= e == 24;
        }
        configurations.push(ScenarioDiff {
            label: scenario.label().to_string(),
            matched: missing.is_empty() && extra.is_empty() && euler_ok,
            missing,
            extra,
        });
    }

    let contribution_table_unique = match contribution_table_solve(&golden_configurations_flat()) {
        Some(solved) => FIBER_ACTIONS
            .iter()
            .zip(solved)
            .all(|(fa, got)| contribution(fa).unwrap() == got),
        None => false,
    };

    // table 1
    let t1 = enumerate_table1();
    let show_t1 = |rows: &[super::rows::Table1Row]| -> Vec<String> {
        rows.iter()
            .map(|r| {
                let cp: Vec<String> = r.c_prime.iter().map(|c| c.to_string()).collect();
                format!(
                    "m={} r={} l={} n={} k={} a={} C'={}",
                    r.m,
                    r.r,
                    r.l,
                    r.n,
                    r.k,
                    r.a,
                    cp.join(" or ")
                )
            })
            .collect()
    };
    tables.push(TableDiff::from_sets(
        "t1",
        show_t1(&t1),
        show_t1(&golden.table1),
    ));

    // table 2 with its excluded channel
    let (t2, t2_excluded) = enumerate_table2();
    let show_t2 = |rows: &[super::rows::Table2Row]| -> Vec<String> {
        rows.iter()
            .map(|r| {
                format!(
                    "m={} r={} l={} n={} k={} a={} g={}",
                    r.m, r.r, r.l, r.n, r.k, r.a, r.g
                )
            })
            .collect()
    };
    let mut t2_diff = TableDiff::from_sets("t2", show_t2(&t2), show_t2(&golden.table2));
    verify_t2_exclusions(&t2_excluded, golden, &mut t2_diff);
    tables.push(t2_diff);

    // table 3
    let (t3, t3_excluded) = enumerate_table3();
    let show_t3 = |rows: &[super::rows::Table3Row]| -> Vec<String> {
        rows.iter()
            .map(|r| {
                format!(
                    "m={} r={} l={} n={} k={} a={}",
                    r.m, r.r, r.l, r.n, r.k, r.a
                )
            })
            .collect()
    };
    let mut t3_diff = TableDiff::from_sets("t3", show_t3(&t3), show_t3(&golden.table3));
    {
        let mut got: Vec<(u32, u32, u32)> = t3_excluded.iter().map(|e| (e.r, e.k, e.a)).collect();
        got.sort_unstable();
        let mut want = golden.table3_excluded.clone();
        want.sort_unstable();
        if got != want {
            t3_diff.matched = false;
            t3_diff
                .notes
                .push(format!("excluded channel {got:?} != {want:?}"));
        }
        if t3_excluded.iter().any(|e| e.rule.justification.is_empty()) {
            t3_diff.matched = false;
            t3_diff.notes.push("missing justification".into());
        }
    }
    tables.push(t3_diff);

    // table 5
    let (t5, _t5_exclusions) = enumerate_table5();
    let mut t5_diff = TableDiff::from_sets(
        "t5",
        t5.iter().map(t5_row_string).collect(),
        golden.table5.iter().map(t5_row_string).collect(),
    );
    verify_t5_profiles(golden, &mut t5_diff);
    tables.push(t5_diff);

    // table 6: two-sided
    let t6 = enumerate_table6();
    let mut t6_diff = TableDiff {
        id: "t6".into(),
        matched: true,
        missing: Vec::new(),
        extra: Vec::new(),
        notes: Vec::new(),
    };
    let mut table6_extras = Vec::new();
    for grow in &golden.table6 {
        match t6.rows.iter().find(|row| t6_key(row) == t6_key(grow)) {
            None => {
                t6_diff.matched = false;
                t6_diff.missing.push(format!("{grow:?}"));
            }
            Some(hit) => {
                for name in &grow.s {
                    if !hit.s.iter().any(|c| c.same_lattice_name(name)) {
                        t6_diff.matched = false;
                        t6_diff
                            .notes
                            .push(format!("row {:?} lost golden name {name}", t6_key(grow)));
                    }
                }
            }
        }
    }
    for row in &t6.rows {
        if !golden.table6.iter().any(|grow| t6_key(grow) == t6_key(row)) {
            let names: Vec<String> = row.s.iter().map(|e| e.to_string()).collect();
            table6_extras.push(format!(
                "m={} r={} n1={} g={} a={} candidates=[{}] (passes the base constraints; \
                 no cited rule removes it)",
                row.m,
                row.r,
                row.n1,
                row.g,
                row.a,
                names.join(", ")
            ));
        }
    }
    tables.push(t6_diff);

    // table 7
    let (t7, t7_excluded) = enumerate_table7();
    let show_t7 = |rows: &[super::rows::Table7Row]| -> Vec<String> {
        rows.iter()
            .map(|r| {
                format!(
                    "m={} r={} l={} n1={} n2={} k={} a={} C'={}",
                    r.m, r.r, r.l, r.n1, r.n2, r.k, r.a, r.c_prime
                )
            })
            .collect()
    };
    let mut t7_diff = TableDiff::from_sets("t7", show_t7(&t7), show_t7(&golden.table7));
    if t7_excluded.len() != 4 {
        t7_diff.matched = false;
        t7_diff.notes.push(format!(
            "expected 4 cycle-walk exclusions, got {}",
            t7_excluded.len()
        ));
    }
    tables.push(t7_diff);

    // the 63-case branch list
    let thm81 = enumerate_thm81();
    let thm81_bounds_ok = thm81.branch_bounds == vec![(3, 3, 2), (2, 5, 3), (1, 7, 4)];

    let overall = if configurations.iter().all(|s| s.matched)
        && contribution_table_unique
        && tables.iter().all(|t| t.matched)
        && thm81.rows.len() == 63
        && thm81_bounds_ok
    {
        Verdict::Match
    } else {
        Verdict::Mismatch
    };

    VerifyReport {
        configurations,
        contribution_table_unique,
        tables,
        thm81_count: thm81.rows.len(),
        thm81_count_without_n2: thm81.count_without_n2,
        thm81_bounds_ok,
        table6_extras,
        overall,
    }
}

/// The cited lattice identifications of the removed cases must carry the
/// profile the fixed-locus data implies.
fn verify_t2_exclusions(
    excluded: &[super::enumerate::Table2Exclusion],
    golden: &GoldenTables,
    diff: &mut TableDiff,
) {
    for (r, k, g, a, names) in &golden.table2_excluded {
        let Some(hit) = excluded
            .iter()
            .find(|e| (e.r, e.k, e.g, e.a) == (*r, *k, *g, *a))
        else {
            diff.matched = false;
            diff.notes
                .push(format!("missing excluded tuple ({r}, {k}, {g}, {a})"));
            continue;
        };
        if hit.rule.justification.is_empty() {
            diff.matched = false;
            diff.notes.push("missing justification".into());
        }
        for name in names {
            if !hit.lattices.iter().any(|c| c.same_lattice_name(name)) {
                diff.matched = false;
                diff.notes
                    .push(format!("excluded ({r}, {k}, {g}, {a}) lost {name}"));
            }
        }
        // profile implied by the tuple: alpha = 1 + k - g, j = 2a + k + n/2
        let alpha = 1 + *k as i64 - *g as i64;
        let n = 2 * alpha + 4;
        let j = (2 * *a as i64 + *k as i64 + n / 2) as u32;
        let rho = 11 + j as i64 - *g as i64;
        let d = 22 - rho - 2 * *g as i64;
        for name in &hit.lattices {
            match profile_of(name) {
                Some(p) if p.rho as i64 == rho && p.d as i64 == d && p.is_hyperbolic() => {}
                other => {
                    diff.matched = false;
                    diff.notes.push(format!(
                        "cited lattice {name} has profile {other:?}, expected rho={rho} d={d}"
                    ));
                }
            }
        }
    }
    if excluded.len() != golden.table2_excluded.len() {
        diff.matched = false;
        diff.notes.push(format!(
            "excluded channel has {} entries, expected {}",
            excluded.len(),
            golden.table2_excluded.len()
        ));
    }
}

/// Per-row profile arithmetic for table 5: the named invariant lattice
/// satisfies 2g = 22 - rho - d and 2j = rho - d with j = k + n1/2, and the
/// named complement has rank 22 - rho with the same d.
fn verify_t5_profiles(golden: &GoldenTables, diff: &mut TableDiff) {
    for row in &golden.table5 {
        let s = &row.s[0];
        let t = &row.t[0];
        let (Some(sp), Some(tp)) = (profile_of(s), profile_of(t)) else {
            diff.matched = false;
            diff.notes.push(format!("profiles of {s} / {t} must exist"));
            continue;
        };
        let j = row.k + row.n1 / 2;
        if 2 * row.g as i64 != 22 - sp.rho as i64 - sp.d as i64
            || 2 * j as i64 != sp.rho as i64 - sp.d as i64
        {
            diff.matched = false;
            diff.notes
                .push(format!("genus/count arithmetic fails for {s}"));
        }
        if tp.rho != 22 - sp.rho || tp.d != sp.d {
            diff.matched = false;
            diff.notes
                .push(format!("complement pairing fails for {s} / {t}"));
        }
        if sp.sig_plus != 1 || tp.sig_plus != 2 {
            diff.matched = false;
            diff.notes.push(format!("signatures wrong for {s} / {t}"));
        }
        if row.r != sp.rho as u32 || row.m as usize * 2 != tp.rho {
            diff.matched = false;
            diff.notes.push(format!("rank columns wrong for {s} / {t}"));
        }
    }
}

impl VerifyReport {
    /// Deterministic human-readable rendering, one line per checked item.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let mut line = |s: String| {
            out.push_str(&s);
            out.push('\n');
        };
        for s in &self.configurations {
            line(format!(
                "configurations [{}]: {}",
                s.label,
                if s.matched { "match" } else { "MISMATCH" }
            ));
            for m in &s.missing {
                line(format!("  missing: {m}"));
            }
            for e in &s.extra {
                line(format!("  extra: {e}"));
            }
        }
        line(format!(
            "contribution table uniquely determined: {}",
            if self.contribution_table_unique {
                "yes"
            } else {
                "NO"
            }
        ));
        for t in &self.tables {
            line(format!(
                "table {}: {}",
                t.id,
                if t.matched { "match" } else { "MISMATCH" }
            ));
            for m in &t.missing {
                line(format!("  missing: {m}"));
            }
            for e in &t.extra {
                line(format!("  extra: {e}"));
            }
            for n in &t.notes {
                line(format!("  note: {n}"));
            }
        }
        line(format!(
            "table thm81 count: {} at (m, l, k, g, a, n2) [{} without n2] {}",
            self.thm81_count,
            self.thm81_count_without_n2,
            if self.thm81_count == 63 {
                "(= 63, ok)"
            } else {
                "(EXPECTED 63)"
            }
        ));
        line(format!(
            "table thm81 per-branch bounds: {}",
            if self.thm81_bounds_ok {
                "match"
            } else {
                "MISMATCH"
            }
        ));
        for e in &self.table6_extras {
            line(format!("table t6 extra tuple: {e}"));
        }
        line(format!(
            "overall: {}",
            match self.overall {
                Verdict::Match => "match",
                Verdict::Mismatch => "MISMATCH",
            }
        ));
        out
    }
}
