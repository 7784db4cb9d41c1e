//! Embedded golden tables, parsed from the JSON shipped with the crate.

use super::rows::{Table1Row, Table2Row, Table3Row, Table5Row, Table6Row, Table7Row};
use crate::expr::LatticeExpr;
use crate::fibers::{
    ActionVariant, BisectionKind, ConfigurationRow, FiberAction, FibrationScenario, KodairaFiber,
};
use serde::Deserialize;
use std::sync::OnceLock;

#[derive(Debug, Clone)]
pub struct GoldenTables {
    pub table1: Vec<Table1Row>,
    pub table2: Vec<Table2Row>,
    /// (r, k, g, a) tuples with candidate lattices, removed in the proof.
    pub table2_excluded: Vec<(u32, u32, u32, u32, Vec<LatticeExpr>)>,
    pub table3: Vec<Table3Row>,
    /// (r, k, a) tuples removed in the proof.
    pub table3_excluded: Vec<(u32, u32, u32)>,
    pub table5: Vec<Table5Row>,
    pub table5_excluded_lattices: Vec<LatticeExpr>,
    pub table6: Vec<Table6Row>,
    pub table7: Vec<Table7Row>,
}

impl GoldenTables {
    pub fn get() -> &'static GoldenTables {
        static GOLDEN: OnceLock<GoldenTables> = OnceLock::new();
        GOLDEN.get_or_init(load)
    }
}

fn expr(s: &str) -> LatticeExpr {
    LatticeExpr::parse(s).expect("golden lattice name must parse")
}

fn load() -> GoldenTables {
    #[derive(Deserialize)]
    struct T1 {
        schema: u32,
        rows: Vec<Table1Row>,
    }
    #[derive(Deserialize)]
    struct T2Excl {
        r: u32,
        k: u32,
        g: u32,
        a: u32,
        lattices: Vec<String>,
    }
    #[derive(Deserialize)]
    struct T2 {
        schema: u32,
        rows: Vec<Table2Row>,
        excluded: Vec<T2Excl>,
    }
    #[derive(Deserialize)]
    struct T3Excl {
        r: u32,
        k: u32,
        a: u32,
    }
    #[derive(Deserialize)]
    struct T3 {
        schema: u32,
        rows: Vec<Table3Row>,
        excluded: Vec<T3Excl>,
    }
    #[derive(Deserialize)]
    struct T5RowRaw {
        m: u32,
        r: u32,
        n1: u32,
        n2: u32,
        k: u32,
        g: u32,
        s: String,
        t: String,
    }
    #[derive(Deserialize)]
    struct T5 {
        schema: u32,
        rows: Vec<T5RowRaw>,
        excluded_lattices: Vec<String>,
    }
    #[derive(Deserialize)]
    struct T6RowRaw {
        m: u32,
        r: u32,
        n1: u32,
        g: u32,
        a: u32,
        s: Vec<String>,
        #[serde(default)]
        duplicated_in_source: bool,
    }
    #[derive(Deserialize)]
    struct T6 {
        schema: u32,
        rows: Vec<T6RowRaw>,
    }
    #[derive(Deserialize)]
    struct T7 {
        schema: u32,
        rows: Vec<Table7Row>,
    }

    let t1: T1 = serde_json::from_str(include_str!("../../data/golden/table1.json")).unwrap();
    let t2: T2 = serde_json::from_str(include_str!("../../data/golden/table2.json")).unwrap();
    let t3: T3 = serde_json::from_str(include_str!("../../data/golden/table3.json")).unwrap();
    let t5: T5 = serde_json::from_str(include_str!("../../data/golden/table5.json")).unwrap();
    let t6: T6 = serde_json::from_str(include_str!("../../data/golden/table6.json")).unwrap();
    let t7: T7 = serde_json::from_str(include_str!("../../data/golden/table7.json")).unwrap();
    for schema in [
        t1.schema, t2.schema, t3.schema, t5.schema, t6.schema, t7.schema,
    ] {
        assert_eq!(schema, 1, "unknown golden schema version");
    }

    // the row marked as duplicated is stored once; diffs compare sets
    let mut table6 = Vec::new();
    for row in &t6.rows {
        table6.push(Table6Row {
            m: row.m,
            r: row.r,
            n1: row.n1,
            g: row.g,
            a: row.a,
            s: row.s.iter().map(|s| expr(s)).collect(),
        });
    }
    let dup_count = t6.rows.iter().filter(|r| r.duplicated_in_source).count();
    assert_eq!(dup_count, 1, "exactly one row carries the duplicate marker");

    GoldenTables {
        table1: t1.rows,
        table2: t2.rows,
        table2_excluded: t2
            .excluded
            .into_iter()
            .map(|e| {
                (
                    e.r,
                    e.k,
                    e.g,
                    e.a,
                    e.lattices.iter().map(|s| expr(s)).collect(),
                )
            })
            .collect(),
        table3: t3.rows,
        table3_excluded: t3.excluded.into_iter().map(|e| (e.r, e.k, e.a)).collect(),
        table5: t5
            .rows
            .into_iter()
            .map(|r| Table5Row {
                m: r.m,
                r: r.r,
                n1: r.n1,
                n2: r.n2,
                k: r.k,
                g: r.g,
                s: vec![expr(&r.s)],
                t: vec![expr(&r.t)],
            })
            .collect(),
        table5_excluded_lattices: t5.excluded_lattices.iter().map(|s| expr(s)).collect(),
        table6,
        table7: t7.rows,
    }
}

#[derive(Deserialize)]
struct FiberCountDto {
    #[serde(rename = "type")]
    fiber_type: String,
    variant: String,
    count: u32,
}

#[derive(Deserialize)]
struct C1RowDto {
    g_sigma: Option<u32>,
    g_sigma2: Option<u32>,
    n: u32,
    k: u32,
    a: u32,
    fibers: Vec<FiberCountDto>,
}

#[derive(Deserialize)]
struct C1ScenarioDto {
    e_sigma: BisectionKind,
    e_sigma2: BisectionKind,
    rows: Vec<C1RowDto>,
}

#[derive(Deserialize)]
struct C1File {
    schema: u32,
    scenarios: Vec<C1ScenarioDto>,
}

/// The golden fiber-configuration tables, one entry per scenario.
pub fn golden_configurations() -> &'static Vec<(FibrationScenario, Vec<ConfigurationRow>)> {
    static GOLDEN: OnceLock<Vec<(FibrationScenario, Vec<ConfigurationRow>)>> = OnceLock::new();
    GOLDEN.get_or_init(|| {
        let file: C1File =
            serde_json::from_str(include_str!("../../data/golden/configurations.json")).unwrap();
        assert_eq!(file.schema, 1);
        file.scenarios
            .into_iter()
            .map(|s| {
                let scenario = FibrationScenario {
                    e_sigma: s.e_sigma,
                    e_sigma2: s.e_sigma2,
                };
                let rows = s
                    .rows
                    .into_iter()
                    .map(|r| ConfigurationRow {
                        g_sigma: r.g_sigma,
                        g_sigma2: r.g_sigma2,
                        n: r.n,
                        k: r.k,
                        a: r.a,
                        fibers: r
                            .fibers
                            .iter()
                            .map(|f| {
                                let fiber: KodairaFiber =
                                    f.fiber_type.parse().expect("golden fiber type");
                                let variant = match f.variant.as_str() {
                                    "a" => ActionVariant::A,
                                    "b" => ActionVariant::B,
                                    other => panic!("bad variant {other}"),
                                };
                                (FiberAction { fiber, variant }, f.count)
                            })
                            .collect(),
                    })
                    .collect();
                (scenario, rows)
            })
            .collect()
    })
}

/// Flattened golden configuration rows across all scenarios.
pub fn golden_configurations_flat() -> Vec<(FibrationScenario, ConfigurationRow)> {
    golden_configurations()
        .iter()
        .flat_map(|(s, rows)| rows.iter().map(move |r| (*s, r.clone())))
        .collect()
}
