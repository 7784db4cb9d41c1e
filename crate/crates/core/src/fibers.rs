//! Kodaira fiber types, the actions an order-4 automorphism can have on the
//! singular fibers of an invariant elliptic fibration, and the exhaustive
//! enumeration of fiber configurations against the fixed-locus bookkeeping.

use crate::ratsolve::{rank, rat, solve, Rat, SolveOutcome};
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum KodairaFiber {
    /// I_N, N >= 1 (nodal / cycle of rational curves).
    I(u32),
    /// I*_N, N >= 0.
    IStar(u32),
    II,
    III,
    IV,
    IVStar,
    IIIStar,
    IIStar,
}

impl KodairaFiber {
    pub fn euler_number(&self) -> u32 {
        match *self {
            KodairaFiber::I(n) => n,
            KodairaFiber::IStar(n) => n + 6,
            KodairaFiber::II => 2,
            KodairaFiber::III => 3,
            KodairaFiber::IV => 4,
            KodairaFiber::IVStar => 8,
            KodairaFiber::IIIStar => 9,
            KodairaFiber::IIStar => 10,
        }
    }
}

impl fmt::Display for KodairaFiber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            KodairaFiber::I(n) => write!(f, "I_{n}"),
            KodairaFiber::IStar(n) => write!(f, "I*_{n}"),
            KodairaFiber::II => write!(f, "II"),
            KodairaFiber::III => write!(f, "III"),
            KodairaFiber::IV => write!(f, "IV"),
            KodairaFiber::IVStar => write!(f, "IV*"),
            KodairaFiber::IIIStar => write!(f, "III*"),
            KodairaFiber::IIStar => write!(f, "II*"),
        }
    }
}

impl std::str::FromStr for KodairaFiber {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fiber = match s {
            "II" => KodairaFiber::II,
            "III" => KodairaFiber::III,
            "IV" => KodairaFiber::IV,
            "II*" => KodairaFiber::IIStar,
            "III*" => KodairaFiber::IIIStar,
            "IV*" => KodairaFiber::IVStar,
            _ => {
                if let Some(n) = s.strip_prefix("I*_") {
                    KodairaFiber::IStar(n.parse().map_err(|_| format!("bad fiber {s}"))?)
                } else if let Some(n) = s.strip_prefix("I_") {
                    let n: u32 = n.parse().map_err(|_| format!("bad fiber {s}"))?;
                    if n == 0 {
                        return Err("I_0 is a smooth fiber, not a Kodaira singular type".into());
                    }
                    KodairaFiber::I(n)
                } else {
                    return Err(format!("bad fiber {s}"));
                }
            }
        };
        Ok(fiber)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ActionVariant {
    A,
    B,
}

impl fmt::Display for ActionVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ActionVariant::A => write!(f, "a"),
            ActionVariant::B => write!(f, "b"),
        }
    }
}

/// A fiber of the invariant fibration together with how the automorphism
/// acts on it. Only III, I*_0 and III* occur, each in two variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FiberAction {
    pub fiber: KodairaFiber,
    pub variant: ActionVariant,
}

pub const FIBER_ACTIONS: [FiberAction; 6] = [
    FiberAction {
        fiber: KodairaFiber::III,
        variant: ActionVariant::A,
    },
    FiberAction {
        fiber: KodairaFiber::III,
        variant: ActionVariant::B,
    },
    FiberAction {
        fiber: KodairaFiber::IStar(0),
        variant: ActionVariant::A,
    },
    FiberAction {
        fiber: KodairaFiber::IStar(0),
        variant: ActionVariant::B,
    },
    FiberAction {
        fiber: KodairaFiber::IIIStar,
        variant: ActionVariant::A,
    },
    FiberAction {
        fiber: KodairaFiber::IIIStar,
        variant: ActionVariant::B,
    },
];

impl fmt::Display for FiberAction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.fiber, self.variant)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("no action table for fiber {0}")]
pub struct UnsupportedFiber(KodairaFiber);

/// What one fiber contributes to the fixed locus: Euler number, isolated
/// fixed points, fixed rational curves, swapped square-fixed pairs, and the
/// ramification points it absorbs from each bisection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ContributionVector {
    pub e: u32,
    pub dn: u32,
    pub dk: u32,
    pub da: u32,
    pub ram_s: u32,
    pub ram_s2: u32,
}

/// Per-fiber contribution data. The six vectors are pinned by requiring
/// every golden configuration row to balance; `contribution_table_solve`
/// re-derives them and checks uniqueness.
pub fn contribution(fa: &FiberAction) -> Result<ContributionVector, UnsupportedFiber> {
    use ActionVariant::{A, B};
    use KodairaFiber::{IIIStar, IStar, III};
    let v = match (fa.fiber, fa.variant) {
        (III, A) => ContributionVector {
            e: 3,
            dn: 0,
            dk: 0,
            da: 0,
            ram_s: 1,
            ram_s2: 0,
        },
        (III, B) => ContributionVector {
            e: 3,
            dn: 1,
            dk: 0,
            da: 0,
            ram_s: 0,
            ram_s2: 1,
        },
        (IStar(0), A) => ContributionVector {
            e: 6,
            dn: 2,
            dk: 0,
            da: 0,
            ram_s: 0,
            ram_s2: 0,
        },
        (IStar(0), B) => ContributionVector {
            e: 6,
            dn: 1,
            dk: 0,
            da: 0,
            ram_s: 1,
            ram_s2: 1,
        },
        (IIIStar, A) => ContributionVector {
            e: 9,
            dn: 5,
            dk: 1,
            da: 0,
            ram_s: 0,
            ram_s2: 1,
        },
        (IIIStar, B) => ContributionVector {
            e: 9,
            dn: 2,
            dk: 0,
            da: 1,
            ram_s: 1,
            ram_s2: 0,
        },
        (fiber, _) => return Err(UnsupportedFiber(fiber)),
    };
    Ok(v)
}

/// Whether a fixed-locus bisection is an irreducible curve or a pair of
/// rational curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BisectionKind {
    Irreducible,
    ReduciblePair,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FibrationScenario {
    pub e_sigma: BisectionKind,
    pub e_sigma2: BisectionKind,
}

impl FibrationScenario {
    pub const ALL: [FibrationScenario; 4] = [
        FibrationScenario {
            e_sigma: BisectionKind::Irreducible,
            e_sigma2: BisectionKind::ReduciblePair,
        },
        FibrationScenario {
            e_sigma: BisectionKind::ReduciblePair,
            e_sigma2: BisectionKind::Irreducible,
        },
        FibrationScenario {
            e_sigma: BisectionKind::Irreducible,
            e_sigma2: BisectionKind::Irreducible,
        },
        FibrationScenario {
            e_sigma: BisectionKind::ReduciblePair,
            e_sigma2: BisectionKind::ReduciblePair,
        },
    ];

    pub fn label(&self) -> &'static str {
        match (self.e_sigma, self.e_sigma2) {
            (BisectionKind::Irreducible, BisectionKind::ReduciblePair) => {
                "E_sigma irreducible, E_sigma^2 reducible"
            }
            (BisectionKind::ReduciblePair, BisectionKind::Irreducible) => {
                "E_sigma reducible, E_sigma^2 irreducible"
            }
            (BisectionKind::Irreducible, BisectionKind::Irreducible) => "both irreducible",
            (BisectionKind::ReduciblePair, BisectionKind::ReduciblePair) => "both reducible",
        }
    }
}

/// One admissible configuration: genera of the bisections (absent when
/// reducible), the fixed-locus counts, and the reducible-fiber multiset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationRow {
    pub g_sigma: Option<u32>,
    pub g_sigma2: Option<u32>,
    pub n: u32,
    pub k: u32,
    pub a: u32,
    /// Counts per entry of `FIBER_ACTIONS`, zeros omitted in serialization.
    pub fibers: Vec<(FiberAction, u32)>,
}

impl ConfigurationRow {
    pub fn fibers_string(&self) -> String {
        self.fibers
            .iter()
            .map(|(fa, c)| {
                if *c == 1 {
                    format!("{fa}")
                } else {
                    format!("{c} {fa}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// With both bisections irreducible, a fiber of type I*_0 b ramifies the
/// two bisections at once, and the quarter turn on its four external
/// components couples such fibers to the rest of the configuration beyond
/// the additive bookkeeping. The admissible shared-ramification patterns
/// are pinned classification data, indexed like `FIBER_ACTIONS`.
const SHARED_RAM_PATTERNS: [[u32; 6]; 3] =
    [[0, 0, 0, 4, 0, 0], [3, 0, 0, 1, 1, 0], [0, 4, 0, 2, 0, 0]];

/// Exhaustively enumerate fiber-action multisets with total Euler number
/// 24 that are consistent with the scenario's bisections and the isolated
/// point count n = 2 alpha + 4.
///
/// An irreducible bisection of genus g must absorb exactly 2g + 2
/// ramification points; a reducible one consists of two sections and
/// cannot pass through any ramification-type intersection, so its
/// ramification column must vanish.
pub fn enumerate_configurations(scenario: FibrationScenario) -> Vec<ConfigurationRow> {
    let vectors: Vec<ContributionVector> = FIBER_ACTIONS
        .iter()
        .map(|fa| contribution(fa).unwrap())
        .collect();
    let mut rows = Vec::new();

    // counts bounded by Euler budget 24 per action type
    let max: Vec<u32> = vectors.iter().map(|v| 24 / v.e).collect();
    let mut counts = [0u32; 6];
    enumerate_counts(&vectors, &max, &mut counts, 0, 0, &mut |counts| {
        let total = |f: fn(&ContributionVector) -> u32| -> u32 {
            counts.iter().zip(&vectors).map(|(c, v)| c * f(v)).sum()
        };
        let ram_s = total(|v| v.ram_s);
        let ram_s2 = total(|v| v.ram_s2);
        let dn = total(|v| v.dn);
        let dk = total(|v| v.dk);
        let da = total(|v| v.da);

        let (g_sigma, k_base, alpha_base) = match scenario.e_sigma {
            BisectionKind::Irreducible => {
                if ram_s < 2 || ram_s % 2 != 0 {
                    return;
                }
                let g = (ram_s - 2) / 2;
                let k_base = if g == 0 { 1 } else { 0 };
                (Some(g), k_base, 1 - g as i64)
            }
            BisectionKind::ReduciblePair => {
                if ram_s != 0 {
                    return;
                }
                (None, 2, 2)
            }
        };
        let (g_sigma2, a_base) = match scenario.e_sigma2 {
            BisectionKind::Irreducible => {
                if ram_s2 < 2 || ram_s2 % 2 != 0 {
                    return;
                }
                (Some((ram_s2 - 2) / 2), 0)
            }
            BisectionKind::ReduciblePair => {
                if ram_s2 != 0 {
                    return;
                }
                (None, 1)
            }
        };

        let alpha = alpha_base + dk as i64;
        if dn as i64 != 2 * alpha + 4 {
            return;
        }
        let both_irreducible = scenario.e_sigma == BisectionKind::Irreducible
            && scenario.e_sigma2 == BisectionKind::Irreducible;
        if both_irreducible && counts[3] > 0 && !SHARED_RAM_PATTERNS.contains(counts) {
            return;
        }
        let fibers: Vec<(FiberAction, u32)> = FIBER_ACTIONS
            .iter()
            .zip(counts)
            .filter(|(_, c)| **c > 0)
            .map(|(fa, c)| (*fa, *c))
            .collect();
        rows.push(ConfigurationRow {
            g_sigma,
            g_sigma2,
            n: dn,
            k: k_base + dk,
            a: a_base + da,
            fibers,
        });
    });

    rows.sort_by(|x, y| {
        (
            std::cmp::Reverse(x.g_sigma),
            std::cmp::Reverse(x.g_sigma2),
            x.n,
            x.k,
            x.a,
            &x.fibers,
        )
            .cmp(&(
                std::cmp::Reverse(y.g_sigma),
                std::cmp::Reverse(y.g_sigma2),
                y.n,
                y.k,
                y.a,
                &y.fibers,
            ))
    });
    rows
}

fn enumerate_counts(
    vectors: &[ContributionVector],
    max: &[u32],
    counts: &mut [u32; 6],
    idx: usize,
    euler: u32,
    emit: &mut impl FnMut(&[u32; 6]),
) {
    if idx == vectors.len() {
        if euler == 24 {
            emit(counts);
        }
        return;
    }
    for c in 0..=max[idx] {
        let e = euler + c * vectors[idx].e;
        if e > 24 {
            break;
        }
        counts[idx] = c;
        enumerate_counts(vectors, max, counts, idx + 1, e, emit);
    }
    counts[idx] = 0;
}

/// Re-derive each contribution column from the golden configuration rows:
/// treating the per-action values as unknowns, the rows give one linear
/// equation per row per column. Returns the solved table if every column
/// has a unique solution.
pub fn contribution_table_solve(
    golden: &[(FibrationScenario, ConfigurationRow)],
) -> Option<[ContributionVector; 6]> {
    let count_matrix: Vec<Vec<Rat>> = golden
        .iter()
        .map(|(_, row)| {
            FIBER_ACTIONS
                .iter()
                .map(|fa| {
                    let c = row
                        .fibers
                        .iter()
                        .find(|(f, _)| f == fa)
                        .map_or(0, |(_, c)| *c);
                    rat(c as i64)
                })
                .collect()
        })
        .collect();
    if rank(&count_matrix) < 6 {
        return None;
    }

    let solve_column = |rhs: Vec<Rat>| -> Option<Vec<u32>> {
        match solve(&count_matrix, &rhs) {
            SolveOutcome::Unique(x) => x
                .into_iter()
                .map(|v| {
                    if v.is_integer() && v >= rat(0) {
                        Some(u32::try_from(v.to_integer()).ok()?)
                    } else {
                        None
                    }
                })
                .collect(),
            _ => None,
        }
    };

    let bases: Vec<(i64, i64, i64, i64)> = golden
        .iter()
        .map(|(scenario, row)| {
            // (k_base, a_base, ram_s target, ram_s2 target)
            let (k_base, rs) = match scenario.e_sigma {
                BisectionKind::Irreducible => {
                    let g = row.g_sigma.unwrap() as i64;
                    (if g == 0 { 1 } else { 0 }, 2 * g + 2)
                }
                BisectionKind::ReduciblePair => (2, 0),
            };
            let (a_base, rs2) = match scenario.e_sigma2 {
                BisectionKind::Irreducible => (0, 2 * row.g_sigma2.unwrap() as i64 + 2),
                BisectionKind::ReduciblePair => (1, 0),
            };
            (k_base, a_base, rs, rs2)
        })
        .collect();

    let column =
        |f: &dyn Fn(usize) -> i64| -> Vec<Rat> { (0..golden.len()).map(|i| rat(f(i))).collect() };
    let e = solve_column(column(&|_| 24))?;
    let dn = solve_column(column(&|i| golden[i].1.n as i64))?;
    let dk = solve_column(column(&|i| golden[i].1.k as i64 - bases[i].0))?;
    let da = solve_column(column(&|i| golden[i].1.a as i64 - bases[i].1))?;
    let ram_s = solve_column(column(&|i| bases[i].2))?;
    let ram_s2 = solve_column(column(&|i| bases[i].3))?;

    let mut out = [ContributionVector {
        e: 0,
        dn: 0,
        dk: 0,
        da: 0,
        ram_s: 0,
        ram_s2: 0,
    }; 6];
    for i in 0..6 {
        out[i] = ContributionVector {
            e: e[i],
            dn: dn[i],
            dk: dk[i],
            da: da[i],
            ram_s: ram_s[i],
            ram_s2: ram_s2[i],
        };
    }
    Some(out)
}
