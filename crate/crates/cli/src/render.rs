//! Table rendering in markdown, CSV and JSON.

use k3fix4_core::expr::LatticeExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Md,
    Csv,
    Json,
}

/// A rendered table: headers plus stringly rows, format-agnostic.
pub struct Grid {
    pub title: String,
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Grid {
    pub fn to_md(&self, out: &mut String) {
        if !self.title.is_empty() {
            out.push_str(&format!("## {}\n\n", self.title));
        }
        out.push_str(&format!("| {} |\n", self.headers.join(" | ")));
        out.push_str(&format!(
            "|{}\n",
            self.headers.iter().map(|_| " --- |").collect::<String>()
        ));
        for row in &self.rows {
            out.push_str(&format!("| {} |\n", row.join(" | ")));
        }
        out.push('\n');
    }

    pub fn to_csv(&self, out: &mut String) {
        out.push_str(&self.headers.join(","));
        out.push('\n');
        for row in &self.rows {
            let quoted: Vec<String> = row
                .iter()
                .map(|cell| {
                    if cell.contains(',') || cell.contains('"') {
                        format!("\"{}\"", cell.replace('"', "\"\""))
                    } else {
                        cell.clone()
                    }
                })
                .collect();
            out.push_str(&quoted.join(","));
            out.push('\n');
        }
    }
}

/// Lattice name for display: direct-sum circles unless ascii is requested.
pub fn lattice_name(expr: &LatticeExpr, ascii: bool) -> String {
    let plain = expr.to_string();
    if ascii {
        plain
    } else {
        plain.replace('+', " \u{2295} ")
    }
}

pub fn lattice_names(exprs: &[LatticeExpr], ascii: bool) -> String {
    exprs
        .iter()
        .map(|e| lattice_name(e, ascii))
        .collect::<Vec<_>>()
        .join(", ")
}
