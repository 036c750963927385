//! The analysis report: one fixed schema for machine output, plus the
//! human-readable rendering.
//!
//! Reports are deterministic byte for byte for a fixed input and flag
//! set: every collection is ordered and serialization goes through one
//! serializer configuration. Timing is intentionally not part of the
//! report; the CLI prints it to stderr.

use serde::{Deserialize, Serialize};

use trace_homology::{IntChainComplex, SemicubicalSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyEntry {
    pub betti: usize,
    /// Torsion coefficients in divisibility order, as decimal strings.
    pub torsion: Vec<String>,
}

impl HomologyEntry {
    pub fn pretty(&self) -> String {
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDump {
    pub degree: usize,
    pub rows: usize,
    pub cols: usize,
    pub row_basis: Vec<String>,
    pub col_basis: Vec<String>,
    /// Triplets `[row, col, value]` with decimal string values.
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub kind: String,
    /// Clique counts of the independence graph, degree 0 upward.
    pub p: Vec<usize>,
    /// Cell counts of the constructed complex, degree 0 upward.
    pub cells: Vec<usize>,
    /// Homology groups, degree 0 through the top degree of the complex.
    pub homology: Vec<HomologyEntry>,
    pub diagnostics: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<MatrixDump>>,
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering; matrix dumps follow in both aligned-grid
    /// and triplet form when present.
    pub fn to_text(&self, complex: &SemicubicalSet, chain: &IntChainComplex) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let _ = writeln!(out, "kind: {}", self.kind);
        let _ = writeln!(out, "p: {:?}", self.p);
        let _ = writeln!(out, "cells: {:?}", self.cells);
        for (n, h) in self.homology.iter().enumerate() {
            let _ = writeln!(out, "H_{n} = {}", h.pretty());
        }
        if !self.diagnostics.is_empty() {
            let _ = writeln!(out, "diagnostics:");
            for d in &self.diagnostics {
                let _ = writeln!(out, "  - {d}");
            }
        }
        if let Some(dumps) = &self.matrices {
            for dump in dumps {
                let n = dump.degree;
                let _ = writeln!(out, "d_{n} ({}x{}):", dump.rows, dump.cols);
                if let Some(d) = chain.differential(n) {
                    out.push_str(&d.grid_string_labeled(complex.labels(n - 1), complex.labels(n)));
                    let _ = writeln!(out, "d_{n} triplets:");
                    out.push_str(&d.triplet_string());
                }
            }
        }
        out
    }
}
