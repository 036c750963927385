//! Sparse integer matrices in canonical triplet form.
//!
//! Entries are `(row, column, value)` triplets sorted by position, with
//! no duplicates and no explicit zeros, so equal matrices have equal
//! representations. Generic over the exact scalar; the homology pipeline
//! instantiates arbitrary-precision integers.

use std::fmt;

use thiserror::Error;

use crate::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("entry ({row},{col}) out of range for a {rows}x{cols} matrix")]
    OutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("duplicate entry at ({0},{1})")]
    DuplicateEntry(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, T)>,
}

impl<T: Scalar> IntegerMatrix<T> {
    /// Builds a matrix from triplets: sorts them, drops zeros, and
    /// rejects out-of-range positions and duplicates.
    pub fn new(
        rows: usize,
        cols: usize,
        entries: Vec<(usize, usize, T)>,
    ) -> Result<Self, MatrixError> {
        let mut entries: Vec<(usize, usize, T)> = entries
            .into_iter()
            .filter(|(_, _, v)| !v.is_zero())
            .collect();
        for &(r, c, _) in &entries {
            if r >= rows || c >= cols {
                return Err(MatrixError::OutOfRange {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
        }
        entries.sort_by_key(|e| (e.0, e.1));
        for w in entries.windows(2) {
            if (w[0].0, w[0].1) == (w[1].0, w[1].1) {
                return Err(MatrixError::DuplicateEntry(w[0].0, w[0].1));
            }
        }
        Ok(Self {
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, T::one())).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Sorted triplets, zeros omitted.
    pub fn entries(&self) -> &[(usize, usize, T)] {
        &self.entries
    }

    pub fn get(&self, row: usize, col: usize) -> T {
        self.entries
            .binary_search_by(|(r, c, _)| (*r, *c).cmp(&(row, col)))
            .map(|i| self.entries[i].2.clone())
            .unwrap_or_else(|_| T::zero())
    }

    pub fn from_dense(dense: &[Vec<T>]) -> Self {
        let rows = dense.len();
        let cols = dense.first().map_or(0, Vec::len);
        let entries = dense
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(c, v)| (r, c, v.clone()))
            })
            .collect();
        Self {
            rows,
            cols,
            entries,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<T>> {
        let mut dense = vec![vec![T::zero(); self.cols]; self.rows];
        for (r, c, v) in &self.entries {
            dense[*r][*c] = v.clone();
        }
        dense
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matrix product");
        let mut rhs_rows: Vec<Vec<(usize, &T)>> = vec![Vec::new(); rhs.rows];
        for (r, c, v) in &rhs.entries {
            rhs_rows[*r].push((*c, v));
        }
        let mut acc: std::collections::BTreeMap<(usize, usize), T> = Default::default();
        for (r, k, v) in &self.entries {
            for (c, w) in &rhs_rows[*k] {
                let cell = acc.entry((*r, *c)).or_insert_with(T::zero);
                *cell = cell.clone() + v.clone() * (*w).clone();
            }
        }
        let entries = acc
            .into_iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|((r, c), v)| (r, c, v))
            .collect();
        Self {
            rows: self.rows,
            cols: rhs.cols,
            entries,
        }
    }

    /// Aligned grid rendering, one row per line.
    pub fn grid_string(&self) -> String {
        self.grid_string_labeled::<&str>(&[], &[])
    }

    /// Aligned grid with optional row and column labels.
    pub fn grid_string_labeled<S: AsRef<str>>(&self, row_labels: &[S], col_labels: &[S]) -> String {
        let dense = self.to_dense();
        let cells: Vec<Vec<String>> = dense
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect())
            .collect();
        let row_width = row_labels
            .iter()
            .map(|l| l.as_ref().len())
            .max()
            .unwrap_or(0);
        let mut widths: Vec<usize> = (0..self.cols)
            .map(|c| cells.iter().map(|row| row[c].len()).max().unwrap_or(1))
            .collect();
        for (c, label) in col_labels.iter().enumerate().take(self.cols) {
            widths[c] = widths[c].max(label.as_ref().len());
        }

        let mut out = String::new();
        if !col_labels.is_empty() {
            let mut header = " ".repeat(row_width);
            for (c, w) in widths.iter().enumerate() {
                let label = col_labels.get(c).map_or("", |l| l.as_ref());
                header.push_str(&format!("  {label:>w$}", w = w));
            }
            out.push_str(header.trim_end());
            out.push('\n');
        }
        for (r, row) in cells.iter().enumerate() {
            let mut line = if row_width > 0 {
                let label = row_labels.get(r).map_or("", |l| l.as_ref());
                format!("{label:<row_width$}")
            } else {
                String::new()
            };
            for (c, w) in widths.iter().enumerate() {
                line.push_str(&format!("  {:>w$}", row[c], w = w));
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Machine-readable triplet rendering: a `rows cols nnz` header line,
    /// then one `row col value` line per entry.
    pub fn triplet_string(&self) -> String {
        use std::fmt::Write;
        let mut out = format!("{} {} {}\n", self.rows, self.cols, self.nnz());
        for (r, c, v) in &self.entries {
            let _ = writeln!(out, "{r} {c} {v}");
        }
        out
    }
}

impl<T: Scalar> fmt::Display for IntegerMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.grid_string())
    }
}
