//! Smith normal form of integer matrices by exact elementary
//! transformations.
//!
//! The pivot rule is deterministic: take a nonzero entry of minimal
//! absolute value (ties broken by lowest row, then lowest column),
//! alternate row and column reductions until the pivot divides its row
//! and column, force divisibility over the remaining submatrix, then
//! recurse on it. Optionally the accumulated unimodular transforms are
//! returned, with `left · A · right = D`.

use crate::matrix::IntegerMatrix;
use crate::Scalar;

/// Unimodular transforms of a Smith reduction: `left · A · right` is the
/// diagonal form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfTransforms<T> {
    pub left: IntegerMatrix<T>,
    pub right: IntegerMatrix<T>,
}

/// The invariant factors of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult<T> {
    /// Nonzero diagonal entries `d_1 | d_2 | … | d_r`, all positive.
    pub diagonal: Vec<T>,
    /// The rank of the matrix; equals `diagonal.len()`.
    pub rank: usize,
    pub transforms: Option<SnfTransforms<T>>,
}

impl<T: Scalar> SnfResult<T> {
    /// The full diagonal matrix of the reduction in the given shape.
    pub fn diagonal_matrix(&self, rows: usize, cols: usize) -> IntegerMatrix<T> {
        let entries = self
            .diagonal
            .iter()
            .enumerate()
            .map(|(i, d)| (i, i, d.clone()))
            .collect();
        IntegerMatrix::new(rows, cols, entries).expect("diagonal fits the shape")
    }
}

struct Reduction<T> {
    m: Vec<Vec<T>>,
    rows: usize,
    cols: usize,
    /// Row transform accumulator, if transforms were requested.
    left: Option<Vec<Vec<T>>>,
    right: Option<Vec<Vec<T>>>,
}

impl<T: Scalar> Reduction<T> {
    fn new(a: &IntegerMatrix<T>, want_transforms: bool) -> Self {
        let rows = a.rows();
        let cols = a.cols();
        let dense_identity = |n: usize| -> Vec<Vec<T>> {
            (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| if i == j { T::one() } else { T::zero() })
                        .collect()
                })
                .collect()
        };
        Self {
            m: a.to_dense(),
            rows,
            cols,
            left: want_transforms.then(|| dense_identity(rows)),
            right: want_transforms.then(|| dense_identity(cols)),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            self.m.swap(a, b);
            if let Some(u) = &mut self.left {
                u.swap(a, b);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for row in &mut self.m {
                row.swap(a, b);
            }
            if let Some(v) = &mut self.right {
                for row in v.iter_mut() {
                    row.swap(a, b);
                }
            }
        }
    }

    /// `row[target] -= q * row[source]`
    fn row_sub(&mut self, target: usize, source: usize, q: &T) {
        for j in 0..self.cols {
            let delta = q.clone() * self.m[source][j].clone();
            self.m[target][j] = self.m[target][j].clone() - delta;
        }
        if let Some(u) = &mut self.left {
            let source_row = u[source].clone();
            for (cell, s) in u[target].iter_mut().zip(source_row) {
                *cell = cell.clone() - q.clone() * s;
            }
        }
    }

    /// `col[target] -= q * col[source]`
    fn col_sub(&mut self, target: usize, source: usize, q: &T) {
        for i in 0..self.rows {
            let delta = q.clone() * self.m[i][source].clone();
            self.m[i][target] = self.m[i][target].clone() - delta;
        }
        if let Some(v) = &mut self.right {
            for row in v.iter_mut() {
                let delta = q.clone() * row[source].clone();
                row[target] = row[target].clone() - delta;
            }
        }
    }

    /// `row[target] += row[source]`
    fn row_add(&mut self, target: usize, source: usize) {
        for j in 0..self.cols {
            self.m[target][j] = self.m[target][j].clone() + self.m[source][j].clone();
        }
        if let Some(u) = &mut self.left {
            let source_row = u[source].clone();
            for (cell, s) in u[target].iter_mut().zip(source_row) {
                *cell = cell.clone() + s;
            }
        }
    }

    fn negate_row(&mut self, target: usize) {
        for j in 0..self.cols {
            self.m[target][j] = -self.m[target][j].clone();
        }
        if let Some(u) = &mut self.left {
            for cell in u[target].iter_mut() {
                *cell = -cell.clone();
            }
        }
    }

    /// Minimal-|value| nonzero entry of the trailing submatrix, ties by
    /// lowest row then lowest column.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(T, usize, usize)> = None;
        for i in t..self.rows {
            for j in t..self.cols {
                if self.m[i][j].is_zero() {
                    continue;
                }
                let a = self.m[i][j].abs();
                if best.as_ref().is_none_or(|(b, _, _)| a < *b) {
                    best = Some((a, i, j));
                }
            }
        }
        best.map(|(_, i, j)| (i, j))
    }

    fn reduce(&mut self) -> Vec<T> {
        let mut diagonal = Vec::new();
        let limit = self.rows.min(self.cols);
        for t in 0..limit {
            let Some((pr, pc)) = self.pivot(t) else {
                break;
            };
            self.swap_rows(t, pr);
            self.swap_cols(t, pc);
            loop {
                // Clear column t; truncated quotients leave remainders
                // strictly smaller than the pivot.
                let mut dirty = false;
                for i in t + 1..self.rows {
                    if self.m[i][t].is_zero() {
                        continue;
                    }
                    let q = self.m[i][t].clone() / self.m[t][t].clone();
                    if !q.is_zero() {
                        self.row_sub(i, t, &q);
                    }
                    if !self.m[i][t].is_zero() {
                        dirty = true;
                    }
                }
                if !dirty {
                    for j in t + 1..self.cols {
                        if self.m[t][j].is_zero() {
                            continue;
                        }
                        let q = self.m[t][j].clone() / self.m[t][t].clone();
                        if !q.is_zero() {
                            self.col_sub(j, t, &q);
                        }
                        if !self.m[t][j].is_zero() {
                            dirty = true;
                        }
                    }
                }
                if !dirty {
                    // Pivot clears its row and column; force it to divide
                    // the rest of the submatrix.
                    let nondivisible = (t + 1..self.rows)
                        .flat_map(|i| (t + 1..self.cols).map(move |j| (i, j)))
                        .find(|&(i, j)| {
                            !self.m[i][j].is_zero()
                                && !(self.m[i][j].clone() % self.m[t][t].clone()).is_zero()
                        });
                    match nondivisible {
                        Some((i, _)) => self.row_add(t, i),
                        None => break,
                    }
                }
                let (pr, pc) = self.pivot(t).expect("pivot persists during reduction");
                self.swap_rows(t, pr);
                self.swap_cols(t, pc);
            }
            if self.m[t][t].is_negative() {
                self.negate_row(t);
            }
            diagonal.push(self.m[t][t].clone());
        }
        diagonal
    }
}

/// Computes the Smith normal form of `a`.
///
/// Exact arithmetic throughout; the result is deterministic for a given
/// input. With `want_transforms`, the returned unimodular matrices
/// satisfy `left · a · right = diagonal`.
pub fn smith_normal_form<T: Scalar>(a: &IntegerMatrix<T>, want_transforms: bool) -> SnfResult<T> {
    let mut reduction = Reduction::new(a, want_transforms);
    let diagonal = reduction.reduce();
    let rank = diagonal.len();
    let transforms = reduction.left.map(|left| SnfTransforms {
        left: IntegerMatrix::from_dense(&left),
        right: IntegerMatrix::from_dense(&reduction.right.expect("paired with left")),
    });
    SnfResult {
        diagonal,
        rank,
        transforms,
    }
}
