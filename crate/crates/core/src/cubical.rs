//! Finite semicubical sets: a graded cell inventory with indexed face
//! maps, the face-identity validator, and the three constructors used by
//! the homology pipelines:
//!
//! * [`torus`] — cells are the cliques of the independence graph, both
//!   faces delete a tuple entry;
//! * [`state_complex_augmented`] — cells pair every state of a total
//!   (augmented) action with a clique;
//! * [`state_complex_reachable`] — cells pair a state with a clique whose
//!   product acts definedly on it.
//!
//! Cell enumeration order is fixed everywhere (state declaration order
//! major, clique lexicographic order minor), so boundary matrices are
//! reproducible bit for bit.

use std::collections::HashMap;

use thiserror::Error;

use crate::state::{AugmentedStateSpace, StateSpace};
use crate::trace::{Gen, TraceMonoid};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubicalError {
    #[error("degree {degree}: {labels} labels but {faces} face rows")]
    LabelFaceMismatch {
        degree: usize,
        labels: usize,
        faces: usize,
    },
    #[error("degree {degree}, cell {cell}: expected {degree} face pairs, got {got}")]
    FaceArityMismatch {
        degree: usize,
        cell: usize,
        got: usize,
    },
    #[error("degree {degree}, cell {cell}, face {index}: target {target} out of range")]
    FaceIndexOutOfRange {
        degree: usize,
        cell: usize,
        index: usize,
        target: usize,
    },
}

/// One failed semicubical identity
/// `∂_i ∘ ∂_j = ∂_(j-1) ∘ ∂_i` (`i < j`), with the two composite values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityViolation {
    pub degree: usize,
    pub cell: usize,
    pub i: usize,
    pub j: usize,
    pub alpha: u8,
    pub beta: u8,
    pub lhs: usize,
    pub rhs: usize,
}

/// Result of checking every semicubical identity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CubicalReport {
    pub violations: Vec<IdentityViolation>,
}

impl CubicalReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A finite semicubical set.
///
/// Degree `n` cells carry `n` face pairs; `faces[n][cell][i-1]` holds the
/// indices of the two faces at position `i` (front face `ε = 0` first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemicubicalSet {
    labels: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<[usize; 2]>>>,
}

impl SemicubicalSet {
    /// Assembles a semicubical set from explicit cell labels and face
    /// tables, checking shapes and index ranges. Face identities are the
    /// business of [`SemicubicalSet::validate`], not of construction.
    pub fn from_parts(
        labels: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<[usize; 2]>>>,
    ) -> Result<Self, CubicalError> {
        let mut labels = labels;
        let mut faces = faces;
        while labels.last().is_some_and(Vec::is_empty) {
            labels.pop();
        }
        faces.truncate(labels.len());
        for (n, cells) in labels.iter().enumerate() {
            let face_rows = faces.get(n).map_or(0, Vec::len);
            if cells.len() != face_rows {
                return Err(CubicalError::LabelFaceMismatch {
                    degree: n,
                    labels: cells.len(),
                    faces: face_rows,
                });
            }
            for (cell, pairs) in faces[n].iter().enumerate() {
                if pairs.len() != n {
                    return Err(CubicalError::FaceArityMismatch {
                        degree: n,
                        cell,
                        got: pairs.len(),
                    });
                }
                for (index, pair) in pairs.iter().enumerate() {
                    for &target in pair {
                        let below = labels.get(n.wrapping_sub(1)).map_or(0, Vec::len);
                        if n == 0 || target >= below {
                            return Err(CubicalError::FaceIndexOutOfRange {
                                degree: n,
                                cell,
                                index: index + 1,
                                target,
                            });
                        }
                    }
                }
            }
        }
        Ok(Self { labels, faces })
    }

    /// Number of graded degrees; degrees run `0..degree_count`.
    pub fn degree_count(&self) -> usize {
        self.labels.len()
    }

    /// Largest degree with cells, or `None` for the empty set.
    pub fn top_degree(&self) -> Option<usize> {
        self.labels.len().checked_sub(1)
    }

    pub fn cell_count(&self, n: usize) -> usize {
        self.labels.get(n).map_or(0, Vec::len)
    }

    pub fn cell_counts(&self) -> Vec<usize> {
        self.labels.iter().map(Vec::len).collect()
    }

    pub fn labels(&self, n: usize) -> &[String] {
        self.labels.get(n).map_or(&[], Vec::as_slice)
    }

    /// The `ε`-face at position `i` (`1 ≤ i ≤ n`) of a degree-`n` cell.
    pub fn face(&self, n: usize, cell: usize, i: usize, eps: u8) -> usize {
        self.faces[n][cell][i - 1][eps as usize]
    }

    /// Checks every semicubical identity
    /// `∂_i^α ∘ ∂_j^β = ∂_(j-1)^β ∘ ∂_i^α` for `1 ≤ i < j ≤ n`.
    pub fn validate(&self) -> CubicalReport {
        let mut violations = Vec::new();
        for n in 2..self.degree_count() {
            for cell in 0..self.cell_count(n) {
                for j in 2..=n {
                    for i in 1..j {
                        for alpha in 0..2u8 {
                            for beta in 0..2u8 {
                                let lhs = self.face(n - 1, self.face(n, cell, j, beta), i, alpha);
                                let rhs =
                                    self.face(n - 1, self.face(n, cell, i, alpha), j - 1, beta);
                                if lhs != rhs {
                                    violations.push(IdentityViolation {
                                        degree: n,
                                        cell,
                                        i,
                                        j,
                                        alpha,
                                        beta,
                                        lhs,
                                        rhs,
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        CubicalReport { violations }
    }

    /// Line-oriented dump of cells and face tables.
    pub fn dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        for n in 0..self.degree_count() {
            let _ = writeln!(out, "degree {}: {} cells", n, self.cell_count(n));
            for (cell, label) in self.labels(n).iter().enumerate() {
                let _ = write!(out, "  [{cell}] {label}");
                if n > 0 {
                    let pairs: Vec<String> = (1..=n)
                        .map(|i| {
                            format!(
                                "{i}:({},{})",
                                self.face(n, cell, i, 0),
                                self.face(n, cell, i, 1)
                            )
                        })
                        .collect();
                    let _ = write!(out, "  faces {}", pairs.join(" "));
                }
                let _ = writeln!(out);
            }
        }
        out
    }
}

fn tuple_label(monoid: &TraceMonoid, tuple: &[Gen]) -> String {
    let names: Vec<&str> = tuple.iter().map(|&g| monoid.alphabet().name(g)).collect();
    format!("({})", names.join(","))
}

fn cell_label(monoid: &TraceMonoid, state: &str, tuple: &[Gen]) -> String {
    let names: Vec<&str> = tuple.iter().map(|&g| monoid.alphabet().name(g)).collect();
    format!("({},{})", state, names.join(","))
}

/// The generalized torus of an independence graph: degree-`n` cells are
/// the `n`-cliques, and both faces at position `i` delete the `i`-th
/// generator of the tuple.
pub fn torus(monoid: &TraceMonoid) -> SemicubicalSet {
    let cliques = monoid.cliques();
    let mut labels = Vec::new();
    let mut faces = Vec::new();
    for n in 0..=cliques.max_degree() {
        let mut level_labels = Vec::new();
        let mut level_faces = Vec::new();
        for tuple in cliques.tuples(n) {
            level_labels.push(tuple_label(monoid, tuple));
            let mut pairs = Vec::with_capacity(n);
            for i in 0..n {
                let mut smaller = tuple.clone();
                smaller.remove(i);
                let target = cliques
                    .index_of(n - 1, &smaller)
                    .expect("subtuple of a clique is a clique");
                pairs.push([target, target]);
            }
            level_faces.push(pairs);
        }
        labels.push(level_labels);
        faces.push(level_faces);
    }
    SemicubicalSet { labels, faces }
}

/// The state complex of a total (augmented) action: degree-`n` cells are
/// all pairs of a state with an `n`-clique. The front face at position
/// `i` deletes the `i`-th generator; the back face also acts with it.
pub fn state_complex_augmented(aug: &AugmentedStateSpace) -> SemicubicalSet {
    let monoid = aug.monoid().clone();
    let cliques = monoid.cliques();
    let states = aug.space().state_names();
    let p: Vec<usize> = (0..=cliques.max_degree())
        .map(|n| cliques.count(n))
        .collect();

    let mut labels = Vec::new();
    let mut faces = Vec::new();
    for n in 0..=cliques.max_degree() {
        let mut level_labels = Vec::new();
        let mut level_faces = Vec::new();
        for (s, state_name) in states.iter().enumerate() {
            for tuple in cliques.tuples(n) {
                level_labels.push(if n == 0 {
                    state_name.clone()
                } else {
                    cell_label(&monoid, state_name, tuple)
                });
                let mut pairs = Vec::with_capacity(n);
                for i in 0..n {
                    let mut smaller = tuple.clone();
                    let g = smaller.remove(i);
                    let sub = cliques
                        .index_of(n - 1, &smaller)
                        .expect("subtuple of a clique is a clique");
                    let front = s * p[n - 1] + sub;
                    let back = aug.act_total(s, g) * p[n - 1] + sub;
                    pairs.push([front, back]);
                }
                level_faces.push(pairs);
            }
        }
        labels.push(level_labels);
        faces.push(level_faces);
    }
    SemicubicalSet { labels, faces }
}

/// The state complex of a partial action, restricted to cells all of
/// whose iterated faces exist: a state `s` with an `n`-clique is a cell
/// exactly when `s·a_i` is defined for every tuple entry and every face
/// pair is itself a cell one degree down.
///
/// For actions that pass [`StateSpace::validate_action`] this is the set
/// of pairs whose full tuple product acts definedly on the state, and
/// face closure is automatic.
pub fn state_complex_reachable(space: &StateSpace) -> SemicubicalSet {
    let monoid = space.monoid().clone();
    let cliques = monoid.cliques();

    let mut labels: Vec<Vec<String>> = Vec::new();
    let mut faces: Vec<Vec<Vec<[usize; 2]>>> = Vec::new();
    // (state, tuple index) -> cell index, per degree.
    let mut index: Vec<HashMap<(usize, usize), usize>> = Vec::new();

    for n in 0..=cliques.max_degree() {
        let mut level_labels = Vec::new();
        let mut level_faces = Vec::new();
        let mut level_index = HashMap::new();
        for s in 0..space.state_count() {
            'tuples: for (t, tuple) in cliques.tuples(n).iter().enumerate() {
                let mut pairs = Vec::with_capacity(n);
                for i in 0..n {
                    let mut smaller = tuple.clone();
                    let g = smaller.remove(i);
                    let sub = cliques
                        .index_of(n - 1, &smaller)
                        .expect("subtuple of a clique is a clique");
                    let Some(target) = space.act_gen(s, g) else {
                        continue 'tuples;
                    };
                    let Some(&front) = index[n - 1].get(&(s, sub)) else {
                        continue 'tuples;
                    };
                    let Some(&back) = index[n - 1].get(&(target, sub)) else {
                        continue 'tuples;
                    };
                    pairs.push([front, back]);
                }
                level_index.insert((s, t), level_labels.len());
                level_labels.push(if n == 0 {
                    space.state_name(s).to_string()
                } else {
                    cell_label(&monoid, space.state_name(s), tuple)
                });
                level_faces.push(pairs);
            }
        }
        if level_labels.is_empty() {
            break;
        }
        labels.push(level_labels);
        faces.push(level_faces);
        index.push(level_index);
    }
    SemicubicalSet { labels, faces }
}
