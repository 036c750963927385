//! Chain complexes of free abelian groups on semicubical cells, and the
//! homology groups they induce.
//!
//! The differential of a degree-`n` cell alternates its back and front
//! faces: position `i` contributes `(-1)^i` times the back face minus the
//! front face. Coinciding faces cancel, so tori get the zero
//! differential. Betti ranks come from rank arithmetic on Smith forms;
//! torsion coefficients are the invariant factors above 1 of the next
//! differential.

use std::collections::BTreeMap;
use std::fmt;

use crate::cubical::SemicubicalSet;
use crate::matrix::IntegerMatrix;
use crate::snf::{smith_normal_form, SnfResult};
use crate::Scalar;

/// A finitely generated abelian group in canonical form:
/// `Z^betti ⊕ Z/t_1 ⊕ … ⊕ Z/t_k` with `t_1 | t_2 | … `, every `t_i > 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup<T> {
    pub betti: usize,
    pub torsion: Vec<T>,
}

impl<T> HomologyGroup<T> {
    pub fn zero() -> Self {
        Self {
            betti: 0,
            torsion: Vec::new(),
        }
    }

    pub fn free(betti: usize) -> Self {
        Self {
            betti,
            torsion: Vec::new(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl<T: fmt::Display> fmt::Display for HomologyGroup<T> {
    /// `Z^b + Z/t1 + Z/t2`, with `Z` for rank one and `0` for the
    /// trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
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
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// A bounded chain complex of finitely generated free abelian groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplex<T> {
    ranks: Vec<usize>,
    /// `diffs[k]` is `d_(k+1): C_(k+1) -> C_k`.
    diffs: Vec<IntegerMatrix<T>>,
}

impl<T: Scalar> ChainComplex<T> {
    /// Largest degree with a chain group, or `None` for the empty complex.
    pub fn top_degree(&self) -> Option<usize> {
        self.ranks.len().checked_sub(1)
    }

    /// Rank of `C_n`; zero beyond the top degree.
    pub fn rank(&self, n: usize) -> usize {
        self.ranks.get(n).copied().unwrap_or(0)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// The differential `d_n: C_n -> C_(n-1)` for `1 <= n <= top degree`.
    pub fn differential(&self, n: usize) -> Option<&IntegerMatrix<T>> {
        if n == 0 {
            return None;
        }
        self.diffs.get(n - 1)
    }

    /// Checks `d_n ∘ d_(n+1) = 0` for every degree.
    pub fn boundary_squares_to_zero(&self) -> bool {
        self.diffs
            .windows(2)
            .all(|pair| pair[0].mul(&pair[1]).is_zero())
    }

    /// The homology group at one degree.
    pub fn homology(&self, n: usize) -> HomologyGroup<T> {
        if n >= self.ranks.len() {
            return HomologyGroup::zero();
        }
        let snf_at = |k: usize| self.differential(k).map(|d| smith_normal_form(d, false));
        self.homology_from_snf(n, &snf_at(n), &snf_at(n + 1))
    }

    /// Homology in every degree `0..=top`, sharing one Smith reduction
    /// per differential.
    pub fn homology_all(&self) -> Vec<HomologyGroup<T>> {
        let snfs: Vec<SnfResult<T>> = self
            .diffs
            .iter()
            .map(|d| smith_normal_form(d, false))
            .collect();
        (0..self.ranks.len())
            .map(|n| {
                let below = n.checked_sub(1).and_then(|k| snfs.get(k).cloned());
                let above = snfs.get(n).cloned();
                self.homology_from_snf(n, &below, &above)
            })
            .collect()
    }

    fn homology_from_snf(
        &self,
        n: usize,
        snf_dn: &Option<SnfResult<T>>,
        snf_dn1: &Option<SnfResult<T>>,
    ) -> HomologyGroup<T> {
        let rank_dn = snf_dn.as_ref().map_or(0, |s| s.rank);
        let rank_dn1 = snf_dn1.as_ref().map_or(0, |s| s.rank);
        let betti = self
            .rank(n)
            .checked_sub(rank_dn + rank_dn1)
            .expect("boundary ranks bounded by chain rank");
        let torsion = snf_dn1.as_ref().map_or_else(Vec::new, |s| {
            s.diagonal
                .iter()
                .filter(|d| **d > T::one())
                .cloned()
                .collect()
        });
        HomologyGroup { betti, torsion }
    }
}

/// The cubical chain complex of a semicubical set: `C_n` is free on the
/// degree-`n` cells and the differential alternates back minus front
/// faces.
pub fn chain_complex<T: Scalar>(x: &SemicubicalSet) -> ChainComplex<T> {
    let ranks = x.cell_counts();
    let mut diffs = Vec::new();
    for n in 1..x.degree_count() {
        let rows = x.cell_count(n - 1);
        let cols = x.cell_count(n);
        let mut entries: Vec<(usize, usize, T)> = Vec::new();
        for cell in 0..cols {
            let mut column: BTreeMap<usize, T> = BTreeMap::new();
            for i in 1..=n {
                let sign = if i % 2 == 1 { -T::one() } else { T::one() };
                let back = x.face(n, cell, i, 1);
                let front = x.face(n, cell, i, 0);
                let e = column.entry(back).or_insert_with(T::zero);
                *e = e.clone() + sign.clone();
                let e = column.entry(front).or_insert_with(T::zero);
                *e = e.clone() - sign;
            }
            entries.extend(
                column
                    .into_iter()
                    .filter(|(_, v)| !v.is_zero())
                    .map(|(row, v)| (row, cell, v)),
            );
        }
        diffs.push(IntegerMatrix::new(rows, cols, entries).expect("faces index the degree below"));
    }
    ChainComplex { ranks, diffs }
}
