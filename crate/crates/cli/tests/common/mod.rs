//! Oracles and generators for the acceptance suite, independent of the
//! library code paths under test: clique counts by subset enumeration,
//! rank and determinant by fraction-free elimination, and random
//! instance construction with commutation repair.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand::Rng;

use trace_homology::state::StateSpace;
use trace_homology::trace::{Gen, Trace, TraceMonoid};
use trace_homology::{Int, IntegerMatrix, TraceLanguage};

/// Clique counts of the independence graph by enumerating all subsets.
pub fn brute_clique_counts(m: &TraceMonoid) -> Vec<usize> {
    let n = m.alphabet().len();
    assert!(n <= 20);
    let mut counts = vec![0usize; n + 1];
    for mask in 0u32..(1 << n) {
        let members: Vec<Gen> = (0..n).filter(|i| mask & (1 << i) != 0).map(Gen).collect();
        let clique = members
            .iter()
            .enumerate()
            .all(|(i, &a)| members[..i].iter().all(|&b| m.are_independent(a, b)));
        if clique {
            counts[members.len()] += 1;
        }
    }
    while counts.len() > 1 && *counts.last().unwrap() == 0 {
        counts.pop();
    }
    counts
}

/// Bareiss elimination with full pivoting: rank, and the determinant for
/// square full-rank input (zero otherwise, one for the empty matrix).
pub fn bareiss_rank_det(dense: &[Vec<Int>]) -> (usize, Int) {
    let rows = dense.len();
    let cols = dense.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Int>> = dense.to_vec();
    let mut sign = 1i32;
    let mut prev = Int::one();
    let mut r = 0;
    while r < rows.min(cols) {
        let pivot = (r..rows)
            .flat_map(|i| (r..cols).map(move |j| (i, j)))
            .find(|&(i, j)| !m[i][j].is_zero());
        let Some((pi, pj)) = pivot else { break };
        if pi != r {
            m.swap(pi, r);
            sign = -sign;
        }
        if pj != r {
            for row in &mut m {
                row.swap(pj, r);
            }
            sign = -sign;
        }
        for i in r + 1..rows {
            for j in r + 1..cols {
                let num = &m[i][j] * &m[r][r] - &m[i][r] * &m[r][j];
                m[i][j] = num / &prev;
            }
            m[i][r] = Int::zero();
        }
        prev = m[r][r].clone();
        r += 1;
    }
    let det = if rows == cols && rows == 0 {
        Int::one()
    } else if rows == cols && r == rows {
        let d = m[rows - 1][rows - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    } else {
        Int::zero()
    };
    (r, det)
}

pub fn bareiss_rank(matrix: &IntegerMatrix<Int>) -> usize {
    bareiss_rank_det(&matrix.to_dense()).0
}

pub fn is_unimodular(matrix: &IntegerMatrix<Int>) -> bool {
    matrix.rows() == matrix.cols() && bareiss_rank_det(&matrix.to_dense()).1.abs() == Int::one()
}

pub fn gen_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            char::from_u32('a' as u32 + i as u32 % 26)
                .unwrap()
                .to_string()
                .repeat(i / 26 + 1)
        })
        .collect()
}

pub fn random_monoid(rng: &mut impl Rng, max_gens: usize, edge_prob: f64) -> TraceMonoid {
    let n = rng.random_range(1..=max_gens);
    let names = gen_names(n);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(edge_prob) {
                pairs.push((names[i].clone(), names[j].clone()));
            }
        }
    }
    TraceMonoid::from_names(&names, &pairs).unwrap()
}

pub fn random_word(rng: &mut impl Rng, m: &TraceMonoid, max_len: usize) -> Vec<Gen> {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| Gen(rng.random_range(0..m.alphabet().len())))
        .collect()
}

/// Random state space that passes the commutation check; transitions
/// that break commutation are removed until the action validates.
pub fn random_valid_space(
    rng: &mut impl Rng,
    monoid: &TraceMonoid,
    max_states: usize,
    density: f64,
) -> StateSpace {
    let n = rng.random_range(1..=max_states);
    let states: Vec<String> = (0..n).map(|i| format!("s{i}")).collect();
    let mut triples: Vec<(String, String, String)> = Vec::new();
    for s in &states {
        for g in monoid.alphabet().names() {
            if rng.random_bool(density) {
                let target = &states[rng.random_range(0..n)];
                triples.push((s.clone(), g.clone(), target.clone()));
            }
        }
    }
    loop {
        let space = StateSpace::new(monoid.clone(), &states, &triples, None).unwrap();
        let report = space.validate_action();
        if report.is_valid() {
            return space;
        }
        for v in &report.violations {
            let state = space.state_name(v.state).to_string();
            let bad_gen = if v.via_ab.is_none() {
                monoid.alphabet().name(v.b)
            } else {
                monoid.alphabet().name(v.a)
            };
            if let Some(pos) = triples
                .iter()
                .position(|(f, g, _)| *f == state && g == bad_gen)
            {
                triples.remove(pos);
            }
        }
    }
}

/// Random prefix-closed language with at most `max_size` members.
pub fn random_language(
    rng: &mut impl Rng,
    monoid: &TraceMonoid,
    max_size: usize,
    words: usize,
    max_len: usize,
) -> TraceLanguage {
    let mut len_cap = max_len;
    loop {
        let traces: Vec<Trace> = (0..words)
            .map(|_| monoid.normal_form(&random_word(rng, monoid, len_cap)))
            .collect();
        let lang = TraceLanguage::new(monoid.clone(), traces).prefix_closure();
        if lang.len() <= max_size {
            return lang;
        }
        if len_cap == 0 {
            return TraceLanguage::new(monoid.clone(), [Trace::empty()]);
        }
        len_cap -= 1;
    }
}

pub fn random_matrix(
    rng: &mut impl Rng,
    max_rows: usize,
    max_cols: usize,
    fill: f64,
) -> IntegerMatrix<Int> {
    let rows = rng.random_range(0..=max_rows);
    let cols = rng.random_range(0..=max_cols);
    let mut dense = vec![vec![Int::zero(); cols]; rows];
    for row in dense.iter_mut() {
        for cell in row.iter_mut() {
            if rng.random_bool(fill) {
                *cell = Int::from(rng.random_range(-9i64..=9));
            }
        }
    }
    IntegerMatrix::from_dense(&dense)
}
