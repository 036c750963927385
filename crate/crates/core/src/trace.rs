//! Trace monoids: alphabets with an independence relation, canonical
//! normal forms, prefix (left divisor) enumeration, and cliques of the
//! independence graph.
//!
//! A trace is an equivalence class of words under swaps of adjacent
//! independent generators. We represent every trace by the
//! lexicographically least word of its class, where the order on
//! generators is their declaration order in the [`Alphabet`]. One
//! canonical word per class makes trace equality plain word equality and
//! keeps every downstream cell enumeration reproducible.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

/// A generator, identified by its position in the alphabet declaration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Gen(pub usize);

/// Errors raised while building alphabets, independence relations, or
/// traces from raw symbol data.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TraceError {
    #[error("generator name must not be empty")]
    EmptySymbol,
    #[error("duplicate generator `{0}`")]
    DuplicateSymbol(String),
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("independence relation must be irreflexive, got pair ({0},{0})")]
    ReflexivePair(String),
}

/// An ordered finite set of named generators.
///
/// The declaration order doubles as the total order used by normal forms
/// and clique enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    /// Builds an alphabet from distinct, nonempty symbol names.
    pub fn new<I, S>(names: I) -> Result<Self, TraceError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(TraceError::EmptySymbol);
            }
            if names[..i].contains(name) {
                return Err(TraceError::DuplicateSymbol(name.clone()));
            }
        }
        Ok(Self { names })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// The name of a generator.
    ///
    /// Panics if the generator does not belong to this alphabet.
    pub fn name(&self, g: Gen) -> &str {
        &self.names[g.0]
    }

    /// Looks a generator up by name.
    pub fn index_of(&self, name: &str) -> Option<Gen> {
        self.names.iter().position(|n| n == name).map(Gen)
    }

    /// All generators in declaration order.
    pub fn generators(&self) -> impl Iterator<Item = Gen> + '_ {
        (0..self.names.len()).map(Gen)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// An irreflexive symmetric relation on the generators of an alphabet.
///
/// Pairs are stored unordered (smaller index first), so membership of
/// `(a,b)` and `(b,a)` coincide by construction.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Independence {
    pairs: BTreeSet<(Gen, Gen)>,
}

impl Independence {
    /// Validates and symmetrizes a raw pair list against an alphabet.
    ///
    /// Duplicate and mirrored pairs collapse to one entry. Rejects
    /// reflexive pairs and symbols outside the alphabet.
    pub fn new<S: AsRef<str>>(
        alphabet: &Alphabet,
        raw_pairs: &[(S, S)],
    ) -> Result<Self, TraceError> {
        let mut pairs = BTreeSet::new();
        for (x, y) in raw_pairs {
            let (x, y) = (x.as_ref(), y.as_ref());
            let a = alphabet
                .index_of(x)
                .ok_or_else(|| TraceError::UnknownSymbol(x.to_string()))?;
            let b = alphabet
                .index_of(y)
                .ok_or_else(|| TraceError::UnknownSymbol(y.to_string()))?;
            if a == b {
                return Err(TraceError::ReflexivePair(x.to_string()));
            }
            pairs.insert((a.min(b), a.max(b)));
        }
        Ok(Self { pairs })
    }

    /// Full independence on an alphabet: every pair of distinct generators.
    pub fn full(alphabet: &Alphabet) -> Self {
        let mut pairs = BTreeSet::new();
        for a in alphabet.generators() {
            for b in alphabet.generators() {
                if a < b {
                    pairs.insert((a, b));
                }
            }
        }
        Self { pairs }
    }

    pub fn are_independent(&self, a: Gen, b: Gen) -> bool {
        a != b && self.pairs.contains(&(a.min(b), a.max(b)))
    }

    /// Unordered pairs, smaller generator first, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (Gen, Gen)> + '_ {
        self.pairs.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// A trace in canonical normal form.
///
/// Only [`TraceMonoid`] constructs nonempty traces, which guarantees the
/// stored word is the lexicographically least representative. Ordering is
/// graded lexicographic (length first), so sorted trace collections list
/// the empty trace first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Trace {
    word: Vec<Gen>,
}

impl Trace {
    /// The empty trace, the unit of every trace monoid.
    pub fn empty() -> Self {
        Self { word: Vec::new() }
    }

    pub(crate) fn from_normal_word(word: Vec<Gen>) -> Self {
        Self { word }
    }

    pub fn word(&self) -> &[Gen] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }
}

impl Ord for Trace {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.word.len(), &self.word).cmp(&(other.word.len(), &other.word))
    }
}

impl PartialOrd for Trace {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Per-degree table of cliques of the independence graph.
///
/// Degree `n` lists every strictly increasing, pairwise independent
/// `n`-tuple of generators in lexicographic order. Degree 0 holds the
/// empty tuple, so `counts()[0] == 1` always.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueTable {
    degrees: Vec<Vec<Vec<Gen>>>,
}

impl CliqueTable {
    /// Clique counts `p_n` for `n = 0..=max_degree`.
    pub fn counts(&self) -> Vec<usize> {
        self.degrees.iter().map(Vec::len).collect()
    }

    /// `p_n`, zero beyond the maximum clique size.
    pub fn count(&self, n: usize) -> usize {
        self.degrees.get(n).map_or(0, Vec::len)
    }

    /// Largest degree with at least one tuple.
    pub fn max_degree(&self) -> usize {
        self.degrees.len() - 1
    }

    /// The sorted tuple list of one degree; empty beyond the table.
    pub fn tuples(&self, n: usize) -> &[Vec<Gen>] {
        self.degrees.get(n).map_or(&[], Vec::as_slice)
    }

    /// Position of a tuple within its degree.
    pub fn index_of(&self, n: usize, tuple: &[Gen]) -> Option<usize> {
        self.degrees
            .get(n)?
            .binary_search_by(|t| t.as_slice().cmp(tuple))
            .ok()
    }
}

/// An alphabet together with an independence relation; the factory for
/// every trace operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceMonoid {
    alphabet: Alphabet,
    independence: Independence,
}

impl TraceMonoid {
    pub fn new(alphabet: Alphabet, independence: Independence) -> Self {
        Self {
            alphabet,
            independence,
        }
    }

    /// Convenience constructor from symbol names and raw name pairs.
    pub fn from_names<S, P>(generators: &[S], pairs: &[(P, P)]) -> Result<Self, TraceError>
    where
        S: AsRef<str>,
        P: AsRef<str>,
    {
        let alphabet = Alphabet::new(generators.iter().map(|s| s.as_ref().to_string()))?;
        let independence = Independence::new(&alphabet, pairs)?;
        Ok(Self::new(alphabet, independence))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn independence(&self) -> &Independence {
        &self.independence
    }

    pub fn are_independent(&self, a: Gen, b: Gen) -> bool {
        self.independence.are_independent(a, b)
    }

    /// Parses a sequence of symbol names into a trace.
    pub fn trace_from_names<S: AsRef<str>>(&self, word: &[S]) -> Result<Trace, TraceError> {
        let mut gens = Vec::with_capacity(word.len());
        for name in word {
            let g = self
                .alphabet
                .index_of(name.as_ref())
                .ok_or_else(|| TraceError::UnknownSymbol(name.as_ref().to_string()))?;
            gens.push(g);
        }
        Ok(self.normal_form(&gens))
    }

    /// Generators that can be commuted to the front of `word`: those whose
    /// first occurrence is preceded only by independent generators.
    fn movable_to_front(&self, word: &[Gen]) -> BTreeSet<Gen> {
        let mut seen = BTreeSet::new();
        let mut movable = BTreeSet::new();
        for (pos, &g) in word.iter().enumerate() {
            if !seen.insert(g) {
                continue;
            }
            if word[..pos].iter().all(|&h| self.are_independent(g, h)) {
                movable.insert(g);
            }
        }
        movable
    }

    /// Canonical normal form: the lexicographically least word of the
    /// equivalence class, computed by repeatedly moving the least movable
    /// generator to the front.
    pub fn normal_form(&self, word: &[Gen]) -> Trace {
        debug_assert!(word.iter().all(|g| g.0 < self.alphabet.len()));
        let mut rest = word.to_vec();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            // Nonempty: the leading generator is always movable.
            let g = *self
                .movable_to_front(&rest)
                .iter()
                .next()
                .expect("nonempty word has a movable generator");
            let pos = rest.iter().position(|&h| h == g).unwrap();
            rest.remove(pos);
            out.push(g);
        }
        Trace::from_normal_word(out)
    }

    pub fn empty_trace(&self) -> Trace {
        Trace::empty()
    }

    /// Monoid multiplication: concatenate and renormalize.
    pub fn concat(&self, t: &Trace, u: &Trace) -> Trace {
        let mut word = Vec::with_capacity(t.len() + u.len());
        word.extend_from_slice(t.word());
        word.extend_from_slice(u.word());
        self.normal_form(&word)
    }

    /// The set of generators `x` with `t = x · t'` for some trace `t'`.
    pub fn first_letters(&self, t: &Trace) -> BTreeSet<Gen> {
        self.movable_to_front(t.word())
    }

    /// All left divisors of `t`, each in normal form.
    ///
    /// Recursive enumeration over first letters; always contains the
    /// empty trace and `t` itself.
    pub fn prefixes(&self, t: &Trace) -> BTreeSet<Trace> {
        let mut memo: BTreeMap<Vec<Gen>, BTreeSet<Trace>> = BTreeMap::new();
        self.prefixes_memo(t.word(), &mut memo)
    }

    fn prefixes_memo(
        &self,
        word: &[Gen],
        memo: &mut BTreeMap<Vec<Gen>, BTreeSet<Trace>>,
    ) -> BTreeSet<Trace> {
        if let Some(cached) = memo.get(word) {
            return cached.clone();
        }
        let mut out = BTreeSet::new();
        out.insert(Trace::empty());
        for g in self.movable_to_front(word) {
            let mut rest = word.to_vec();
            let pos = rest.iter().position(|&h| h == g).unwrap();
            rest.remove(pos);
            let rest = self.normal_form(&rest).word.clone();
            for p in self.prefixes_memo(&rest, memo) {
                let mut w = Vec::with_capacity(p.len() + 1);
                w.push(g);
                w.extend_from_slice(p.word());
                out.insert(self.normal_form(&w));
            }
        }
        memo.insert(word.to_vec(), out.clone());
        out
    }

    /// Enumerates all cliques of the independence graph by degree.
    pub fn cliques(&self) -> CliqueTable {
        let mut degrees: Vec<Vec<Vec<Gen>>> = vec![vec![Vec::new()]];
        loop {
            let prev = degrees.last().unwrap();
            let mut next = Vec::new();
            for tuple in prev {
                let lo = tuple.last().map_or(0, |g| g.0 + 1);
                for i in lo..self.alphabet.len() {
                    let g = Gen(i);
                    if tuple.iter().all(|&h| self.are_independent(h, g)) {
                        let mut extended = tuple.clone();
                        extended.push(g);
                        next.push(extended);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            degrees.push(next);
        }
        CliqueTable { degrees }
    }

    /// Renders a trace using the alphabet's symbol names; the empty trace
    /// prints as `1`.
    ///
    /// Single-character names concatenate directly; otherwise names are
    /// joined with `.` to keep the rendering unambiguous.
    pub fn display_trace(&self, t: &Trace) -> String {
        if t.is_empty() {
            return "1".to_string();
        }
        let single = self.alphabet.names().iter().all(|n| n.chars().count() == 1);
        let sep = if single { "" } else { "." };
        t.word()
            .iter()
            .map(|&g| self.alphabet.name(g))
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g{}", self.0)
    }
}
