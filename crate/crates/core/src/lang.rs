//! Finite prefix-closed trace languages and the partial action of the
//! monoid on the language itself.
//!
//! Members are kept in canonical normal form, deduplicated, and sorted in
//! graded lexicographic order (length first), which fixes the state order
//! of the induced state space: the empty trace, when present, is state 0.

use thiserror::Error;

use crate::state::StateSpace;
use crate::trace::{Trace, TraceMonoid};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LangError {
    #[error("language is not prefix closed: missing prefix `{0}`")]
    NotPrefixClosed(String),
    #[error("distinct traces render to the same state name `{0}`")]
    AmbiguousStateNames(String),
}

/// A finite set of traces over a common monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceLanguage {
    monoid: TraceMonoid,
    members: Vec<Trace>,
}

impl TraceLanguage {
    /// Builds a language from traces; duplicates merge silently.
    pub fn new(monoid: TraceMonoid, traces: impl IntoIterator<Item = Trace>) -> Self {
        let mut members: Vec<Trace> = traces.into_iter().collect();
        members.sort();
        members.dedup();
        Self { monoid, members }
    }

    pub fn monoid(&self) -> &TraceMonoid {
        &self.monoid
    }

    /// Members in graded lexicographic order.
    pub fn members(&self) -> &[Trace] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, t: &Trace) -> bool {
        self.members.binary_search(t).is_ok()
    }

    /// The least prefix-closed superset: adds every left divisor of every
    /// member. Idempotent and extensive.
    pub fn prefix_closure(&self) -> TraceLanguage {
        let mut closed = Vec::new();
        for t in &self.members {
            closed.extend(self.monoid.prefixes(t));
        }
        TraceLanguage::new(self.monoid.clone(), closed)
    }

    /// A prefix of a member that is missing from the language, if any;
    /// `None` means the language is prefix closed. The witness is the
    /// least missing trace in graded lexicographic order.
    pub fn missing_prefix(&self) -> Option<Trace> {
        self.prefix_closure()
            .members
            .into_iter()
            .find(|t| !self.contains(t))
    }

    pub fn is_prefix_closed(&self) -> bool {
        self.missing_prefix().is_none()
    }

    /// The induced state space: states are the members, and `v·a` is the
    /// concatenation when it stays inside the language. Requires a
    /// prefix-closed language; the initial state is the empty trace.
    pub fn to_state_space(&self) -> Result<StateSpace, LangError> {
        if let Some(witness) = self.missing_prefix() {
            return Err(LangError::NotPrefixClosed(
                self.monoid.display_trace(&witness),
            ));
        }
        let names: Vec<String> = self
            .members
            .iter()
            .map(|t| self.monoid.display_trace(t))
            .collect();
        let mut transitions = Vec::new();
        for (i, v) in self.members.iter().enumerate() {
            for g in self.monoid.alphabet().generators() {
                let one_step = Trace::from_normal_word(vec![g]);
                let va = self.monoid.concat(v, &one_step);
                if let Ok(j) = self.members.binary_search(&va) {
                    transitions.push((
                        names[i].clone(),
                        self.monoid.alphabet().name(g).to_string(),
                        names[j].clone(),
                    ));
                }
            }
        }
        let initial = (!self.members.is_empty() && self.members[0].is_empty()).then_some("1");
        StateSpace::new(self.monoid.clone(), &names, &transitions, initial).map_err(|_| {
            let mut seen = Vec::new();
            let dup = names
                .iter()
                .find(|n| {
                    let hit = seen.contains(n);
                    seen.push(n);
                    hit
                })
                .cloned()
                .unwrap_or_default();
            LangError::AmbiguousStateNames(dup)
        })
    }
}
