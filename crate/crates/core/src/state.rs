//! Finite state sets with a deterministic partial action of each
//! generator, the commutation (functoriality) check, reachability, and
//! totalization by an absorbing sink state.
//!
//! An undefined action is an ordinary absent value, never an error. The
//! sink state is named `*`; it is appended last so matrix row order stays
//! the declaration order of the user's states.

use std::collections::VecDeque;

use thiserror::Error;

use crate::trace::{Gen, Trace, TraceMonoid};

/// Reserved name of the absorbing sink state.
pub const STAR: &str = "*";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StateError {
    #[error("state name must not be empty")]
    EmptyStateName,
    #[error("duplicate state `{0}`")]
    DuplicateState(String),
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("conflicting transitions: {state} on {generator} goes to both {first} and {second}")]
    ConflictingTransition {
        state: String,
        generator: String,
        first: String,
        second: String,
    },
    #[error("state name `*` is reserved for the sink state")]
    ReservedStateName,
}

/// A failed commutation check: for some state `s` and independent pair
/// `{a,b}`, `s·a·b` and `s·b·a` are not Kleene-equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommutationViolation {
    pub state: usize,
    pub a: Gen,
    pub b: Gen,
    /// `s·a·b`, if defined.
    pub via_ab: Option<usize>,
    /// `s·b·a`, if defined.
    pub via_ba: Option<usize>,
}

impl CommutationViolation {
    /// Human-readable rendering against the space the check ran on.
    pub fn describe(&self, space: &StateSpace) -> String {
        let name = |s: Option<usize>| match s {
            Some(i) => space.state_name(i).to_string(),
            None => "undefined".to_string(),
        };
        let (a, b) = (
            space.monoid().alphabet().name(self.a),
            space.monoid().alphabet().name(self.b),
        );
        format!(
            "{s}·{a}·{b} = {lhs} but {s}·{b}·{a} = {rhs}",
            s = space.state_name(self.state),
            lhs = name(self.via_ab),
            rhs = name(self.via_ba),
        )
    }
}

/// Result of checking the commutation law on every state and every
/// independent pair.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ActionReport {
    pub violations: Vec<CommutationViolation>,
}

impl ActionReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A finite set of states with a deterministic partial action of each
/// generator of a trace monoid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateSpace {
    monoid: TraceMonoid,
    states: Vec<String>,
    /// `transitions[state][generator]`, `None` where the action is undefined.
    transitions: Vec<Vec<Option<usize>>>,
    initial: Option<usize>,
}

impl StateSpace {
    /// Builds a space from named states and `(from, generator, to)` triples.
    ///
    /// Repeating an identical triple is harmless; two different targets
    /// for the same `(state, generator)` pair are rejected.
    pub fn new<S, F, G, T>(
        monoid: TraceMonoid,
        states: &[S],
        transitions: &[(F, G, T)],
        initial: Option<&str>,
    ) -> Result<Self, StateError>
    where
        S: AsRef<str>,
        F: AsRef<str>,
        G: AsRef<str>,
        T: AsRef<str>,
    {
        let states: Vec<String> = states.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, name) in states.iter().enumerate() {
            if name.is_empty() {
                return Err(StateError::EmptyStateName);
            }
            if states[..i].contains(name) {
                return Err(StateError::DuplicateState(name.clone()));
            }
        }
        let state_index = |name: &str| -> Result<usize, StateError> {
            states
                .iter()
                .position(|s| s == name)
                .ok_or_else(|| StateError::UnknownState(name.to_string()))
        };

        let mut table = vec![vec![None; monoid.alphabet().len()]; states.len()];
        for (from, on, to) in transitions {
            let from_ix = state_index(from.as_ref())?;
            let g = monoid
                .alphabet()
                .index_of(on.as_ref())
                .ok_or_else(|| StateError::UnknownGenerator(on.as_ref().to_string()))?;
            let to_ix = state_index(to.as_ref())?;
            match table[from_ix][g.0] {
                None => table[from_ix][g.0] = Some(to_ix),
                Some(existing) if existing == to_ix => {}
                Some(existing) => {
                    return Err(StateError::ConflictingTransition {
                        state: from.as_ref().to_string(),
                        generator: on.as_ref().to_string(),
                        first: states[existing].clone(),
                        second: to.as_ref().to_string(),
                    })
                }
            }
        }

        let initial = match initial {
            Some(name) => Some(state_index(name)?),
            None => None,
        };

        Ok(Self {
            monoid,
            states,
            transitions: table,
            initial,
        })
    }

    pub fn monoid(&self) -> &TraceMonoid {
        &self.monoid
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn state_name(&self, s: usize) -> &str {
        &self.states[s]
    }

    pub fn state_index(&self, name: &str) -> Option<usize> {
        self.states.iter().position(|s| s == name)
    }

    pub fn initial(&self) -> Option<usize> {
        self.initial
    }

    /// Number of defined `(state, generator)` pairs.
    pub fn transition_count(&self) -> usize {
        self.transitions
            .iter()
            .map(|row| row.iter().flatten().count())
            .sum()
    }

    /// One generator step; `None` where the action is undefined.
    pub fn act_gen(&self, s: usize, g: Gen) -> Option<usize> {
        self.transitions[s][g.0]
    }

    /// Left-to-right action of a raw word.
    pub fn act_word(&self, s: usize, word: &[Gen]) -> Option<usize> {
        word.iter().try_fold(s, |cur, &g| self.act_gen(cur, g))
    }

    /// Action of a trace via its stored normal form. For spaces that pass
    /// [`StateSpace::validate_action`] the result does not depend on the
    /// chosen representative.
    pub fn act(&self, s: usize, t: &Trace) -> Option<usize> {
        self.act_word(s, t.word())
    }

    /// Checks that independent generators commute from every state:
    /// `s·a·b` and `s·b·a` both undefined, or both defined and equal.
    ///
    /// Every violation is reported, one per `(state, unordered pair)`.
    pub fn validate_action(&self) -> ActionReport {
        let mut violations = Vec::new();
        for s in 0..self.states.len() {
            for (a, b) in self.monoid.independence().pairs() {
                let via_ab = self.act_word(s, &[a, b]);
                let via_ba = self.act_word(s, &[b, a]);
                if via_ab != via_ba {
                    violations.push(CommutationViolation {
                        state: s,
                        a,
                        b,
                        via_ab,
                        via_ba,
                    });
                }
            }
        }
        ActionReport { violations }
    }

    /// Restriction to the states reachable from `s0` by defined generator
    /// steps. Surviving states keep their relative declaration order; the
    /// result's initial state is `s0`.
    pub fn reachable(&self, s0: usize) -> StateSpace {
        assert!(s0 < self.states.len(), "state index out of range");
        let mut seen = vec![false; self.states.len()];
        seen[s0] = true;
        let mut queue = VecDeque::from([s0]);
        while let Some(s) = queue.pop_front() {
            for target in self.transitions[s].iter().flatten() {
                if !seen[*target] {
                    seen[*target] = true;
                    queue.push_back(*target);
                }
            }
        }

        let mut remap = vec![None; self.states.len()];
        let mut states = Vec::new();
        for (old, keep) in seen.iter().enumerate() {
            if *keep {
                remap[old] = Some(states.len());
                states.push(self.states[old].clone());
            }
        }
        let transitions = (0..self.states.len())
            .filter(|s| seen[*s])
            .map(|s| {
                self.transitions[s]
                    .iter()
                    .map(|t| t.map(|old| remap[old].expect("reachable set is forward closed")))
                    .collect()
            })
            .collect();

        StateSpace {
            monoid: self.monoid.clone(),
            states,
            transitions,
            initial: remap[s0],
        }
    }

    /// Name-based variant of [`StateSpace::reachable`].
    pub fn reachable_from(&self, s0: &str) -> Result<StateSpace, StateError> {
        let s0 = self
            .state_index(s0)
            .ok_or_else(|| StateError::UnknownState(s0.to_string()))?;
        Ok(self.reachable(s0))
    }

    /// Totalizes the action by adding the absorbing sink state `*` last:
    /// every undefined step goes to `*`, and `*` is a fixed point of every
    /// generator.
    pub fn augment(&self) -> Result<AugmentedStateSpace, StateError> {
        if self.states.iter().any(|s| s == STAR) {
            return Err(StateError::ReservedStateName);
        }
        let star = self.states.len();
        let mut states = self.states.clone();
        states.push(STAR.to_string());
        let mut transitions: Vec<Vec<Option<usize>>> = self
            .transitions
            .iter()
            .map(|row| row.iter().map(|t| Some(t.unwrap_or(star))).collect())
            .collect();
        transitions.push(vec![Some(star); self.monoid.alphabet().len()]);
        Ok(AugmentedStateSpace {
            space: StateSpace {
                monoid: self.monoid.clone(),
                states,
                transitions,
                initial: self.initial,
            },
            star,
        })
    }
}

/// A state space whose action is total, obtained by adjoining the sink
/// state `*`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedStateSpace {
    space: StateSpace,
    star: usize,
}

impl AugmentedStateSpace {
    /// The underlying total space, sink state included (always last).
    pub fn space(&self) -> &StateSpace {
        &self.space
    }

    pub fn star(&self) -> usize {
        self.star
    }

    pub fn monoid(&self) -> &TraceMonoid {
        self.space.monoid()
    }

    pub fn state_count(&self) -> usize {
        self.space.state_count()
    }

    /// One generator step of the total action.
    pub fn act_total(&self, s: usize, g: Gen) -> usize {
        self.space.act_gen(s, g).expect("augmented action is total")
    }
}
