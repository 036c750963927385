//! Elementary condition/event nets: the firing rule, the independence
//! relation derived from disjoint neighborhoods, and the induced state
//! space on markings.
//!
//! Markings are represented as bitmasks over the declared conditions, so
//! a net is limited to 64 conditions; plenty for desk-scale analysis.

use thiserror::Error;

use crate::state::StateSpace;
use crate::trace::TraceMonoid;

/// Largest supported number of conditions.
pub const MAX_CONDITIONS: usize = 64;

/// A marking: bit `i` set means condition `i` (declaration order) holds.
pub type Marking = u64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PetriError {
    #[error("condition name must not be empty")]
    EmptyConditionName,
    #[error("event name must not be empty")]
    EmptyEventName,
    #[error("duplicate condition `{0}`")]
    DuplicateCondition(String),
    #[error("duplicate event `{0}`")]
    DuplicateEvent(String),
    #[error("unknown condition `{0}`")]
    UnknownCondition(String),
    #[error("a net may declare at most {MAX_CONDITIONS} conditions, got {0}")]
    TooManyConditions(usize),
}

/// An event declaration: name plus pre- and postcondition name sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EventDef {
    pub name: String,
    pub pre: Vec<String>,
    pub post: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Event {
    name: String,
    pre: Marking,
    post: Marking,
}

/// An elementary net: conditions, events with pre/post sets, and an
/// initial marking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeNet {
    conditions: Vec<String>,
    events: Vec<Event>,
    initial: Marking,
}

impl CeNet {
    pub fn new<S: AsRef<str>>(
        conditions: &[S],
        events: &[EventDef],
        initial: &[S],
    ) -> Result<Self, PetriError> {
        if conditions.len() > MAX_CONDITIONS {
            return Err(PetriError::TooManyConditions(conditions.len()));
        }
        let conditions: Vec<String> = conditions.iter().map(|c| c.as_ref().to_string()).collect();
        for (i, name) in conditions.iter().enumerate() {
            if name.is_empty() {
                return Err(PetriError::EmptyConditionName);
            }
            if conditions[..i].contains(name) {
                return Err(PetriError::DuplicateCondition(name.clone()));
            }
        }
        let mask_of = |names: &[String]| -> Result<Marking, PetriError> {
            let mut mask = 0u64;
            for n in names {
                let i = conditions
                    .iter()
                    .position(|c| c == n)
                    .ok_or_else(|| PetriError::UnknownCondition(n.clone()))?;
                mask |= 1 << i;
            }
            Ok(mask)
        };

        let mut built = Vec::with_capacity(events.len());
        for (i, def) in events.iter().enumerate() {
            if def.name.is_empty() {
                return Err(PetriError::EmptyEventName);
            }
            if events[..i].iter().any(|e| e.name == def.name) {
                return Err(PetriError::DuplicateEvent(def.name.clone()));
            }
            built.push(Event {
                name: def.name.clone(),
                pre: mask_of(&def.pre)?,
                post: mask_of(&def.post)?,
            });
        }

        let initial: Vec<String> = initial.iter().map(|c| c.as_ref().to_string()).collect();
        let initial = mask_of(&initial)?;
        Ok(Self {
            conditions,
            events: built,
            initial,
        })
    }

    pub fn condition_count(&self) -> usize {
        self.conditions.len()
    }

    pub fn condition_names(&self) -> &[String] {
        &self.conditions
    }

    pub fn event_count(&self) -> usize {
        self.events.len()
    }

    pub fn event_name(&self, e: usize) -> &str {
        &self.events[e].name
    }

    pub fn initial_marking(&self) -> Marking {
        self.initial
    }

    /// The declaration of one event, with pre/post condition names in
    /// declaration order.
    pub fn event_def(&self, e: usize) -> EventDef {
        let names = |mask: Marking| -> Vec<String> {
            (0..self.conditions.len())
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.conditions[i].clone())
                .collect()
        };
        EventDef {
            name: self.events[e].name.clone(),
            pre: names(self.events[e].pre),
            post: names(self.events[e].post),
        }
    }

    /// Fires event `e` from marking `s` if enabled: the preconditions
    /// hold and no postcondition does. Returns the successor marking,
    /// or `None` when disabled.
    pub fn fire(&self, s: Marking, e: usize) -> Option<Marking> {
        let ev = &self.events[e];
        if ev.pre & s == ev.pre && ev.post & s == 0 {
            Some((s & !ev.pre) | ev.post)
        } else {
            None
        }
    }

    /// Events whose pre and post sets overlap; the enabling condition can
    /// never hold for them.
    pub fn never_enabled_events(&self) -> Vec<usize> {
        (0..self.events.len())
            .filter(|&e| self.events[e].pre & self.events[e].post != 0)
            .collect()
    }

    /// The trace monoid on events, with two events independent exactly
    /// when their condition neighborhoods `pre ∪ post` are disjoint.
    pub fn monoid(&self) -> TraceMonoid {
        let names: Vec<&str> = self.events.iter().map(|e| e.name.as_str()).collect();
        let mut pairs = Vec::new();
        for i in 0..self.events.len() {
            for j in i + 1..self.events.len() {
                let ni = self.events[i].pre | self.events[i].post;
                let nj = self.events[j].pre | self.events[j].post;
                if ni & nj == 0 {
                    pairs.push((names[i], names[j]));
                }
            }
        }
        TraceMonoid::from_names(&names, &pairs).expect("event names validated at construction")
    }

    /// Serialized marking identifier: sorted condition names joined by
    /// commas inside braces, the empty marking as `{}`.
    pub fn marking_name(&self, m: Marking) -> String {
        let mut held: Vec<&str> = (0..self.conditions.len())
            .filter(|i| m & (1 << i) != 0)
            .map(|i| self.conditions[i].as_str())
            .collect();
        held.sort_unstable();
        format!("{{{}}}", held.join(","))
    }

    /// The induced state space on markings.
    ///
    /// With `reachable_only` (the usual choice) states are the markings
    /// reachable from the initial one, in breadth-first discovery order
    /// with events explored in declaration order. Otherwise states are
    /// all `2^B` markings in binary-counter order over the
    /// lexicographically sorted conditions.
    pub fn to_state_space(&self, reachable_only: bool) -> StateSpace {
        let markings: Vec<Marking> = if reachable_only {
            let mut order = vec![self.initial];
            let mut seen = std::collections::HashSet::from([self.initial]);
            let mut head = 0;
            while head < order.len() {
                let s = order[head];
                head += 1;
                for e in 0..self.events.len() {
                    if let Some(t) = self.fire(s, e) {
                        if seen.insert(t) {
                            order.push(t);
                        }
                    }
                }
            }
            order
        } else {
            assert!(
                self.conditions.len() <= 20,
                "full marking space only supported up to 20 conditions"
            );
            // Counter bit j toggles the j-th condition in name order.
            let mut sorted: Vec<usize> = (0..self.conditions.len()).collect();
            sorted.sort_by(|&a, &b| self.conditions[a].cmp(&self.conditions[b]));
            (0..(1u64 << self.conditions.len()))
                .map(|counter| {
                    let mut m = 0u64;
                    for (j, &decl) in sorted.iter().enumerate() {
                        if counter & (1 << j) != 0 {
                            m |= 1 << decl;
                        }
                    }
                    m
                })
                .collect()
        };

        let names: Vec<String> = markings.iter().map(|&m| self.marking_name(m)).collect();
        let mut transitions = Vec::new();
        for (si, &s) in markings.iter().enumerate() {
            for e in 0..self.events.len() {
                if let Some(t) = self.fire(s, e) {
                    let ti = markings
                        .iter()
                        .position(|&m| m == t)
                        .expect("successor marking enumerated");
                    transitions.push((
                        names[si].clone(),
                        self.events[e].name.clone(),
                        names[ti].clone(),
                    ));
                }
            }
        }
        let initial_name = self.marking_name(self.initial);
        let initial = names.iter().any(|n| n == &initial_name);
        StateSpace::new(
            self.monoid(),
            &names,
            &transitions,
            initial.then_some(initial_name.as_str()),
        )
        .expect("marking names are distinct by construction")
    }
}
