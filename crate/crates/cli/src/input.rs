//! JSON input formats and their conversion into core types.
//!
//! All files are UTF-8 JSON with strict field checking. Words in
//! language files tokenize by greedy longest match over generator
//! names, so single-character alphabets read naturally as plain strings.

use serde::Deserialize;

use trace_homology::petri::{CeNet, EventDef};
use trace_homology::state::STAR;
use trace_homology::trace::Gen;
use trace_homology::{Alphabet, StateSpace, TraceLanguage, TraceMonoid};

use crate::Failure;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateSpaceFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub independence: Vec<(String, String)>,
    pub states: Vec<String>,
    #[serde(default)]
    pub transitions: Vec<TransitionEntry>,
    #[serde(default)]
    pub initial: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransitionEntry {
    pub from: String,
    pub on: String,
    pub to: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetFile {
    pub conditions: Vec<String>,
    pub events: Vec<EventEntry>,
    #[serde(default)]
    pub initial: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EventEntry {
    pub name: String,
    #[serde(default)]
    pub pre: Vec<String>,
    #[serde(default)]
    pub post: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LanguageFile {
    pub generators: Vec<String>,
    #[serde(default)]
    pub independence: Vec<(String, String)>,
    pub traces: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    #[serde(default)]
    pub edges: Vec<(String, String)>,
}

fn read(path: &std::path::Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::Parse(format!("cannot read {}: {e}", path.display())))
}

fn decode<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Parse(format!("invalid {what} file: {e}")))
}

pub fn load_state_space(path: &std::path::Path) -> Result<StateSpace, Failure> {
    let file: StateSpaceFile = decode(&read(path)?, "state space")?;
    if file.states.iter().any(|s| s == STAR) {
        return Err(Failure::Parse(format!(
            "state name `{STAR}` is reserved for the sink state"
        )));
    }
    let monoid = TraceMonoid::from_names(&file.generators, &file.independence)
        .map_err(|e| Failure::Parse(e.to_string()))?;
    let triples: Vec<(String, String, String)> = file
        .transitions
        .into_iter()
        .map(|t| (t.from, t.on, t.to))
        .collect();
    StateSpace::new(monoid, &file.states, &triples, file.initial.as_deref())
        .map_err(|e| Failure::Parse(e.to_string()))
}

pub fn load_net(path: &std::path::Path) -> Result<CeNet, Failure> {
    let file: NetFile = decode(&read(path)?, "net")?;
    let events: Vec<EventDef> = file
        .events
        .into_iter()
        .map(|e| EventDef {
            name: e.name,
            pre: e.pre,
            post: e.post,
        })
        .collect();
    CeNet::new(&file.conditions, &events, &file.initial).map_err(|e| Failure::Parse(e.to_string()))
}

/// Splits a word string into generators by greedy longest match.
pub fn tokenize_word(alphabet: &Alphabet, word: &str) -> Result<Vec<Gen>, Failure> {
    let mut out = Vec::new();
    let mut rest = word;
    while !rest.is_empty() {
        let hit = alphabet
            .generators()
            .filter(|g| rest.starts_with(alphabet.name(*g)))
            .max_by_key(|g| alphabet.name(*g).len());
        match hit {
            Some(g) => {
                out.push(g);
                rest = &rest[alphabet.name(g).len()..];
            }
            None => {
                return Err(Failure::Parse(format!(
                    "word `{word}` does not decompose into generators at `{rest}`"
                )))
            }
        }
    }
    Ok(out)
}

/// Loads a language file; returns the language plus the number of input
/// words that merged into an already-seen trace.
pub fn load_language(path: &std::path::Path) -> Result<(TraceLanguage, usize), Failure> {
    let file: LanguageFile = decode(&read(path)?, "language")?;
    let monoid = TraceMonoid::from_names(&file.generators, &file.independence)
        .map_err(|e| Failure::Parse(e.to_string()))?;
    let mut traces = Vec::new();
    for word in &file.traces {
        let gens = tokenize_word(monoid.alphabet(), word)?;
        traces.push(monoid.normal_form(&gens));
    }
    let total = traces.len();
    let language = TraceLanguage::new(monoid, traces);
    let merged = total - language.len();
    Ok((language, merged))
}

/// Parses a torus graph from a file path, or inline when the argument
/// itself is a JSON object.
pub fn load_graph(arg: &str) -> Result<TraceMonoid, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        read(std::path::Path::new(arg))?
    };
    let file: GraphFile = decode(&text, "graph")?;
    TraceMonoid::from_names(&file.vertices, &file.edges).map_err(|e| Failure::Parse(e.to_string()))
}
