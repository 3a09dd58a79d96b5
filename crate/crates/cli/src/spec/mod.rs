//! Line-oriented text format for groups, extensions and queries.
//!
//! See `docs/spec-format.md` for the grammar.

mod parse;
pub(crate) mod render;
pub(crate) mod resolve;

pub use parse::{parse_spec, parse_syntax};
pub use render::render_query;
pub use render::render_spec;
pub use resolve::Workspace;

use thiserror::Error;

/// How a named group is built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    /// `cyclic N [generator]`
    Cyclic { n: usize, generator: Option<String> },
    /// `catalog NAME`
    Catalog(String),
    /// `product A B`
    Product(String, String),
    /// `semidirect N H` followed by `act` lines
    Semidirect { normal: String, acting: String, actions: Vec<Action> },
    /// `central A za B zb`
    Central { a: String, za: String, b: String, zb: String },
    /// `quotient G by x, y, ...`
    Quotient { group: String, by: Vec<String> },
}

/// Action of one generator of the acting group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub generator: String,
    pub map: ActionMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionMap {
    Identity,
    /// Conjugation by an element of the normal subgroup.
    Inner(String),
    /// Images of generators of the normal subgroup.
    Images(Vec<(String, String)>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Projection {
    /// Generator images, `x -> y`.
    Images(Vec<(String, String)>),
    /// Onto the second factor of `product A QUOT`.
    Factor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceDef {
    pub name: String,
    pub total: String,
    pub quotient: String,
    pub projection: Projection,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Query {
    Lifts { sequence: String, alpha: String, beta: String, witnesses: bool },
    Homs { sequence: String, pairs: Vec<(String, String)> },
    Obstruction { sequence: String, pair: Option<(String, String)> },
    Irreps { group: String },
    Classes { group: String },
    VerifyPaper,
}

/// A parsed spec. Equality ignores source line numbers.
#[derive(Debug, Clone, Default)]
pub struct SpecDocument {
    pub groups: Vec<(String, GroupExpr)>,
    pub sequences: Vec<SequenceDef>,
    pub queries: Vec<Query>,
    pub(crate) group_lines: Vec<usize>,
    pub(crate) sequence_lines: Vec<usize>,
    pub(crate) query_lines: Vec<usize>,
}

impl PartialEq for SpecDocument {
    fn eq(&self, other: &Self) -> bool {
        self.groups == other.groups && self.sequences == other.sequences && self.queries == other.queries
    }
}

impl SpecDocument {
    /// A document without source positions.
    pub fn new(groups: Vec<(String, GroupExpr)>, sequences: Vec<SequenceDef>, queries: Vec<Query>) -> Self {
        SpecDocument { groups, sequences, queries, ..Default::default() }
    }

    pub fn query_line(&self, i: usize) -> usize {
        self.query_lines.get(i).copied().unwrap_or(0)
    }

    /// Appends another document, skipping groups and sequences already
    /// defined identically.
    pub fn merge(&mut self, other: SpecDocument) -> Result<(), SpecError> {
        for (i, (name, expr)) in other.groups.into_iter().enumerate() {
            let line = other.group_lines.get(i).copied().unwrap_or(0);
            match self.groups.iter().find(|(n, _)| *n == name) {
                Some((_, e)) if *e == expr => {}
                Some(_) => return Err(SpecError::Parse { line, message: format!("group '{name}' redefined differently") }),
                None => {
                    self.groups.push((name, expr));
                    self.group_lines.push(line);
                }
            }
        }
        for (i, seq) in other.sequences.into_iter().enumerate() {
            let line = other.sequence_lines.get(i).copied().unwrap_or(0);
            match self.sequences.iter().find(|s| s.name == seq.name) {
                Some(s) if *s == seq => {}
                Some(_) => {
                    return Err(SpecError::Parse { line, message: format!("sequence '{}' redefined differently", seq.name) })
                }
                None => {
                    self.sequences.push(seq);
                    self.sequence_lines.push(line);
                }
            }
        }
        self.query_lines.extend(other.query_lines);
        self.queries.extend(other.queries);
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("line {line}: unknown {kind} '{name}'")]
    UnknownReference { line: usize, kind: &'static str, name: String },
    #[error("line {line}: invalid action: {message}")]
    InvalidAction { line: usize, message: String },
    #[error("line {line}: {source}")]
    Engine { line: usize, source: liftcount_core::Error },
}
