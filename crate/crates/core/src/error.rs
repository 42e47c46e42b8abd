use thiserror::Error;

use crate::automaton::UndefinedUse;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutomatonError {
    #[error("unknown state `{0}`")]
    UnknownState(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("state `{0}` declared twice")]
    DuplicateState(String),
    #[error("letter `{0}` declared twice")]
    DuplicateLetter(String),
    #[error("second transition for state `{state}` on letter `{letter}`")]
    DuplicateTransition { state: String, letter: String },
    #[error("state index {0} out of range")]
    StateOutOfRange(usize),
    #[error("letter index {0} out of range")]
    LetterOutOfRange(usize),
    #[error("transition table has {found} entries, expected {expected}")]
    TableShape { expected: usize, found: usize },
    #[error("operation requires a complete automaton")]
    Partial,
    #[error("automaton is not weakly acyclic")]
    NotWeaklyAcyclic,
}

/// A word read through an undefined transition where full definedness is required.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("undefined transition at position {} on state index {}", .0.position, .0.state.0)]
pub struct PartialityError(pub UndefinedUse);

/// Why a relation cannot be used as a strict total order.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TotalOrderError {
    #[error("relation contains the reflexive pair ({0}, {0})")]
    Reflexive(String),
    #[error("relation contains both ({0}, {1}) and ({1}, {0})")]
    Symmetric(String, String),
    #[error("relation relates neither ({0}, {1}) nor ({1}, {0})")]
    Incomparable(String, String),
    #[error("relation is not transitive; pair ({0}, {1}) contradicts the induced ranking")]
    NotTransitive(String, String),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}

/// An instance file that could not be read.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("subset must contain at least two distinct states")]
    SubsetTooSmall,
    #[error("vertex cover bound {k} exceeds the {vertices} vertices")]
    CoverBoundTooLarge { k: usize, vertices: usize },
    #[error("edge ({0}, {1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error(transparent)]
    Automaton(#[from] AutomatonError),
}
