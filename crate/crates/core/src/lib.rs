//! Synchronizing words under state-order constraints.
//!
//! Words are checked against five order kinds (`ll_set`, `leq_set`,
//! `ll_path`, `leq_path`, `lf_path`) in two counting variants. The exact
//! decider is a breadth-first search over an enhanced powerset automaton;
//! strict total orders with `lf_path` admit a polynomial engine, which also
//! gives careful synchronization of partial weakly acyclic automata.

pub mod automaton;
pub mod bitset;
pub mod certificate;
pub mod error;
pub mod generate;
pub mod io;
pub mod oracle;
pub mod order;
pub mod powerset;
pub mod reductions;
pub mod sync;
pub mod total;

pub use automaton::{Automaton, AutomatonBuilder, LetterId, StateId, StateSet, Word};
pub use error::{AutomatonError, ParseError, PartialityError, ReductionError, TotalOrderError};
pub use io::Instance;
pub use order::{check_word, induced_order, order_holds, relation_satisfied, OrderKind, Relation, Satisfaction, Variant};

/// Answer of a decision procedure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Positive(Word),
    Negative,
    /// A resource budget ran out before the answer was settled.
    Inconclusive,
}

impl Outcome {
    pub fn witness(&self) -> Option<&Word> {
        match self {
            Outcome::Positive(w) => Some(w),
            _ => None,
        }
    }

    pub fn is_positive(&self) -> bool {
        matches!(self, Outcome::Positive(_))
    }
}
