//! Word-induced state orders.
//!
//! A word `w` read from a base (a set of states, or each start state as its
//! own path) induces first and last occurrence positions for every state. The
//! five order kinds compare these positions; this module evaluates them
//! literally and is the reference every decider is checked against.

use std::fmt;
use std::str::FromStr;

use crate::automaton::{Automaton, LetterId, StateId, StateSet};
use crate::error::{AutomatonError, PartialityError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OrderKind {
    /// `last(p) < last(q)` on the active-set sequence.
    LlSet,
    /// `last(p) <= last(q)` on the active-set sequence.
    LeqSet,
    /// `last(p) < last(q)` on every path.
    LlPath,
    /// `last(p) <= last(q)` on every path.
    LeqPath,
    /// `last(p) < first(q)` on every path.
    LfPath,
}

impl OrderKind {
    pub const ALL: [OrderKind; 5] = [
        OrderKind::LlSet,
        OrderKind::LeqSet,
        OrderKind::LlPath,
        OrderKind::LeqPath,
        OrderKind::LfPath,
    ];

    pub fn is_path_kind(self) -> bool {
        matches!(self, OrderKind::LlPath | OrderKind::LeqPath | OrderKind::LfPath)
    }

    pub fn name(self) -> &'static str {
        match self {
            OrderKind::LlSet => "ll_set",
            OrderKind::LeqSet => "leq_set",
            OrderKind::LlPath => "ll_path",
            OrderKind::LeqPath => "leq_path",
            OrderKind::LfPath => "lf_path",
        }
    }

    fn compare(self, p: &OccurrenceTable, q: &OccurrenceTable, ps: StateId, qs: StateId) -> bool {
        match self {
            OrderKind::LlSet | OrderKind::LlPath => p.last(ps) < q.last(qs),
            OrderKind::LeqSet | OrderKind::LeqPath => p.last(ps) <= q.last(qs),
            OrderKind::LfPath => p.last(ps) < q.first(qs),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        OrderKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| format!("unknown order kind `{s}`"))
    }
}

/// Whether the initial configuration (position 0) counts as an occurrence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    From0,
    From1,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::From0, Variant::From1];

    pub fn name(self) -> &'static str {
        match self {
            Variant::From0 => "from0",
            Variant::From1 => "from1",
        }
    }

    fn first_counted_position(self) -> usize {
        match self {
            Variant::From0 => 0,
            Variant::From1 => 1,
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Variant::ALL
            .into_iter()
            .find(|v| v.name() == s)
            .ok_or_else(|| format!("unknown variant `{s}`"))
    }
}

/// A finite set of ordered state pairs, kept sorted by declaration index.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Relation {
    pairs: Vec<(StateId, StateId)>,
}

impl Relation {
    pub fn new(pairs: impl IntoIterator<Item = (StateId, StateId)>) -> Self {
        let mut pairs: Vec<_> = pairs.into_iter().collect();
        pairs.sort_unstable();
        pairs.dedup();
        Relation { pairs }
    }

    pub fn empty() -> Self {
        Relation::default()
    }

    /// Builds a relation from state names.
    pub fn from_names<'a>(
        a: &Automaton,
        pairs: impl IntoIterator<Item = (&'a str, &'a str)>,
    ) -> Result<Self, AutomatonError> {
        let pairs = pairs
            .into_iter()
            .map(|(p, q)| Ok((a.state(p)?, a.state(q)?)))
            .collect::<Result<Vec<_>, AutomatonError>>()?;
        Ok(Relation::new(pairs))
    }

    /// The strict total order `order[0] < order[1] < ..`.
    pub fn strict_total(order: &[StateId]) -> Self {
        let mut pairs = Vec::with_capacity(order.len() * order.len().saturating_sub(1) / 2);
        for (i, &p) in order.iter().enumerate() {
            for &q in &order[i + 1..] {
                pairs.push((p, q));
            }
        }
        Relation::new(pairs)
    }

    pub fn pairs(&self) -> &[(StateId, StateId)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn contains(&self, pair: (StateId, StateId)) -> bool {
        self.pairs.binary_search(&pair).is_ok()
    }

    pub fn is_subset(&self, other: &Relation) -> bool {
        self.pairs.iter().all(|&p| other.contains(p))
    }

    pub fn union(&self, other: &Relation) -> Relation {
        Relation::new(self.pairs.iter().chain(&other.pairs).copied())
    }

    /// Checks that every component is a declared state of `a`.
    pub fn check(&self, a: &Automaton) -> Result<(), AutomatonError> {
        let n = a.num_states();
        match self.pairs.iter().find(|(p, q)| p.0 >= n || q.0 >= n) {
            Some(&(p, q)) => Err(AutomatonError::StateOutOfRange(p.0.max(q.0))),
            None => Ok(()),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (StateId, StateId)> + '_ {
        self.pairs.iter().copied()
    }
}

/// First and last occurrence positions of every state for one base.
///
/// A state that never occurs has `first = |w| + 1` and `last = -1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OccurrenceTable {
    word_len: usize,
    first: Vec<i64>,
    last: Vec<i64>,
}

impl OccurrenceTable {
    fn new(n: usize, word_len: usize) -> Self {
        OccurrenceTable {
            word_len,
            first: vec![word_len as i64 + 1; n],
            last: vec![-1; n],
        }
    }

    fn record(&mut self, q: StateId, position: usize) {
        let pos = position as i64;
        let f = &mut self.first[q.0];
        *f = (*f).min(pos);
        let l = &mut self.last[q.0];
        *l = (*l).max(pos);
    }

    pub fn first(&self, q: StateId) -> i64 {
        self.first[q.0]
    }

    pub fn last(&self, q: StateId) -> i64 {
        self.last[q.0]
    }

    pub fn occurs(&self, q: StateId) -> bool {
        self.last[q.0] >= 0
    }

    pub fn word_len(&self) -> usize {
        self.word_len
    }
}

/// What occurrence positions are measured over.
#[derive(Clone, Copy, Debug)]
pub enum Base<'a> {
    Set(&'a StateSet),
    State(StateId),
}

pub fn occurrences(
    a: &Automaton,
    base: Base<'_>,
    w: &[LetterId],
    v: Variant,
) -> Result<OccurrenceTable, PartialityError> {
    let mut table = OccurrenceTable::new(a.num_states(), w.len());
    let from = v.first_counted_position();
    match base {
        Base::Set(s) => {
            let run = a.run_set(s, w);
            if let Some(u) = run.undefined {
                return Err(PartialityError(u));
            }
            for (i, set) in run.sets.iter().enumerate().skip(from) {
                for q in set.iter() {
                    table.record(q, i);
                }
            }
        }
        Base::State(r) => {
            let run = a.run_path(r, w);
            if let Some(u) = run.undefined {
                return Err(PartialityError(u));
            }
            for (i, &q) in run.states.iter().enumerate().skip(from) {
                table.record(q, i);
            }
        }
    }
    Ok(table)
}

/// Outcome of checking `R ⊆ ⋖_w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Satisfaction {
    Satisfied,
    /// The first violated pair in the relation's canonical order.
    Violated(StateId, StateId),
}

impl Satisfaction {
    pub fn is_satisfied(self) -> bool {
        self == Satisfaction::Satisfied
    }
}

/// All occurrence tables a word induces from a start set: one for the set
/// sequence and one per start state for the paths.
#[derive(Clone, Debug)]
pub struct Evaluation {
    set_table: OccurrenceTable,
    path_tables: Vec<OccurrenceTable>,
    image: StateSet,
}

impl Evaluation {
    pub fn new(a: &Automaton, start: &StateSet, w: &[LetterId], v: Variant) -> Result<Self, PartialityError> {
        let set_table = occurrences(a, Base::Set(start), w, v)?;
        let path_tables = start
            .iter()
            .map(|r| occurrences(a, Base::State(r), w, v))
            .collect::<Result<Vec<_>, _>>()?;
        let image = a
            .image_word(start, w)
            .expect("definedness was established by the occurrence pass");
        Ok(Evaluation {
            set_table,
            path_tables,
            image,
        })
    }

    pub fn set_table(&self) -> &OccurrenceTable {
        &self.set_table
    }

    pub fn image(&self) -> &StateSet {
        &self.image
    }

    pub fn holds(&self, kind: OrderKind, p: StateId, q: StateId) -> bool {
        if kind.is_path_kind() {
            self.path_tables.iter().all(|t| kind.compare(t, t, p, q))
        } else {
            kind.compare(&self.set_table, &self.set_table, p, q)
        }
    }

    pub fn satisfies(&self, kind: OrderKind, r: &Relation) -> Satisfaction {
        match r.iter().find(|&(p, q)| !self.holds(kind, p, q)) {
            Some((p, q)) => Satisfaction::Violated(p, q),
            None => Satisfaction::Satisfied,
        }
    }

    pub fn induced(&self, kind: OrderKind) -> Relation {
        let n = self.set_table.first.len();
        let mut pairs = Vec::new();
        for p in (0..n).map(StateId) {
            for q in (0..n).map(StateId) {
                if self.holds(kind, p, q) {
                    pairs.push((p, q));
                }
            }
        }
        Relation::new(pairs)
    }
}

pub fn order_holds(
    a: &Automaton,
    kind: OrderKind,
    v: Variant,
    w: &[LetterId],
    pair: (StateId, StateId),
) -> Result<bool, PartialityError> {
    Ok(Evaluation::new(a, &a.full_set(), w, v)?.holds(kind, pair.0, pair.1))
}

pub fn relation_satisfied(
    a: &Automaton,
    kind: OrderKind,
    v: Variant,
    w: &[LetterId],
    r: &Relation,
) -> Result<Satisfaction, PartialityError> {
    Ok(Evaluation::new(a, &a.full_set(), w, v)?.satisfies(kind, r))
}

pub fn induced_order(a: &Automaton, kind: OrderKind, v: Variant, w: &[LetterId]) -> Result<Relation, PartialityError> {
    Ok(Evaluation::new(a, &a.full_set(), w, v)?.induced(kind))
}

/// Full verdict on a candidate witness: relation, definedness, synchronization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WordCheck {
    /// The word reads through an undefined transition.
    Undefined(PartialityError),
    Checked { satisfaction: Satisfaction, image: StateSet },
}

impl WordCheck {
    /// True iff the word is defined, satisfies the relation and synchronizes.
    pub fn is_witness(&self) -> bool {
        matches!(self, WordCheck::Checked { satisfaction: Satisfaction::Satisfied, image } if image.is_singleton())
    }
}

pub fn check_word(
    a: &Automaton,
    kind: OrderKind,
    v: Variant,
    r: &Relation,
    start: &StateSet,
    w: &[LetterId],
) -> WordCheck {
    match Evaluation::new(a, start, w, v) {
        Err(e) => WordCheck::Undefined(e),
        Ok(eval) => WordCheck::Checked {
            satisfaction: eval.satisfies(kind, r),
            image: eval.image,
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::fixtures::{fig1, p1};

    fn s(a: &Automaton, name: &str) -> StateId {
        a.state(name).unwrap()
    }

    #[test]
    fn fig1_set_occurrences() {
        let a = fig1();
        let w = a.word_from_chars("baabba").unwrap();
        let t = occurrences(&a, Base::Set(&a.full_set()), &w, Variant::From0).unwrap();
        assert_eq!(t.last(s(&a, "1")), 4);
        assert_eq!(t.last(s(&a, "2")), 5);
        assert_eq!(t.last(s(&a, "4")), 5);
        assert_eq!(t.last(s(&a, "5")), 0);
        assert_eq!(t.first(s(&a, "3")), 0);
    }

    #[test]
    fn fig1_path_occurrences_and_variant() {
        let a = fig1();
        let w = a.word_from_chars("baabba").unwrap();
        let t = occurrences(&a, Base::State(s(&a, "5")), &w, Variant::From0).unwrap();
        assert_eq!(t.last(s(&a, "5")), 0);
        assert_eq!(t.first(s(&a, "2")), 4);
        assert_eq!(t.last(s(&a, "2")), 4);
        let t = occurrences(&a, Base::State(s(&a, "5")), &w, Variant::From1).unwrap();
        assert_eq!(t.last(s(&a, "5")), -1);
        assert_eq!(t.first(s(&a, "5")), 7);
        assert!(!t.occurs(s(&a, "5")));
    }

    #[test]
    fn partial_word_is_an_error() {
        let p = p1();
        let w = p.word_from_chars("b").unwrap();
        let err = occurrences(&p, Base::Set(&p.full_set()), &w, Variant::From0).unwrap_err();
        assert_eq!(err.0.position, 1);
        assert_eq!(err.0.state, s(&p, "q1"));
    }

    #[test]
    fn fig1_right_table() {
        let a = fig1();
        let w = a.word_from_chars("baabba").unwrap();
        let h = |k, p: &str, q: &str| order_holds(&a, k, Variant::From0, &w, (s(&a, p), s(&a, q))).unwrap();
        assert!(h(OrderKind::LlSet, "1", "2"));
        assert!(!h(OrderKind::LlSet, "2", "4"));
        assert!(h(OrderKind::LeqSet, "2", "4"));
        assert!(!h(OrderKind::LeqSet, "2", "1"));
        assert!(h(OrderKind::LlPath, "1", "2"));
        assert!(!h(OrderKind::LlPath, "5", "5"));
        assert!(h(OrderKind::LeqPath, "5", "5"));
        assert!(!h(OrderKind::LeqPath, "2", "4"));
        assert!(h(OrderKind::LfPath, "5", "2"));
        assert!(!h(OrderKind::LfPath, "4", "3"));
    }

    #[test]
    fn relation_reports_first_violation() {
        let a = fig1();
        let w = a.word_from_chars("baabba").unwrap();
        let r = Relation::from_names(&a, [("1", "2")]).unwrap();
        assert!(relation_satisfied(&a, OrderKind::LlSet, Variant::From1, &w, &r).unwrap().is_satisfied());
        let r = Relation::from_names(&a, [("5", "5"), ("1", "2")]).unwrap();
        assert_eq!(
            relation_satisfied(&a, OrderKind::LlPath, Variant::From0, &w, &r).unwrap(),
            Satisfaction::Violated(s(&a, "5"), s(&a, "5"))
        );
        for k in OrderKind::ALL {
            assert!(relation_satisfied(&a, k, Variant::From0, &w, &Relation::empty()).unwrap().is_satisfied());
        }
    }

    #[test]
    fn induced_orders_on_fig1() {
        let a = fig1();
        let w = a.word_from_chars("baabba").unwrap();
        let leq = induced_order(&a, OrderKind::LeqSet, Variant::From0, &w).unwrap();
        assert!(a.state_ids().all(|q| leq.contains((q, q))));
        let ll = induced_order(&a, OrderKind::LlSet, Variant::From0, &w).unwrap();
        assert!(a.state_ids().all(|q| !ll.contains((q, q))));
        assert!(ll.contains((s(&a, "5"), s(&a, "1"))));
        assert!(ll.is_subset(&leq) && ll != leq);
    }

    #[test]
    fn sentinel_arithmetic_for_absent_states() {
        // On the path from 4 under `a`, state 5 never occurs.
        let a = fig1();
        let w = a.word_from_chars("a").unwrap();
        let ev = Evaluation::new(&a, &StateSet::singleton(5, s(&a, "4")), &w, Variant::From0).unwrap();
        let (p, q) = (s(&a, "5"), s(&a, "5"));
        assert!(ev.holds(OrderKind::LfPath, p, q));
        assert!(!ev.holds(OrderKind::LlPath, p, q));
        assert!(ev.holds(OrderKind::LeqPath, p, q));
    }

    #[test]
    fn names_round_trip() {
        for k in OrderKind::ALL {
            assert_eq!(k.name().parse::<OrderKind>().unwrap(), k);
        }
        for v in Variant::ALL {
            assert_eq!(v.name().parse::<Variant>().unwrap(), v);
        }
        assert!("lt_set".parse::<OrderKind>().is_err());
    }
}
