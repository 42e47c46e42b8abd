//! Deterministic, possibly partial, semi-automata and their action on states,
//! paths and state sets.
//!
//! States and letters are arbitrary string tokens. Internally they are dense
//! indices in declaration order, and every tie-break in this crate uses that
//! order.

use std::collections::{BinaryHeap, HashMap};
use std::cmp::Reverse;
use std::fmt;
use std::ops::Deref;

use crate::bitset::BitSet;
use crate::error::AutomatonError;

/// Index of a state in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateId(pub usize);

/// Index of a letter in declaration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LetterId(pub usize);

impl StateId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

impl LetterId {
    #[inline]
    pub fn index(self) -> usize {
        self.0
    }
}

/// A finite word over an automaton's alphabet. The empty word is valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<LetterId>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn push(&mut self, x: LetterId) {
        self.0.push(x);
    }

    pub fn extend_from(&mut self, other: &Word) {
        self.0.extend_from_slice(&other.0);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        w.extend_from(other);
        w
    }

    pub fn letters(&self) -> &[LetterId] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<LetterId> {
        self.0
    }
}

impl Deref for Word {
    type Target = [LetterId];

    fn deref(&self) -> &[LetterId] {
        &self.0
    }
}

impl From<Vec<LetterId>> for Word {
    fn from(v: Vec<LetterId>) -> Self {
        Word(v)
    }
}

impl FromIterator<LetterId> for Word {
    fn from_iter<I: IntoIterator<Item = LetterId>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// A subset of an automaton's states.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StateSet(BitSet);

impl StateSet {
    pub fn empty(n: usize) -> Self {
        StateSet(BitSet::new(n))
    }

    pub fn full(n: usize) -> Self {
        StateSet(BitSet::full(n))
    }

    pub fn singleton(n: usize, q: StateId) -> Self {
        StateSet(BitSet::from_indices(n, [q.0]))
    }

    pub fn from_states(n: usize, states: impl IntoIterator<Item = StateId>) -> Self {
        StateSet(BitSet::from_indices(n, states.into_iter().map(|q| q.0)))
    }

    pub fn universe(&self) -> usize {
        self.0.capacity()
    }

    #[inline]
    pub fn contains(&self, q: StateId) -> bool {
        self.0.contains(q.0)
    }

    pub fn insert(&mut self, q: StateId) -> bool {
        self.0.insert(q.0)
    }

    pub fn remove(&mut self, q: StateId) -> bool {
        self.0.remove(q.0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_singleton(&self) -> bool {
        self.len() == 1
    }

    pub fn is_subset(&self, other: &StateSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn first(&self) -> Option<StateId> {
        self.0.first().map(StateId)
    }

    pub fn iter(&self) -> impl Iterator<Item = StateId> + '_ {
        self.0.iter().map(StateId)
    }
}

impl fmt::Debug for StateSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.0.iter()).finish()
    }
}

/// The first use of an undefined transition while reading a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UndefinedUse {
    /// 1-based position of the letter that could not be read.
    pub position: usize,
    pub state: StateId,
    pub letter: LetterId,
}

/// The active-set sequence `A_0 .. A_m` of a word applied to a set.
///
/// When a transition is undefined, `sets` stops at the last configuration
/// that could be computed and `undefined` names the failing step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetRun {
    pub sets: Vec<StateSet>,
    pub undefined: Option<UndefinedUse>,
}

impl SetRun {
    pub fn last(&self) -> &StateSet {
        self.sets.last().expect("a run always holds its start set")
    }
}

/// The path `q.w[0], q.w[1], ..` induced by a word from a single state.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathRun {
    pub states: Vec<StateId>,
    pub undefined: Option<UndefinedUse>,
}

/// A deterministic semi-automaton with a possibly partial transition table.
#[derive(Clone, PartialEq, Eq)]
pub struct Automaton {
    states: Vec<String>,
    letters: Vec<String>,
    state_index: HashMap<String, StateId>,
    letter_index: HashMap<String, LetterId>,
    table: Vec<Option<StateId>>,
}

impl fmt::Debug for Automaton {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for q in self.state_ids() {
            for x in self.letter_ids() {
                if let Some(t) = self.delta(q, x) {
                    m.entry(
                        &format_args!("({}, {})", self.state_name(q), self.letter_name(x)),
                        &self.state_name(t),
                    );
                }
            }
        }
        m.finish()
    }
}

/// Incremental construction of an [`Automaton`] from named tokens.
#[derive(Clone, Debug)]
pub struct AutomatonBuilder {
    automaton: Automaton,
}

impl AutomatonBuilder {
    pub fn transition(&mut self, from: &str, letter: &str, to: &str) -> Result<&mut Self, AutomatonError> {
        let q = self.automaton.state(from)?;
        let x = self.automaton.letter(letter)?;
        let t = self.automaton.state(to)?;
        self.automaton.set_transition(q, x, t)?;
        Ok(self)
    }

    pub fn build(self) -> Automaton {
        self.automaton
    }
}

fn index_tokens<T: Copy>(
    tokens: &[String],
    wrap: impl Fn(usize) -> T,
    dup: impl Fn(String) -> AutomatonError,
) -> Result<HashMap<String, T>, AutomatonError> {
    let mut index = HashMap::with_capacity(tokens.len());
    for (i, tok) in tokens.iter().enumerate() {
        if index.insert(tok.clone(), wrap(i)).is_some() {
            return Err(dup(tok.clone()));
        }
    }
    Ok(index)
}

impl Automaton {
    /// An automaton with the given states and letters and no transitions.
    pub fn new<S, L>(
        states: impl IntoIterator<Item = S>,
        letters: impl IntoIterator<Item = L>,
    ) -> Result<Self, AutomatonError>
    where
        S: Into<String>,
        L: Into<String>,
    {
        let states: Vec<String> = states.into_iter().map(Into::into).collect();
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        let state_index = index_tokens(&states, StateId, AutomatonError::DuplicateState)?;
        let letter_index = index_tokens(&letters, LetterId, AutomatonError::DuplicateLetter)?;
        let table = vec![None; states.len() * letters.len()];
        Ok(Automaton {
            states,
            letters,
            state_index,
            letter_index,
            table,
        })
    }

    pub fn builder<S, L>(
        states: impl IntoIterator<Item = S>,
        letters: impl IntoIterator<Item = L>,
    ) -> Result<AutomatonBuilder, AutomatonError>
    where
        S: Into<String>,
        L: Into<String>,
    {
        Ok(AutomatonBuilder {
            automaton: Automaton::new(states, letters)?,
        })
    }

    /// Builds an automaton from a row-major table indexed by `state * k + letter`.
    pub fn from_table<S, L>(
        states: impl IntoIterator<Item = S>,
        letters: impl IntoIterator<Item = L>,
        table: Vec<Option<usize>>,
    ) -> Result<Self, AutomatonError>
    where
        S: Into<String>,
        L: Into<String>,
    {
        let mut a = Automaton::new(states, letters)?;
        if table.len() != a.table.len() {
            return Err(AutomatonError::TableShape {
                expected: a.table.len(),
                found: table.len(),
            });
        }
        for (slot, t) in table.into_iter().enumerate() {
            if let Some(t) = t {
                if t >= a.num_states() {
                    return Err(AutomatonError::StateOutOfRange(t));
                }
                a.table[slot] = Some(StateId(t));
            }
        }
        Ok(a)
    }

    /// Sets `delta(q, x) = t`; rejects a second target for the same pair.
    pub fn set_transition(&mut self, q: StateId, x: LetterId, t: StateId) -> Result<(), AutomatonError> {
        self.check_state(q)?;
        self.check_letter(x)?;
        self.check_state(t)?;
        let slot = self.slot(q, x);
        if self.table[slot].is_some() {
            return Err(AutomatonError::DuplicateTransition {
                state: self.states[q.0].clone(),
                letter: self.letters[x.0].clone(),
            });
        }
        self.table[slot] = Some(t);
        Ok(())
    }

    /// Replaces (or removes) the target of `(q, x)`.
    pub fn replace_transition(&mut self, q: StateId, x: LetterId, t: Option<StateId>) {
        let slot = self.slot(q, x);
        self.table[slot] = t;
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_letters(&self) -> usize {
        self.letters.len()
    }

    pub fn state_ids(&self) -> impl Iterator<Item = StateId> + Clone {
        (0..self.states.len()).map(StateId)
    }

    pub fn letter_ids(&self) -> impl Iterator<Item = LetterId> + Clone {
        (0..self.letters.len()).map(LetterId)
    }

    pub fn state_names(&self) -> &[String] {
        &self.states
    }

    pub fn letter_names(&self) -> &[String] {
        &self.letters
    }

    pub fn state_name(&self, q: StateId) -> &str {
        &self.states[q.0]
    }

    pub fn letter_name(&self, x: LetterId) -> &str {
        &self.letters[x.0]
    }

    pub fn state(&self, name: &str) -> Result<StateId, AutomatonError> {
        self.state_index
            .get(name)
            .copied()
            .ok_or_else(|| AutomatonError::UnknownState(name.to_string()))
    }

    pub fn letter(&self, name: &str) -> Result<LetterId, AutomatonError> {
        self.letter_index
            .get(name)
            .copied()
            .ok_or_else(|| AutomatonError::UnknownLetter(name.to_string()))
    }

    /// Parses a word from letter names.
    pub fn word<'a>(&self, letters: impl IntoIterator<Item = &'a str>) -> Result<Word, AutomatonError> {
        letters.into_iter().map(|l| self.letter(l)).collect()
    }

    /// Parses a word written as concatenated single-character letter names.
    pub fn word_from_chars(&self, text: &str) -> Result<Word, AutomatonError> {
        let mut buf = [0u8; 4];
        text.chars().map(|c| self.letter(c.encode_utf8(&mut buf))).collect()
    }

    pub fn full_set(&self) -> StateSet {
        StateSet::full(self.num_states())
    }

    pub fn set_of<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Result<StateSet, AutomatonError> {
        let mut s = StateSet::empty(self.num_states());
        for name in names {
            s.insert(self.state(name)?);
        }
        Ok(s)
    }

    fn check_state(&self, q: StateId) -> Result<(), AutomatonError> {
        if q.0 < self.states.len() {
            Ok(())
        } else {
            Err(AutomatonError::StateOutOfRange(q.0))
        }
    }

    fn check_letter(&self, x: LetterId) -> Result<(), AutomatonError> {
        if x.0 < self.letters.len() {
            Ok(())
        } else {
            Err(AutomatonError::LetterOutOfRange(x.0))
        }
    }

    #[inline]
    fn slot(&self, q: StateId, x: LetterId) -> usize {
        q.0 * self.letters.len() + x.0
    }

    /// Unchecked transition lookup; `None` means the transition is undefined.
    #[inline]
    pub fn delta(&self, q: StateId, x: LetterId) -> Option<StateId> {
        self.table[self.slot(q, x)]
    }

    /// Checked transition lookup. Undeclared inputs are errors; an undefined
    /// transition is `Ok(None)`.
    pub fn step(&self, q: StateId, x: LetterId) -> Result<Option<StateId>, AutomatonError> {
        self.check_state(q)?;
        self.check_letter(x)?;
        Ok(self.delta(q, x))
    }

    pub fn is_complete(&self) -> bool {
        self.table.iter().all(Option::is_some)
    }

    /// Whether `x` is defined on every member of `s`.
    pub fn defined_on(&self, s: &StateSet, x: LetterId) -> bool {
        s.iter().all(|q| self.delta(q, x).is_some())
    }

    /// Image of `s` under one letter, or the smallest member on which it is undefined.
    pub fn image(&self, s: &StateSet, x: LetterId) -> Result<StateSet, StateId> {
        let mut out = StateSet::empty(self.num_states());
        for q in s.iter() {
            match self.delta(q, x) {
                Some(t) => {
                    out.insert(t);
                }
                None => return Err(q),
            }
        }
        Ok(out)
    }

    /// Image of `s` under a whole word, or the first undefined use.
    pub fn image_word(&self, s: &StateSet, w: &[LetterId]) -> Result<StateSet, UndefinedUse> {
        let mut cur = s.clone();
        for (i, &x) in w.iter().enumerate() {
            cur = self.image(&cur, x).map_err(|state| UndefinedUse {
                position: i + 1,
                state,
                letter: x,
            })?;
        }
        Ok(cur)
    }

    pub fn run_set(&self, s: &StateSet, w: &[LetterId]) -> SetRun {
        let mut sets = Vec::with_capacity(w.len() + 1);
        sets.push(s.clone());
        for (i, &x) in w.iter().enumerate() {
            match self.image(sets.last().unwrap(), x) {
                Ok(next) => sets.push(next),
                Err(state) => {
                    return SetRun {
                        sets,
                        undefined: Some(UndefinedUse {
                            position: i + 1,
                            state,
                            letter: x,
                        }),
                    }
                }
            }
        }
        SetRun { sets, undefined: None }
    }

    pub fn run_path(&self, r: StateId, w: &[LetterId]) -> PathRun {
        let mut states = Vec::with_capacity(w.len() + 1);
        states.push(r);
        let mut cur = r;
        for (i, &x) in w.iter().enumerate() {
            match self.delta(cur, x) {
                Some(t) => {
                    states.push(t);
                    cur = t;
                }
                None => {
                    return PathRun {
                        states,
                        undefined: Some(UndefinedUse {
                            position: i + 1,
                            state: cur,
                            letter: x,
                        }),
                    }
                }
            }
        }
        PathRun { states, undefined: None }
    }

    /// A topological order of the transition graph with self-loops ignored,
    /// or `None` if some cycle is longer than a self-loop. Among ready states
    /// the one declared first is emitted first.
    pub fn is_weakly_acyclic(&self) -> Option<Vec<StateId>> {
        let n = self.num_states();
        let mut indegree = vec![0usize; n];
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for q in self.state_ids() {
            for x in self.letter_ids() {
                if let Some(t) = self.delta(q, x) {
                    if t != q {
                        succ[q.0].push(t.0);
                        indegree[t.0] += 1;
                    }
                }
            }
        }
        let mut ready: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&q| indegree[q] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(q)) = ready.pop() {
            order.push(StateId(q));
            for &t in &succ[q] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    ready.push(Reverse(t));
                }
            }
        }
        (order.len() == n).then_some(order)
    }

    /// Renders a word with this automaton's letter names. Single-character
    /// alphabets are written without separators, others with `.`; the empty
    /// word is `ε`.
    pub fn format_word(&self, w: &[LetterId]) -> String {
        if w.is_empty() {
            return "ε".to_string();
        }
        let sep = if self.letters.iter().all(|l| l.chars().count() == 1) {
            ""
        } else {
            "."
        };
        w.iter().map(|&x| self.letter_name(x)).collect::<Vec<_>>().join(sep)
    }

    /// Inverse of [`Automaton::format_word`]; whitespace is also accepted as a separator.
    pub fn parse_word(&self, text: &str) -> Result<Word, AutomatonError> {
        let text = text.trim();
        if text.is_empty() || text == "ε" || text == "-" {
            return Ok(Word::empty());
        }
        if text.contains(['.', ' ', '\t', ',']) {
            return self.word(text.split(['.', ' ', '\t', ',']).filter(|t| !t.is_empty()));
        }
        if self.letters.iter().all(|l| l.chars().count() == 1) {
            self.word_from_chars(text)
        } else {
            self.word([text])
        }
    }

    pub fn format_set(&self, s: &StateSet) -> String {
        let names: Vec<&str> = s.iter().map(|q| self.state_name(q)).collect();
        format!("{{{}}}", names.join(", "))
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Automaton;

    /// The five-state example automaton over `{a, b}` whose paths under
    /// `baabba` all end in state 3.
    pub fn fig1() -> Automaton {
        let mut b = Automaton::builder(["1", "2", "3", "4", "5"], ["a", "b"]).unwrap();
        for (q, x, t) in [
            ("1", "a", "1"),
            ("1", "b", "2"),
            ("2", "a", "3"),
            ("2", "b", "4"),
            ("3", "a", "4"),
            ("3", "b", "2"),
            ("4", "a", "3"),
            ("4", "b", "1"),
            ("5", "a", "4"),
            ("5", "b", "1"),
        ] {
            b.transition(q, x, t).unwrap();
        }
        b.build()
    }

    /// Partial weakly acyclic automaton `q1 < q2 < q3`; `b` is undefined on `q1`.
    pub fn p1() -> Automaton {
        let mut b = Automaton::builder(["q1", "q2", "q3"], ["a", "b"]).unwrap();
        for (q, x, t) in [
            ("q1", "a", "q2"),
            ("q2", "a", "q2"),
            ("q3", "a", "q3"),
            ("q2", "b", "q3"),
            ("q3", "b", "q3"),
        ] {
            b.transition(q, x, t).unwrap();
        }
        b.build()
    }

    /// Complete three-state chain used for total-order checks.
    pub fn c1() -> Automaton {
        let mut b = Automaton::builder(["q1", "q2", "q3"], ["a", "b"]).unwrap();
        for (q, x, t) in [
            ("q1", "a", "q2"),
            ("q1", "b", "q1"),
            ("q2", "a", "q2"),
            ("q2", "b", "q3"),
            ("q3", "a", "q3"),
            ("q3", "b", "q3"),
        ] {
            b.transition(q, x, t).unwrap();
        }
        b.build()
    }
}
