//! `ll_path` synchronization via pair merging plus a tail word.
//!
//! A word `w_p` merging all states into some `r` is followed by a tail that
//! realizes the last occurrences of the relation's second components in a
//! guessed order. Guesses are enumerated exhaustively.

use std::collections::VecDeque;

use crate::automaton::{Automaton, LetterId, StateId, Word};
use crate::error::AutomatonError;
use crate::order::{check_word, OrderKind, Relation, Variant};
use crate::powerset;
use crate::sync::PairMergeTable;
use crate::Outcome;

pub const DEFAULT_ORDERING_BUDGET: usize = 40_320;

/// Whether every state pair can be merged, with the merging distances.
pub fn pairwise_merge(a: &Automaton) -> Result<(bool, PairMergeTable), AutomatonError> {
    let table = PairMergeTable::new(a)?;
    Ok((table.all_mergeable(), table))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TailResult {
    Found { word: Word, ordering: Vec<StateId> },
    Impossible,
    /// More orderings than the budget allows.
    Inconclusive,
}

/// A word from `r` along which every pair of `rel` satisfies `last(p) < last(q)`.
///
/// Orderings of the second components are tried in lexicographic order; a
/// failing prefix prunes every ordering extending it.
pub fn tail_word(a: &Automaton, rel: &Relation, r: StateId, budget: usize) -> TailResult {
    if rel.iter().any(|(p, q)| p == q) {
        return TailResult::Impossible;
    }
    let mut b: Vec<StateId> = rel.iter().map(|(_, q)| q).collect();
    b.sort_unstable();
    b.dedup();
    let orderings = (1..=b.len()).try_fold(1usize, |acc, i| acc.checked_mul(i));
    if orderings.map_or(true, |m| m > budget) {
        return TailResult::Inconclusive;
    }
    let mut search = TailSearch {
        a,
        rel,
        b: &b,
        used: vec![false; b.len()],
        ordering: Vec::new(),
        hops: Vec::new(),
    };
    let deleted = vec![false; a.num_states()];
    if search.extend(r, &deleted) {
        let word = search.hops.iter().fold(Word::empty(), |acc, h| acc.concat(h));
        TailResult::Found {
            word,
            ordering: search.ordering,
        }
    } else {
        TailResult::Impossible
    }
}

struct TailSearch<'a> {
    a: &'a Automaton,
    rel: &'a Relation,
    b: &'a [StateId],
    used: Vec<bool>,
    ordering: Vec<StateId>,
    hops: Vec<Word>,
}

impl TailSearch<'_> {
    fn extend(&mut self, at: StateId, deleted: &[bool]) -> bool {
        if self.ordering.len() == self.b.len() {
            return true;
        }
        for i in 0..self.b.len() {
            if self.used[i] {
                continue;
            }
            let target = self.b[i];
            let Some(hop) = shortest_path(self.a, at, target, deleted) else {
                continue;
            };
            let mut next = deleted.to_vec();
            for (p, q) in self.rel.iter() {
                if q == target {
                    next[p.0] = true;
                }
            }
            self.used[i] = true;
            self.ordering.push(target);
            self.hops.push(hop);
            if self.extend(target, &next) {
                return true;
            }
            self.used[i] = false;
            self.ordering.pop();
            self.hops.pop();
        }
        false
    }
}

/// Lexicographically smallest shortest word from `from` to `to` avoiding deleted states.
fn shortest_path(a: &Automaton, from: StateId, to: StateId, deleted: &[bool]) -> Option<Word> {
    if deleted[to.0] {
        return None;
    }
    if from == to {
        return Some(Word::empty());
    }
    let n = a.num_states();
    let mut parent: Vec<Option<(StateId, LetterId)>> = vec![None; n];
    let mut seen = vec![false; n];
    seen[from.0] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(q) = queue.pop_front() {
        for x in a.letter_ids() {
            let Some(t) = a.delta(q, x) else { continue };
            if seen[t.0] || deleted[t.0] {
                continue;
            }
            seen[t.0] = true;
            parent[t.0] = Some((q, x));
            if t == to {
                let mut letters = Vec::new();
                let mut cur = to;
                while let Some((p, x)) = parent[cur.0] {
                    letters.push(x);
                    cur = p;
                }
                letters.reverse();
                return Some(Word::from(letters));
            }
            queue.push_back(t);
        }
    }
    None
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateWitness {
    /// Each merge step: the two states merged and the word used.
    pub merges: Vec<(StateId, StateId, Word)>,
    pub merged_into: StateId,
    pub tail: Word,
    pub ordering: Vec<StateId>,
}

impl CertificateWitness {
    pub fn word(&self) -> Word {
        let mut w = Word::empty();
        for (_, _, m) in &self.merges {
            w.extend_from(m);
        }
        w.concat(&self.tail)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateResult {
    pub outcome: Outcome,
    pub certificate: Option<CertificateWitness>,
    /// The ordering budget was exceeded and the powerset search decided instead.
    pub fell_back: bool,
}

pub fn decide_ll_path(a: &Automaton, r: &Relation, v: Variant) -> Result<CertificateResult, AutomatonError> {
    decide_ll_path_with_budget(a, r, v, DEFAULT_ORDERING_BUDGET)
}

pub fn decide_ll_path_with_budget(
    a: &Automaton,
    r: &Relation,
    v: Variant,
    budget: usize,
) -> Result<CertificateResult, AutomatonError> {
    r.check(a)?;
    let negative = CertificateResult {
        outcome: Outcome::Negative,
        certificate: None,
        fell_back: false,
    };
    let (mergeable, table) = pairwise_merge(a)?;
    if !mergeable || r.iter().any(|(p, q)| p == q) {
        return Ok(negative);
    }
    let mut active = a.full_set();
    let mut merges = Vec::new();
    while active.len() > 1 {
        let (p, q) = {
            let mut it = active.iter();
            (it.next().unwrap(), it.next().unwrap())
        };
        let m = table.merging_word(a, p, q).expect("all pairs mergeable");
        active = a.image_word(&active, &m).expect("complete");
        merges.push((p, q, m));
    }
    let merged_into = active.first().expect("nonempty automaton");
    match tail_word(a, r, merged_into, budget) {
        TailResult::Found { word, ordering } => {
            let cert = CertificateWitness {
                merges,
                merged_into,
                tail: word,
                ordering,
            };
            let w = cert.word();
            debug_assert!(check_word(a, OrderKind::LlPath, v, r, &a.full_set(), &w).is_witness());
            Ok(CertificateResult {
                outcome: Outcome::Positive(w),
                certificate: Some(cert),
                fell_back: false,
            })
        }
        TailResult::Impossible => Ok(negative),
        TailResult::Inconclusive => {
            let res = powerset::decide(a, OrderKind::LlPath, v, r, &a.full_set());
            Ok(CertificateResult {
                outcome: res.outcome,
                certificate: None,
                fell_back: true,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::fixtures::fig1;

    fn rel(a: &Automaton, pairs: &[(&str, &str)]) -> Relation {
        Relation::from_names(a, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn merge_tables() {
        let a = fig1();
        assert!(pairwise_merge(&a).unwrap().0);
        let id = Automaton::from_table(["p", "q"], ["a"], vec![Some(0), Some(1)]).unwrap();
        assert!(!pairwise_merge(&id).unwrap().0);
    }

    #[test]
    fn tail_examples() {
        let a = fig1();
        let s3 = a.state("3").unwrap();
        match tail_word(&a, &rel(&a, &[("1", "2")]), s3, DEFAULT_ORDERING_BUDGET) {
            TailResult::Found { word, ordering } => {
                assert_eq!(a.format_word(&word), "b");
                assert_eq!(ordering, vec![a.state("2").unwrap()]);
            }
            other => panic!("{other:?}"),
        }
        assert_eq!(
            tail_word(&a, &Relation::empty(), s3, DEFAULT_ORDERING_BUDGET),
            TailResult::Found {
                word: Word::empty(),
                ordering: vec![]
            }
        );
        assert_eq!(
            tail_word(&a, &rel(&a, &[("1", "2"), ("2", "1")]), s3, DEFAULT_ORDERING_BUDGET),
            TailResult::Impossible
        );
    }

    #[test]
    fn ordering_budget() {
        let a = fig1();
        let r = rel(&a, &[("1", "2"), ("1", "3"), ("1", "4")]);
        assert_eq!(tail_word(&a, &r, StateId(0), 5), TailResult::Inconclusive);
        let res = decide_ll_path_with_budget(&a, &r, Variant::From0, 5).unwrap();
        assert!(res.fell_back);
        let exact = decide_ll_path(&a, &r, Variant::From0).unwrap();
        assert_eq!(res.outcome.is_positive(), exact.outcome.is_positive());
    }

    #[test]
    fn decide_examples() {
        let a = fig1();
        for v in Variant::ALL {
            let r = rel(&a, &[("1", "2")]);
            let res = decide_ll_path(&a, &r, v).unwrap();
            let w = res.outcome.witness().unwrap();
            assert!(check_word(&a, OrderKind::LlPath, v, &r, &a.full_set(), w).is_witness());
            assert_eq!(res.certificate.unwrap().word(), *w);
            assert_eq!(decide_ll_path(&a, &rel(&a, &[("5", "5")]), v).unwrap().outcome, Outcome::Negative);
            assert_eq!(decide_ll_path(&a, &rel(&a, &[("3", "5")]), v).unwrap().outcome, Outcome::Negative);
        }
    }
}
