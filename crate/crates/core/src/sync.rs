//! Unconstrained synchronization: the squared automaton and pair merging.

use std::collections::{HashMap, VecDeque};

use crate::automaton::{Automaton, LetterId, StateId, StateSet, Word};
use crate::error::AutomatonError;

const UNREACHABLE: u32 = u32::MAX;

/// Shortest merging distances for every ordered state pair, from a
/// backward breadth-first search in the squared automaton.
#[derive(Clone, Debug)]
pub struct PairMergeTable {
    n: usize,
    dist: Vec<u32>,
}

impl PairMergeTable {
    pub fn new(a: &Automaton) -> Result<Self, AutomatonError> {
        if !a.is_complete() {
            return Err(AutomatonError::Partial);
        }
        let n = a.num_states();
        let mut preds: Vec<Vec<Vec<usize>>> = vec![vec![Vec::new(); n]; a.num_letters()];
        for q in a.state_ids() {
            for x in a.letter_ids() {
                let t = a.delta(q, x).expect("complete");
                preds[x.0][t.0].push(q.0);
            }
        }
        let mut dist = vec![UNREACHABLE; n * n];
        let mut queue = VecDeque::new();
        for q in 0..n {
            dist[q * n + q] = 0;
            queue.push_back((q, q));
        }
        while let Some((t1, t2)) = queue.pop_front() {
            let d = dist[t1 * n + t2];
            for per_letter in &preds {
                for &s1 in &per_letter[t1] {
                    for &s2 in &per_letter[t2] {
                        let slot = &mut dist[s1 * n + s2];
                        if *slot == UNREACHABLE {
                            *slot = d + 1;
                            queue.push_back((s1, s2));
                        }
                    }
                }
            }
        }
        Ok(PairMergeTable { n, dist })
    }

    pub fn distance(&self, p: StateId, q: StateId) -> Option<usize> {
        let d = self.dist[p.0 * self.n + q.0];
        (d != UNREACHABLE).then_some(d as usize)
    }

    pub fn all_mergeable(&self) -> bool {
        self.dist.iter().all(|&d| d != UNREACHABLE)
    }

    /// The lexicographically smallest shortest word merging `p` and `q`.
    pub fn merging_word(&self, a: &Automaton, p: StateId, q: StateId) -> Option<Word> {
        let mut d = self.distance(p, q)?;
        let (mut p, mut q) = (p, q);
        let mut w = Word::empty();
        while d > 0 {
            let (x, np, nq) = a
                .letter_ids()
                .find_map(|x| {
                    let (np, nq) = (a.delta(p, x)?, a.delta(q, x)?);
                    (self.distance(np, nq) == Some(d - 1)).then_some((x, np, nq))
                })
                .expect("distance labels are consistent");
            w.push(x);
            p = np;
            q = nq;
            d -= 1;
        }
        Some(w)
    }
}

/// Classic synchronization of a start set in a complete automaton.
///
/// Repeatedly merges the two smallest active states by their shortest merging
/// word. For the full state set a failed merge proves the negative; for a
/// proper subset the greedy route is only sufficient, so a failure falls back
/// to breadth-first search over subsets.
pub fn classic_sync(a: &Automaton, s: &StateSet) -> Result<Option<Word>, AutomatonError> {
    let table = PairMergeTable::new(a)?;
    if s.is_empty() {
        return Ok(None);
    }
    let mut active = s.clone();
    let mut w = Word::empty();
    while active.len() > 1 {
        let (p, q) = {
            let mut it = active.iter();
            (it.next().unwrap(), it.next().unwrap())
        };
        match table.merging_word(a, p, q) {
            Some(m) => {
                active = a.image_word(&active, &m).expect("complete");
                w.extend_from(&m);
            }
            None if s.len() == a.num_states() => return Ok(None),
            None => return Ok(subset_sync_bfs(a, s)),
        }
    }
    Ok(Some(w))
}

/// Shortest word taking `s` to a singleton through defined transitions only.
pub(crate) fn subset_sync_bfs(a: &Automaton, s: &StateSet) -> Option<Word> {
    if s.is_empty() {
        return None;
    }
    let mut parent: HashMap<StateSet, Option<(StateSet, LetterId)>> = HashMap::new();
    parent.insert(s.clone(), None);
    let mut queue = VecDeque::from([s.clone()]);
    let mut goal = None;
    'search: while let Some(cur) = queue.pop_front() {
        if cur.is_singleton() {
            goal = Some(cur);
            break;
        }
        for x in a.letter_ids() {
            if let Ok(next) = a.image(&cur, x) {
                if !parent.contains_key(&next) {
                    parent.insert(next.clone(), Some((cur.clone(), x)));
                    if next.is_singleton() {
                        goal = Some(next);
                        break 'search;
                    }
                    queue.push_back(next);
                }
            }
        }
    }
    let mut cur = goal?;
    let mut letters = Vec::new();
    while let Some(Some((prev, x))) = parent.get(&cur) {
        letters.push(*x);
        cur = prev.clone();
    }
    letters.reverse();
    Some(Word::from(letters))
}
