//! Strict total orders under `lf_path`, and careful synchronization of
//! partial weakly acyclic automata.
//!
//! Under a strict total order every admissible path is non-decreasing, so the
//! problem is careful synchronization of the automaton with its backward
//! transitions removed. [`fast_decide`] runs the explore/iterate algorithm in
//! `O(k² n²)`; [`greedy_decide`] is the simpler `O(k n³)` baseline.

use crate::automaton::{Automaton, LetterId, StateId, StateSet, Word};
use crate::bitset::BitSet;
use crate::error::{AutomatonError, TotalOrderError};
use crate::order::{Relation, Variant};
use crate::powerset;
use crate::Outcome;

/// A strict total order on the states of an automaton.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalOrder {
    order: Vec<StateId>,
    rank: Vec<usize>,
}

impl TotalOrder {
    /// Validates `r` as irreflexive, asymmetric, total and transitive.
    pub fn from_relation(a: &Automaton, r: &Relation) -> Result<Self, TotalOrderError> {
        r.check(a)?;
        let n = a.num_states();
        let name = |q: StateId| a.state_name(q).to_string();
        let mut related = vec![false; n * n];
        for (p, q) in r.iter() {
            if p == q {
                return Err(TotalOrderError::Reflexive(name(p)));
            }
            related[p.0 * n + q.0] = true;
        }
        let mut indegree = vec![0usize; n];
        for p in 0..n {
            for q in p + 1..n {
                match (related[p * n + q], related[q * n + p]) {
                    (true, true) => return Err(TotalOrderError::Symmetric(name(StateId(p)), name(StateId(q)))),
                    (false, false) => {
                        return Err(TotalOrderError::Incomparable(name(StateId(p)), name(StateId(q))))
                    }
                    (true, false) => indegree[q] += 1,
                    (false, true) => indegree[p] += 1,
                }
            }
        }
        let mut order: Vec<StateId> = a.state_ids().collect();
        order.sort_by_key(|q| indegree[q.0]);
        let mut rank = vec![0; n];
        for (i, q) in order.iter().enumerate() {
            rank[q.0] = i;
        }
        if let Some((p, q)) = r.iter().find(|(p, q)| rank[p.0] > rank[q.0]) {
            return Err(TotalOrderError::NotTransitive(name(p), name(q)));
        }
        Ok(TotalOrder { order, rank })
    }

    /// The order listing states from smallest to largest.
    pub fn from_sequence(n: usize, order: Vec<StateId>) -> Self {
        let mut rank = vec![usize::MAX; n];
        for (i, q) in order.iter().enumerate() {
            rank[q.0] = i;
        }
        assert!(rank.iter().all(|&r| r != usize::MAX), "order must list every state once");
        TotalOrder { order, rank }
    }

    pub fn order(&self) -> &[StateId] {
        &self.order
    }

    pub fn rank(&self, q: StateId) -> usize {
        self.rank[q.0]
    }

    pub fn max(&self) -> StateId {
        *self.order.last().expect("nonempty automaton")
    }

    pub fn relation(&self) -> Relation {
        Relation::strict_total(&self.order)
    }
}

/// Why the engine stopped before exploring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Abort {
    /// The state has only backward transitions.
    OnlyBackward(StateId),
    /// Every letter left on the state is undefined on the maximum.
    NoLetterAtMaximum(StateId),
    /// No letter is defined on every state.
    NoTotalLetter,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EngineTrace {
    pub abort: Option<Abort>,
    /// Iterations of the refinement loop, including the final stable one.
    pub iterations: usize,
    /// Active set after the initial exploration and after each iteration.
    pub active_sets: Vec<StateSet>,
    /// The explored alphabet used by each exploration.
    pub sigma_def: Vec<Vec<LetterId>>,
    /// The state map of the accumulated word after each exploration.
    pub u_maps: Vec<Vec<StateId>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TotalResult {
    pub outcome: Outcome,
    pub trace: EngineTrace,
}

/// Transition table in rank space with backward moves removed.
struct Forward {
    n: usize,
    k: usize,
    next: Vec<Option<u32>>,
}

impl Forward {
    fn new(a: &Automaton, t: &TotalOrder) -> Self {
        let (n, k) = (a.num_states(), a.num_letters());
        let mut next = vec![None; n * k];
        for (i, &q) in t.order.iter().enumerate() {
            for x in a.letter_ids() {
                if let Some(s) = a.delta(q, x) {
                    let j = t.rank(s);
                    if j >= i {
                        next[i * k + x.0] = Some(j as u32);
                    }
                }
            }
        }
        Forward { n, k, next }
    }

    #[inline]
    fn get(&self, i: usize, x: usize) -> Option<u32> {
        self.next[i * self.k + x]
    }

    fn has_any(&self, i: usize) -> bool {
        (0..self.k).any(|x| self.get(i, x).is_some())
    }

    fn defined_on(&self, active: &[bool], x: usize) -> bool {
        (0..self.n).all(|i| !active[i] || self.get(i, x).is_some())
    }
}

/// One exploration: `u_new = u_prev σ1 u_prev σ2 u_prev ...`.
struct Level {
    letters: Vec<usize>,
    map: Vec<u32>,
    moved: BitSet,
}

/// Decides `lf_path`, from-0 synchronization under a strict total order.
pub fn fast_decide(a: &Automaton, r: &Relation) -> Result<TotalResult, TotalOrderError> {
    if !a.is_complete() {
        return Err(AutomatonError::Partial.into());
    }
    let t = TotalOrder::from_relation(a, r)?;
    Ok(fast_decide_ordered(a, &t))
}

/// [`fast_decide`] on an already validated order; `a` may be partial, in
/// which case undefined entries behave like removed backward transitions.
pub fn fast_decide_ordered(a: &Automaton, t: &TotalOrder) -> TotalResult {
    let n = a.num_states();
    let mut trace = EngineTrace::default();
    let negative = |trace| TotalResult {
        outcome: Outcome::Negative,
        trace,
    };
    if n == 1 {
        return TotalResult {
            outcome: Outcome::Positive(Word::empty()),
            trace,
        };
    }
    let mut fw = Forward::new(a, t);
    let k = fw.k;
    if let Some(i) = (0..n).find(|&i| !fw.has_any(i)) {
        trace.abort = Some(Abort::OnlyBackward(t.order[i]));
        return negative(trace);
    }
    let top = n - 1;
    let usable: Vec<bool> = (0..k).map(|x| fw.get(top, x).is_some()).collect();
    for i in 0..n {
        for x in 0..k {
            if !usable[x] {
                fw.next[i * k + x] = None;
            }
        }
    }
    if let Some(i) = (0..n).find(|&i| !fw.has_any(i)) {
        trace.abort = Some(Abort::NoLetterAtMaximum(t.order[i]));
        return negative(trace);
    }
    let mut active = vec![true; n];
    let mut sigma_def: Vec<usize> = (0..k).filter(|&x| fw.defined_on(&active, x)).collect();
    if sigma_def.is_empty() {
        trace.abort = Some(Abort::NoTotalLetter);
        return negative(trace);
    }

    let to_set = |active: &[bool]| {
        StateSet::from_states(n, (0..n).filter(|&i| active[i]).map(|i| t.order[i]))
    };
    let to_map = |map: &[u32]| {
        let mut out = vec![StateId(0); n];
        for (i, &j) in map.iter().enumerate() {
            out[t.order[i].0] = t.order[j as usize];
        }
        out
    };
    let identity: Vec<u32> = (0..n as u32).collect();
    let mut levels: Vec<Level> = Vec::new();

    let first = explore(&fw, &mut active, &sigma_def, &identity);
    trace.sigma_def.push(sigma_def.iter().map(|&x| LetterId(x)).collect());
    trace.u_maps.push(to_map(&first.map));
    trace.active_sets.push(to_set(&active));
    levels.push(first);

    loop {
        trace.iterations += 1;
        for x in 0..k {
            if usable[x] && !sigma_def.contains(&x) && fw.defined_on(&active, x) {
                sigma_def.push(x);
            }
        }
        sigma_def.sort_unstable();
        let before = active.clone();
        let prev = &levels.last().expect("one level").map;
        let level = explore(&fw, &mut active, &sigma_def, prev);
        trace.sigma_def.push(sigma_def.iter().map(|&x| LetterId(x)).collect());
        trace.u_maps.push(to_map(&level.map));
        trace.active_sets.push(to_set(&active));
        if active == before {
            break;
        }
        levels.push(level);
    }

    let synced = active.iter().filter(|&&b| b).count() == 1 && active[top];
    if !synced {
        return negative(trace);
    }
    let mut image = BitSet::full(n);
    let mut letters = Vec::new();
    expand(&fw, &levels, levels.len() - 1, &mut image, &mut letters);
    debug_assert!(image.len() == 1 && image.contains(top));
    let w: Word = letters.into_iter().map(LetterId).collect();
    debug_assert!(monotone_synchronizes(a, t, &a.full_set(), &w));
    TotalResult {
        outcome: Outcome::Positive(w),
        trace,
    }
}

fn explore(fw: &Forward, active: &mut [bool], sigma_def: &[usize], prev: &[u32]) -> Level {
    let n = fw.n;
    let top = n - 1;
    let mut map = prev.to_vec();
    let mut letters = Vec::new();
    let mut pos = 0;
    while pos < top {
        if !active[pos] {
            pos += 1;
            continue;
        }
        let advance = sigma_def
            .iter()
            .copied()
            .find(|&x| fw.get(pos, x).is_some_and(|j| j as usize > pos));
        let Some(x) = advance else {
            pos += 1;
            continue;
        };
        letters.push(x);
        for m in map.iter_mut() {
            let s = fw.get(*m as usize, x).expect("explored letters are defined on the active set");
            *m = prev[s as usize];
        }
        active.iter_mut().for_each(|b| *b = false);
        for &m in &map {
            active[m as usize] = true;
        }
    }
    let moved = BitSet::from_indices(n, (0..n).filter(|&i| map[i] as usize != i));
    Level { letters, map, moved }
}

/// Writes the letters of level `li` that move some state of `image`.
fn expand(fw: &Forward, levels: &[Level], li: usize, image: &mut BitSet, out: &mut Vec<usize>) {
    if !image.intersects(&levels[li].moved) {
        return;
    }
    let sub = |image: &mut BitSet, out: &mut Vec<usize>| {
        if li > 0 {
            expand(fw, levels, li - 1, image, out);
        }
    };
    sub(image, out);
    for &x in &levels[li].letters {
        let mut next = BitSet::new(fw.n);
        for q in image.iter() {
            next.insert(fw.get(q, x).expect("defined on the running image") as usize);
        }
        if next != *image {
            *image = next;
            out.push(x);
        }
        sub(image, out);
    }
}

/// The appendix greedy algorithm: repeatedly apply the first letter that is
/// defined on all active states and moves one of them forward.
pub fn greedy_decide(a: &Automaton, r: &Relation) -> Result<Outcome, TotalOrderError> {
    if !a.is_complete() {
        return Err(AutomatonError::Partial.into());
    }
    let t = TotalOrder::from_relation(a, r)?;
    let fw = Forward::new(a, &t);
    let n = a.num_states();
    let mut active = vec![true; n];
    let mut count = n;
    let mut w = Word::empty();
    while count > 1 {
        let step = (0..fw.k).find(|&x| {
            fw.defined_on(&active, x)
                && (0..n).any(|i| active[i] && fw.get(i, x).is_some_and(|j| j as usize > i))
        });
        let Some(x) = step else {
            return Ok(Outcome::Negative);
        };
        let mut next = vec![false; n];
        for i in (0..n).filter(|&i| active[i]) {
            next[fw.get(i, x).expect("defined") as usize] = true;
        }
        active = next;
        count = active.iter().filter(|&&b| b).count();
        w.push(LetterId(x));
    }
    Ok(Outcome::Positive(w))
}

/// `lf_path`, from-1 synchronization under a strict total order.
///
/// Position 0 is exempt, so the first letter is free and the rest is
/// careful synchronization of `Q.x` in the forward automaton. That
/// subset problem is NP-complete, so it runs on the powerset search.
pub fn decide_total_from1(a: &Automaton, r: &Relation, budget: usize) -> Result<Outcome, TotalOrderError> {
    if !a.is_complete() {
        return Err(AutomatonError::Partial.into());
    }
    let t = TotalOrder::from_relation(a, r)?;
    if a.num_states() == 1 {
        return Ok(Outcome::Positive(Word::empty()));
    }
    let forward = pwaa_from_order(a, &t);
    let mut best: Option<Word> = None;
    let mut inconclusive = false;
    for x in a.letter_ids() {
        let start = a.image(&a.full_set(), x).expect("complete");
        let res = powerset::decide_with_budget(
            &forward,
            crate::order::OrderKind::LlSet,
            Variant::From0,
            &Relation::empty(),
            &start,
            budget,
        );
        match res.outcome {
            Outcome::Positive(rest) => {
                let w = Word::from(vec![x]).concat(&rest);
                if best.as_ref().map_or(true, |b| w.len() < b.len()) {
                    best = Some(w);
                }
            }
            Outcome::Inconclusive => inconclusive = true,
            Outcome::Negative => {}
        }
    }
    Ok(match best {
        Some(w) => Outcome::Positive(w),
        None if inconclusive => Outcome::Inconclusive,
        None => Outcome::Negative,
    })
}

/// Removes every transition leading strictly backward in the order `r`.
pub fn pwaa_from_total(a: &Automaton, r: &Relation) -> Result<Automaton, TotalOrderError> {
    if !a.is_complete() {
        return Err(AutomatonError::Partial.into());
    }
    let t = TotalOrder::from_relation(a, r)?;
    Ok(pwaa_from_order(a, &t))
}

fn pwaa_from_order(a: &Automaton, t: &TotalOrder) -> Automaton {
    let mut out = a.clone();
    for q in a.state_ids() {
        for x in a.letter_ids() {
            if let Some(s) = a.delta(q, x) {
                if t.rank(s) < t.rank(q) {
                    out.replace_transition(q, x, None);
                }
            }
        }
    }
    out
}

/// Completes a partial weakly acyclic automaton with a new smallest state
/// `q<` absorbing the undefined entries; `q<` moves to the maximum.
///
/// The new state is appended after the original ones, which keep their
/// indices. The returned relation orders `q<` first, then the states in the
/// weakly acyclic ordering.
pub fn total_from_pwaa(a: &Automaton) -> Result<(Automaton, Relation), AutomatonError> {
    let order = a.is_weakly_acyclic().ok_or(AutomatonError::NotWeaklyAcyclic)?;
    let n = a.num_states();
    let low = fresh_name(a, "q<");
    let mut names: Vec<String> = a.state_names().to_vec();
    names.push(low);
    let k = a.num_letters();
    let max = *order.last().expect("nonempty automaton");
    let mut table = Vec::with_capacity((n + 1) * k);
    for q in a.state_ids() {
        for x in a.letter_ids() {
            table.push(Some(a.delta(q, x).map_or(n, |s| s.0)));
        }
    }
    table.extend(std::iter::repeat(Some(max.0)).take(k));
    let out = Automaton::from_table(names, a.letter_names().to_vec(), table)?;
    let mut total = vec![StateId(n)];
    total.extend(order);
    Ok((out, Relation::strict_total(&total)))
}

pub(crate) fn fresh_name(a: &Automaton, base: &str) -> String {
    let mut name = base.to_string();
    while a.state(&name).is_ok() {
        name.push('\'');
    }
    name
}

/// Careful synchronization of a partial weakly acyclic automaton.
///
/// The witness keeps only the letters that change the image of the state
/// set, which bounds its length by `n(n-1)/2`.
pub fn careful_sync_pwaa(a: &Automaton) -> Result<Outcome, AutomatonError> {
    let order = a.is_weakly_acyclic().ok_or(AutomatonError::NotWeaklyAcyclic)?;
    if a.num_states() <= 1 {
        return Ok(Outcome::Positive(Word::empty()));
    }
    let (complete, r) = total_from_pwaa(a)?;
    let t = TotalOrder::from_relation(&complete, &r).expect("constructed order is strict and total");
    Ok(match fast_decide_ordered(&complete, &t).outcome {
        Outcome::Positive(w) => {
            let w = drop_stationary(a, &a.full_set(), &w);
            debug_assert!(monotone_synchronizes(a, &TotalOrder::from_sequence(a.num_states(), order), &a.full_set(), &w));
            Outcome::Positive(w)
        }
        other => other,
    })
}

/// Removes letters that leave the running image unchanged.
pub fn drop_stationary(a: &Automaton, start: &StateSet, w: &[LetterId]) -> Word {
    let mut image = start.clone();
    let mut out = Word::empty();
    for &x in w {
        let next = a.image(&image, x).expect("word is defined on the running image");
        if next != image {
            image = next;
            out.push(x);
        }
    }
    out
}

/// True iff `w` is defined at every step from `start`, never moves an active
/// state backward in `t`, and ends in a singleton. For a strict total order
/// this is exactly `lf_path`, from-0 satisfaction plus synchronization.
pub fn monotone_synchronizes(a: &Automaton, t: &TotalOrder, start: &StateSet, w: &[LetterId]) -> bool {
    let mut image = start.clone();
    for &x in w {
        let mut next = StateSet::empty(a.num_states());
        for q in image.iter() {
            match a.delta(q, x) {
                Some(s) if t.rank(s) >= t.rank(q) => {
                    next.insert(s);
                }
                _ => return false,
            }
        }
        image = next;
    }
    image.is_singleton()
}

/// Upper bound on the shortest witness length under a strict total order.
pub fn cerny_bound(n: usize, v: Variant) -> usize {
    let pairs = n * n.saturating_sub(1) / 2;
    match v {
        Variant::From0 => pairs,
        Variant::From1 => pairs + 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::fixtures::{c1, fig1, p1};
    use crate::order::{check_word, OrderKind};

    fn chain(a: &Automaton, names: &[&str]) -> Relation {
        let order: Vec<StateId> = names.iter().map(|s| a.state(s).unwrap()).collect();
        Relation::strict_total(&order)
    }

    #[test]
    fn validation_reports_offending_pair() {
        let a = c1();
        assert!(matches!(
            TotalOrder::from_relation(&a, &Relation::from_names(&a, [("q1", "q1")]).unwrap()),
            Err(TotalOrderError::Reflexive(_))
        ));
        let r = Relation::from_names(&a, [("q1", "q2"), ("q2", "q1")]).unwrap();
        assert!(matches!(TotalOrder::from_relation(&a, &r), Err(TotalOrderError::Symmetric(..))));
        let r = Relation::from_names(&a, [("q1", "q2")]).unwrap();
        assert!(matches!(TotalOrder::from_relation(&a, &r), Err(TotalOrderError::Incomparable(..))));
        let r = Relation::from_names(&a, [("q1", "q2"), ("q2", "q3"), ("q3", "q1")]).unwrap();
        assert!(matches!(TotalOrder::from_relation(&a, &r), Err(TotalOrderError::NotTransitive(..))));
        let t = TotalOrder::from_relation(&a, &chain(&a, &["q3", "q1", "q2"])).unwrap();
        assert_eq!(t.max(), a.state("q2").unwrap());
    }

    #[test]
    fn c1_forward_order_is_positive() {
        let a = c1();
        let r = chain(&a, &["q1", "q2", "q3"]);
        let res = fast_decide(&a, &r).unwrap();
        let w = res.outcome.witness().unwrap().clone();
        assert!(w.len() <= 3);
        assert!(check_word(&a, OrderKind::LfPath, Variant::From0, &r, &a.full_set(), &w).is_witness());
        assert!(greedy_decide(&a, &r).unwrap().is_positive());
    }

    #[test]
    fn c1_reversed_order_is_negative() {
        let a = c1();
        let r = chain(&a, &["q3", "q2", "q1"]);
        let res = fast_decide(&a, &r).unwrap();
        assert_eq!(res.outcome, Outcome::Negative);
        // q1.a = q2 is backward, so `a` goes; q2 keeps only its backward b
        assert_eq!(res.trace.abort, Some(Abort::NoLetterAtMaximum(a.state("q2").unwrap())));
        assert_eq!(greedy_decide(&a, &r).unwrap(), Outcome::Negative);
    }

    #[test]
    fn single_state_needs_nothing() {
        let a = Automaton::from_table(["q"], ["a"], vec![Some(0)]).unwrap();
        let res = fast_decide(&a, &Relation::empty()).unwrap();
        assert_eq!(res.outcome, Outcome::Positive(Word::empty()));
    }

    #[test]
    fn identity_pair_has_no_advancing_letter() {
        let a = Automaton::from_table(["p", "q"], ["a"], vec![Some(0), Some(1)]).unwrap();
        let r = chain(&a, &["p", "q"]);
        assert_eq!(greedy_decide(&a, &r).unwrap(), Outcome::Negative);
        assert_eq!(fast_decide(&a, &r).unwrap().outcome, Outcome::Negative);
    }

    #[test]
    fn trace_invariants_on_c1() {
        let a = c1();
        let res = fast_decide(&a, &chain(&a, &["q1", "q2", "q3"])).unwrap();
        assert!(res.trace.iterations <= a.num_letters() + 1);
        for (set, map) in res.trace.active_sets.iter().zip(&res.trace.u_maps) {
            assert!(set.iter().all(|q| map[q.0] == q));
        }
    }

    #[test]
    fn pwaa_round_trip() {
        let p = p1();
        let (a, r) = total_from_pwaa(&p).unwrap();
        assert_eq!(a.num_states(), 4);
        assert!(a.is_complete());
        assert_eq!(r.len(), 6);
        let back = pwaa_from_total(&a, &r).unwrap();
        for q in p.state_ids() {
            for x in p.letter_ids() {
                assert_eq!(back.delta(q, x), p.delta(q, x));
            }
        }
        let low = StateId(3);
        assert_eq!(a.delta(p.state("q1").unwrap(), p.letter("b").unwrap()), Some(low));
        assert!(a.letter_ids().all(|x| a.delta(low, x) == p.state("q3").ok()));
    }

    #[test]
    fn empty_alphabet_pwaa() {
        let p = Automaton::new(["q1"], Vec::<&str>::new()).unwrap();
        let (a, r) = total_from_pwaa(&p).unwrap();
        assert_eq!(a.num_states(), 2);
        assert_eq!(r.pairs(), &[(StateId(1), StateId(0))]);
        assert_eq!(careful_sync_pwaa(&p).unwrap(), Outcome::Positive(Word::empty()));
    }

    #[test]
    fn careful_p1() {
        let p = p1();
        let w = careful_sync_pwaa(&p).unwrap().witness().unwrap().clone();
        assert_eq!(p.format_word(&w), "ab");
        let mut q = p1();
        q.replace_transition(q.state("q2").unwrap(), q.letter("b").unwrap(), None);
        assert_eq!(careful_sync_pwaa(&q).unwrap(), Outcome::Negative);
        assert_eq!(careful_sync_pwaa(&fig1()), Err(AutomatonError::NotWeaklyAcyclic));
    }

    #[test]
    fn p1_greedy_through_completion() {
        let (a, r) = total_from_pwaa(&p1()).unwrap();
        let w = greedy_decide(&a, &r).unwrap().witness().unwrap().clone();
        assert_eq!(a.format_word(&w), "ab");
    }

    #[test]
    fn backward_edges_removed() {
        let a = c1();
        let r = chain(&a, &["q1", "q2", "q3"]);
        assert_eq!(pwaa_from_total(&a, &r).unwrap(), a);
        let f = fig1();
        let order: Vec<StateId> = f.state_ids().collect();
        let back = pwaa_from_total(&f, &Relation::strict_total(&order)).unwrap();
        let x = f.letter("a").unwrap();
        let (s3, s4) = (f.state("3").unwrap(), f.state("4").unwrap());
        assert!(back.delta(s3, x).is_none() || back.delta(s4, x).is_none());
    }

    #[test]
    fn from1_wrapper() {
        let a = c1();
        let r = chain(&a, &["q1", "q2", "q3"]);
        let w = decide_total_from1(&a, &r, 1000).unwrap().witness().unwrap().clone();
        assert!(check_word(&a, OrderKind::LfPath, Variant::From1, &r, &a.full_set(), &w).is_witness());
        // q3 < .. : only the first free move could go backward, which is not enough
        let r = chain(&a, &["q3", "q2", "q1"]);
        assert_eq!(decide_total_from1(&a, &r, 1000).unwrap(), Outcome::Negative);
    }

    #[test]
    fn cerny_values() {
        assert_eq!(cerny_bound(5, Variant::From1), 11);
        assert_eq!(cerny_bound(3, Variant::From0), 3);
        assert_eq!(cerny_bound(1, Variant::From0), 0);
    }
}
