//! Exact decision by breadth-first search over the enhanced powerset automaton.
//!
//! A configuration is the active set together with the bookkeeping needed to
//! decide, for every continuation, whether the relation will hold:
//!
//! * `ll_set`: the pairs not yet satisfied (`last(p) >= last(q)` so far);
//! * `leq_set`: the pairs currently violated (`last(p) > last(q)` so far);
//! * `ll_path`, `leq_path`: the same, one set per active state, where paths
//!   that meet are merged by union;
//! * `lf_path`: per active state, the pairs whose `q` was already visited on
//!   some path ending there. Visiting `p` for such a pair is fatal.
//!
//! The update rules are the distributive maps `S ↦ (S ∪ add) \ remove`, so
//! merging paths before or after a visit gives the same result.
//!
//! A move through an undefined transition on any active state is not
//! expanded. With an empty relation this turns the search into a careful
//! synchronization decider for partial automata.

use indexmap::IndexSet;

use crate::automaton::{Automaton, LetterId, StateId, StateSet, Word};
use crate::bitset::BitSet;
use crate::order::{OrderKind, Relation, Variant};
use crate::Outcome;

pub const DEFAULT_BUDGET: usize = 10_000_000;

/// A node of the enhanced powerset automaton.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Configuration {
    Sets { active: StateSet, pairs: BitSet },
    /// `per_state[i]` belongs to the `i`-th smallest active state.
    Paths { active: StateSet, per_state: Vec<BitSet> },
    /// Some path violated an `lf_path` pair; absorbing and rejecting.
    Error,
}

impl Configuration {
    pub fn active(&self) -> Option<&StateSet> {
        match self {
            Configuration::Sets { active, .. } | Configuration::Paths { active, .. } => Some(active),
            Configuration::Error => None,
        }
    }

    pub fn is_error(&self) -> bool {
        matches!(self, Configuration::Error)
    }

    /// Active-pair indices (into the relation's canonical order) of a set configuration.
    pub fn global_pairs(&self) -> Option<&BitSet> {
        match self {
            Configuration::Sets { pairs, .. } => Some(pairs),
            _ => None,
        }
    }

    /// Active-pair indices tracked for the path currently at `q`.
    pub fn pairs_at(&self, q: StateId) -> Option<&BitSet> {
        match self {
            Configuration::Paths { active, per_state } => {
                let pos = active.iter().position(|t| t == q)?;
                per_state.get(pos)
            }
            _ => None,
        }
    }
}

/// Per-state pair masks over the relation's canonical order.
#[derive(Clone, Debug)]
struct PairIndex {
    len: usize,
    with_p: Vec<BitSet>,
    with_q: Vec<BitSet>,
    /// Pairs `(p, t)` with `p != t`.
    strict_q: Vec<BitSet>,
}

impl PairIndex {
    fn new(n: usize, r: &Relation) -> Self {
        let len = r.len();
        let mut with_p = vec![BitSet::new(len); n];
        let mut with_q = vec![BitSet::new(len); n];
        let mut strict_q = vec![BitSet::new(len); n];
        for (i, (p, q)) in r.iter().enumerate() {
            with_p[p.0].insert(i);
            with_q[q.0].insert(i);
            if p != q {
                strict_q[q.0].insert(i);
            }
        }
        PairIndex {
            len,
            with_p,
            with_q,
            strict_q,
        }
    }
}

/// The enhanced powerset automaton for one automaton, order kind and relation.
#[derive(Clone, Debug)]
pub struct EnhancedPowerset<'a> {
    a: &'a Automaton,
    kind: OrderKind,
    index: PairIndex,
}

impl<'a> EnhancedPowerset<'a> {
    pub fn new(a: &'a Automaton, kind: OrderKind, r: &Relation) -> Self {
        EnhancedPowerset {
            a,
            kind,
            index: PairIndex::new(a.num_states(), r),
        }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    fn visit_set(&self, pairs: &mut BitSet, e: &StateSet) {
        let mut with_p = BitSet::new(self.index.len);
        let mut with_q = BitSet::new(self.index.len);
        for t in e.iter() {
            with_p.union_with(&self.index.with_p[t.0]);
            with_q.union_with(&self.index.with_q[t.0]);
        }
        pairs.union_with(&with_p);
        match self.kind {
            // satisfied: q occurs now without p
            OrderKind::LlSet => with_q.difference_with(&with_p),
            // repaired: q occurs now
            OrderKind::LeqSet => {}
            _ => unreachable!("set update for a path kind"),
        }
        pairs.difference_with(&with_q);
    }

    /// Applies the visit of `t` to one path's pair set; `false` means violation.
    fn visit_path(&self, pairs: &mut BitSet, t: StateId) -> bool {
        let ix = &self.index;
        match self.kind {
            OrderKind::LlPath => {
                pairs.union_with(&ix.with_p[t.0]);
                pairs.difference_with(&ix.strict_q[t.0]);
                true
            }
            OrderKind::LeqPath => {
                pairs.union_with(&ix.with_p[t.0]);
                pairs.difference_with(&ix.with_q[t.0]);
                true
            }
            OrderKind::LfPath => {
                pairs.union_with(&ix.with_q[t.0]);
                !pairs.intersects(&ix.with_p[t.0])
            }
            _ => unreachable!("path update for a set kind"),
        }
    }

    /// Bookkeeping before any position has been counted.
    fn untouched(&self) -> BitSet {
        match self.kind {
            OrderKind::LlSet | OrderKind::LlPath => BitSet::full(self.index.len),
            _ => BitSet::new(self.index.len),
        }
    }

    pub fn initial(&self, v: Variant, start: &StateSet) -> Configuration {
        let count_zero = v == Variant::From0;
        if self.kind.is_path_kind() {
            let mut per_state = Vec::with_capacity(start.len());
            for r in start.iter() {
                let mut pairs = self.untouched();
                if count_zero && !self.visit_path(&mut pairs, r) {
                    return Configuration::Error;
                }
                per_state.push(pairs);
            }
            Configuration::Paths {
                active: start.clone(),
                per_state,
            }
        } else {
            let mut pairs = self.untouched();
            if count_zero {
                self.visit_set(&mut pairs, start);
            }
            Configuration::Sets {
                active: start.clone(),
                pairs,
            }
        }
    }

    /// The configuration after reading `x`, or `None` when `x` is undefined
    /// on some active state.
    pub fn successor(&self, cfg: &Configuration, x: LetterId) -> Option<Configuration> {
        let a = self.a;
        match cfg {
            Configuration::Error => Some(Configuration::Error),
            Configuration::Sets { active, pairs } => {
                let e = a.image(active, x).ok()?;
                let mut pairs = pairs.clone();
                self.visit_set(&mut pairs, &e);
                Some(Configuration::Sets { active: e, pairs })
            }
            Configuration::Paths { active, per_state } => {
                let n = a.num_states();
                let mut merged: Vec<Option<BitSet>> = vec![None; n];
                for (q, pairs) in active.iter().zip(per_state) {
                    let t = a.delta(q, x)?;
                    match &mut merged[t.0] {
                        Some(acc) => acc.union_with(pairs),
                        slot @ None => *slot = Some(pairs.clone()),
                    }
                }
                let mut e = StateSet::empty(n);
                let mut next = Vec::new();
                for (t, pairs) in merged.into_iter().enumerate() {
                    if let Some(mut pairs) = pairs {
                        if !self.visit_path(&mut pairs, StateId(t)) {
                            return Some(Configuration::Error);
                        }
                        e.insert(StateId(t));
                        next.push(pairs);
                    }
                }
                Some(Configuration::Paths {
                    active: e,
                    per_state: next,
                })
            }
        }
    }

    pub fn is_accepting(&self, cfg: &Configuration) -> bool {
        match cfg {
            Configuration::Error => false,
            Configuration::Sets { active, pairs } => active.is_singleton() && pairs.is_empty(),
            Configuration::Paths { active, per_state } => {
                active.is_singleton() && (self.kind == OrderKind::LfPath || per_state[0].is_empty())
            }
        }
    }

    /// Breadth-first search from `initial(v, start)`; letters are expanded in
    /// declaration order, so a positive result carries the lexicographically
    /// smallest among the shortest witnesses.
    pub fn search(&self, v: Variant, start: &StateSet, budget: usize) -> SearchResult {
        let init = self.initial(v, start);
        if init.is_error() {
            return SearchResult {
                outcome: Outcome::Negative,
                explored: 1,
                depth: 0,
            };
        }
        if self.is_accepting(&init) {
            return SearchResult {
                outcome: Outcome::Positive(Word::empty()),
                explored: 1,
                depth: 0,
            };
        }
        let mut seen: IndexSet<Configuration> = IndexSet::new();
        let mut parent: Vec<Option<(usize, LetterId)>> = vec![None];
        let mut depth: Vec<usize> = vec![0];
        seen.insert(init);
        let mut next = 0;
        while next < seen.len() {
            let cur = seen.get_index(next).expect("index in range").clone();
            for x in self.a.letter_ids() {
                let Some(succ) = self.successor(&cur, x) else { continue };
                if succ.is_error() {
                    continue;
                }
                let accepting = self.is_accepting(&succ);
                let (idx, fresh) = seen.insert_full(succ);
                if !fresh {
                    continue;
                }
                parent.push(Some((next, x)));
                depth.push(depth[next] + 1);
                if accepting {
                    let witness = trace_back(&parent, idx);
                    return SearchResult {
                        depth: witness.len(),
                        outcome: Outcome::Positive(witness),
                        explored: seen.len(),
                    };
                }
                if seen.len() > budget {
                    return SearchResult {
                        outcome: Outcome::Inconclusive,
                        explored: seen.len(),
                        depth: depth[idx],
                    };
                }
            }
            next += 1;
        }
        SearchResult {
            outcome: Outcome::Negative,
            explored: seen.len(),
            depth: depth.last().copied().unwrap_or(0),
        }
    }
}

fn trace_back(parent: &[Option<(usize, LetterId)>], mut idx: usize) -> Word {
    let mut letters = Vec::new();
    while let Some((prev, x)) = parent[idx] {
        letters.push(x);
        idx = prev;
    }
    letters.reverse();
    Word::from(letters)
}

/// Result of a powerset search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchResult {
    pub outcome: Outcome,
    /// Distinct configurations generated.
    pub explored: usize,
    /// Length of the witness, or the deepest level generated.
    pub depth: usize,
}

pub fn initial_configuration(
    a: &Automaton,
    kind: OrderKind,
    v: Variant,
    r: &Relation,
    start: &StateSet,
) -> Configuration {
    EnhancedPowerset::new(a, kind, r).initial(v, start)
}

pub fn successor(
    a: &Automaton,
    kind: OrderKind,
    r: &Relation,
    cfg: &Configuration,
    x: LetterId,
) -> Option<Configuration> {
    EnhancedPowerset::new(a, kind, r).successor(cfg, x)
}

pub fn decide(a: &Automaton, kind: OrderKind, v: Variant, r: &Relation, start: &StateSet) -> SearchResult {
    decide_with_budget(a, kind, v, r, start, DEFAULT_BUDGET)
}

pub fn decide_with_budget(
    a: &Automaton,
    kind: OrderKind,
    v: Variant,
    r: &Relation,
    start: &StateSet,
    budget: usize,
) -> SearchResult {
    let result = EnhancedPowerset::new(a, kind, r).search(v, start, budget);
    if let Outcome::Positive(w) = &result.outcome {
        debug_assert!(
            crate::order::check_word(a, kind, v, r, start, w).is_witness(),
            "search produced an invalid witness"
        );
    }
    result
}

/// Careful synchronization of a possibly partial automaton from its full state set.
pub fn careful_decide(a: &Automaton, budget: usize) -> SearchResult {
    decide_with_budget(a, OrderKind::LlSet, Variant::From0, &Relation::empty(), &a.full_set(), budget)
}

/// `(n(n-1)/2 + 1) * 2^p`, saturating.
pub fn search_depth_bound(n: u64, p: u64) -> u64 {
    let base = n.saturating_mul(n.saturating_sub(1)) / 2 + 1;
    if p >= 64 {
        return u64::MAX;
    }
    base.saturating_mul(1u64 << p)
}

/// Size of the largest state subset on which `r` restricts to a strict total
/// order, by exhaustive search; `None` above 20 states.
pub fn largest_total_core(n: usize, r: &Relation) -> Option<usize> {
    if n > 20 {
        return None;
    }
    let related = |p: usize, q: usize| r.contains((StateId(p), StateId(q)));
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let strict_total = members.iter().all(|&p| !related(p, p))
            && members.iter().enumerate().all(|(i, &p)| {
                members[i + 1..]
                    .iter()
                    .all(|&q| related(p, q) != related(q, p))
            })
            && members.iter().all(|&p| {
                members.iter().all(|&q| {
                    !related(p, q) || members.iter().all(|&s| !related(q, s) || related(p, s))
                })
            });
        if strict_total {
            best = size;
        }
    }
    Some(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::fixtures::fig1;

    fn rel(a: &Automaton, pairs: &[(&str, &str)]) -> Relation {
        Relation::from_names(a, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn initial_configurations_for_full_start() {
        let a = fig1();
        let r = rel(&a, &[("1", "2")]);
        let q = a.full_set();
        for v in Variant::ALL {
            let c = initial_configuration(&a, OrderKind::LeqSet, v, &r, &q);
            assert_eq!(c.global_pairs().unwrap().len(), 0);
            let c = initial_configuration(&a, OrderKind::LlSet, v, &r, &q);
            assert_eq!(c.global_pairs().unwrap().iter().collect::<Vec<_>>(), vec![0]);
        }
        let c = initial_configuration(&a, OrderKind::LfPath, Variant::From1, &r, &q);
        assert!(a.state_ids().all(|s| c.pairs_at(s).unwrap().is_empty()));
        // from0: the path at 2 has already seen q = 2
        let c = initial_configuration(&a, OrderKind::LfPath, Variant::From0, &r, &q);
        assert!(!c.pairs_at(a.state("2").unwrap()).unwrap().is_empty());
        assert!(c.pairs_at(a.state("1").unwrap()).unwrap().is_empty());
    }

    #[test]
    fn leq_set_successor_on_b() {
        let a = fig1();
        let r = rel(&a, &[("1", "2"), ("1", "3"), ("5", "4"), ("4", "5")]);
        let ps = EnhancedPowerset::new(&a, OrderKind::LeqSet, &r);
        let init = ps.initial(Variant::From0, &a.full_set());
        let succ = ps.successor(&init, a.letter("b").unwrap()).unwrap();
        assert_eq!(succ.active().unwrap(), &a.set_of(["1", "2", "4"]).unwrap());
        // p ∈ {1,2,4} and q ∉ {1,2,4}: (1,3) and (4,5)
        let want: Vec<usize> = r
            .iter()
            .enumerate()
            .filter(|(_, (p, q))| {
                ["1", "3"] == [a.state_name(*p), a.state_name(*q)] || ["4", "5"] == [a.state_name(*p), a.state_name(*q)]
            })
            .map(|(i, _)| i)
            .collect();
        assert_eq!(succ.global_pairs().unwrap().iter().collect::<Vec<_>>(), want);
    }

    #[test]
    fn error_is_absorbing() {
        let a = fig1();
        let r = Relation::empty();
        for k in OrderKind::ALL {
            assert_eq!(successor(&a, k, &r, &Configuration::Error, LetterId(0)), Some(Configuration::Error));
        }
    }

    #[test]
    fn lf_path_violation_after_ba_then_a() {
        let a = fig1();
        let r = rel(&a, &[("4", "3")]);
        let ps = EnhancedPowerset::new(&a, OrderKind::LfPath, &r);
        let mut c = ps.initial(Variant::From0, &a.full_set());
        for x in a.word_from_chars("ba").unwrap().iter() {
            c = ps.successor(&c, *x).unwrap();
        }
        assert!(!c.is_error());
        let c = ps.successor(&c, a.letter("a").unwrap()).unwrap();
        assert!(c.is_error());
    }

    #[test]
    fn decide_examples() {
        let a = fig1();
        let q = a.full_set();
        let res = decide(&a, OrderKind::LlSet, Variant::From1, &rel(&a, &[("1", "2")]), &q);
        let Outcome::Positive(w) = &res.outcome else { panic!("{res:?}") };
        assert!(w.len() <= 6);
        assert!(crate::order::check_word(&a, OrderKind::LlSet, Variant::From1, &rel(&a, &[("1", "2")]), &q, w).is_witness());

        for v in Variant::ALL {
            let res = decide(&a, OrderKind::LlSet, v, &rel(&a, &[("3", "3")]), &q);
            assert_eq!(res.outcome, Outcome::Negative);
        }
        let s = a.set_of(["2", "4"]).unwrap();
        for k in OrderKind::ALL {
            for v in Variant::ALL {
                let res = decide(&a, k, v, &Relation::empty(), &s);
                assert_eq!(res.outcome, Outcome::Positive(a.word_from_chars("a").unwrap()));
            }
        }
    }

    #[test]
    fn budget_overflow_is_inconclusive() {
        let a = fig1();
        let res = decide_with_budget(&a, OrderKind::LlSet, Variant::From0, &rel(&a, &[("3", "3")]), &a.full_set(), 3);
        assert_eq!(res.outcome, Outcome::Inconclusive);
    }

    #[test]
    fn depth_bound_formula() {
        assert_eq!(search_depth_bound(3, 0), 4);
        assert_eq!(search_depth_bound(5, 0), 11);
        assert_eq!(search_depth_bound(4, 2), 28);
        assert_eq!(search_depth_bound(10, 70), u64::MAX);
    }

    #[test]
    fn total_core() {
        let a = fig1();
        let order: Vec<StateId> = a.state_ids().collect();
        assert_eq!(largest_total_core(5, &Relation::strict_total(&order)), Some(5));
        assert_eq!(largest_total_core(5, &Relation::empty()), Some(1));
        let r = rel(&a, &[("1", "1"), ("2", "2"), ("3", "3"), ("4", "4"), ("5", "5")]);
        assert_eq!(largest_total_core(5, &r), Some(0));
    }
}
