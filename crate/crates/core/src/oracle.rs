//! Brute-force decision by enumerating words against the order semantics.

use crate::automaton::{Automaton, LetterId, StateSet, Word};
use crate::order::{check_word, OrderKind, Relation, Variant};
use crate::total::{cerny_bound, TotalOrder};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict {
    Positive(Word),
    /// No word up to the given length works; longer ones were not tried.
    NegativeUpToBound(usize),
    /// No word works at all: the enumeration covered a proven length bound.
    Negative,
}

impl OracleVerdict {
    pub fn is_positive(&self) -> bool {
        matches!(self, OracleVerdict::Positive(_))
    }
}

/// Tries all words of length `0..=max_len` in length-then-lexicographic order.
pub fn enumerate_decide(
    a: &Automaton,
    kind: OrderKind,
    v: Variant,
    r: &Relation,
    start: &StateSet,
    max_len: usize,
) -> OracleVerdict {
    let k = a.num_letters();
    for len in 0..=max_len {
        if len > 0 && k == 0 {
            break;
        }
        let mut digits = vec![0usize; len];
        loop {
            let w: Vec<LetterId> = digits.iter().map(|&d| LetterId(d)).collect();
            if check_word(a, kind, v, r, start, &w).is_witness() {
                return OracleVerdict::Positive(Word::from(w));
            }
            if !increment(&mut digits, k) {
                break;
            }
        }
    }
    let complete = kind == OrderKind::LfPath
        && start.len() == a.num_states()
        && a.is_complete()
        && TotalOrder::from_relation(a, r).is_ok()
        && max_len >= cerny_bound(a.num_states(), v);
    if complete {
        OracleVerdict::Negative
    } else {
        OracleVerdict::NegativeUpToBound(max_len)
    }
}

fn increment(digits: &mut [usize], k: usize) -> bool {
    for d in digits.iter_mut().rev() {
        *d += 1;
        if *d < k {
            return true;
        }
        *d = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::fixtures::{c1, fig1};
    use crate::automaton::StateId;
    use crate::total::fast_decide;

    #[test]
    fn fig1_ll_set() {
        let a = fig1();
        let r = Relation::from_names(&a, [("1", "2")]).unwrap();
        let res = enumerate_decide(&a, OrderKind::LlSet, Variant::From1, &r, &a.full_set(), 6);
        assert!(res.is_positive());
    }

    #[test]
    fn singleton_start_is_epsilon() {
        let a = fig1();
        let s = a.set_of(["3"]).unwrap();
        for kind in OrderKind::ALL {
            assert_eq!(
                enumerate_decide(&a, kind, Variant::From0, &Relation::empty(), &s, 0),
                OracleVerdict::Positive(Word::empty())
            );
        }
    }

    #[test]
    fn total_order_bound_is_definitive() {
        let a = c1();
        let ids: Vec<StateId> = a.state_ids().collect();
        let fwd = Relation::strict_total(&ids);
        let res = enumerate_decide(&a, OrderKind::LfPath, Variant::From0, &fwd, &a.full_set(), 3);
        assert!(res.is_positive());
        assert!(fast_decide(&a, &fwd).unwrap().outcome.is_positive());
        let rev: Vec<StateId> = ids.into_iter().rev().collect();
        let rev = Relation::strict_total(&rev);
        let res = enumerate_decide(&a, OrderKind::LfPath, Variant::From0, &rev, &a.full_set(), 3);
        assert_eq!(res, OracleVerdict::Negative);
        let res = enumerate_decide(&a, OrderKind::LfPath, Variant::From0, &rev, &a.full_set(), 2);
        assert_eq!(res, OracleVerdict::NegativeUpToBound(2));
    }
}
