//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::automaton::{Automaton, StateId};
use crate::io::Instance;
use crate::order::{OrderKind, Relation, Variant};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a`, `b`, ... for up to 26 letters, `x0`, `x1`, ... beyond.
pub fn letter_names(k: usize) -> Vec<String> {
    if k <= 26 {
        (0..k).map(|i| char::from(b'a' + i as u8).to_string()).collect()
    } else {
        (0..k).map(|i| format!("x{i}")).collect()
    }
}

pub fn state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}

fn build(n: usize, k: usize, table: Vec<Option<usize>>) -> Automaton {
    Automaton::from_table(state_names(n), letter_names(k), table).expect("generated table is well-formed")
}

/// Uniformly random complete automaton.
pub fn complete<R: Rng>(rng: &mut R, n: usize, k: usize) -> Automaton {
    let table = (0..n * k).map(|_| Some(rng.gen_range(0..n))).collect();
    build(n, k, table)
}

/// Random automaton where each entry is undefined with probability `p_undefined`.
pub fn partial<R: Rng>(rng: &mut R, n: usize, k: usize, p_undefined: f64) -> Automaton {
    let table = (0..n * k)
        .map(|_| (!rng.gen_bool(p_undefined)).then(|| rng.gen_range(0..n)))
        .collect();
    build(n, k, table)
}

/// Random weakly acyclic automaton: states are ranked by a hidden random
/// permutation and every defined transition goes to an equal or higher rank.
pub fn pwaa<R: Rng>(rng: &mut R, n: usize, k: usize, p_undefined: f64) -> Automaton {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut table = vec![None; n * k];
    for (rank, &q) in order.iter().enumerate() {
        for x in 0..k {
            if !rng.gen_bool(p_undefined) {
                table[q * k + x] = Some(order[rng.gen_range(rank..n)]);
            }
        }
    }
    build(n, k, table)
}

/// `m` random pairs, possibly reflexive, duplicates collapsed.
pub fn relation<R: Rng>(rng: &mut R, n: usize, m: usize) -> Relation {
    Relation::new((0..m).map(|_| (StateId(rng.gen_range(0..n)), StateId(rng.gen_range(0..n)))))
}

/// A uniformly random strict total order, smallest first.
pub fn total_order<R: Rng>(rng: &mut R, n: usize) -> Vec<StateId> {
    let mut order: Vec<StateId> = (0..n).map(StateId).collect();
    order.shuffle(rng);
    order
}

/// Complete automaton where each transition goes to an equal or higher rank
/// of `order` with probability `forward`, and anywhere otherwise.
pub fn forward_biased<R: Rng>(rng: &mut R, k: usize, order: &[StateId], forward: f64) -> Automaton {
    let n = order.len();
    let mut table = vec![None; n * k];
    for (rank, q) in order.iter().enumerate() {
        for x in 0..k {
            let t = if rng.gen_bool(forward) {
                order[rng.gen_range(rank..n)].0
            } else {
                rng.gen_range(0..n)
            };
            table[q.0 * k + x] = Some(t);
        }
    }
    build(n, k, table)
}

/// A random complete instance with an `m`-pair relation.
pub fn instance<R: Rng>(rng: &mut R, n: usize, k: usize, m: usize, kind: OrderKind, v: Variant) -> Instance {
    let automaton = complete(rng, n, k);
    let r = relation(rng, n, m);
    Instance {
        automaton,
        kind: Some(kind),
        variant: Some(v),
        relation: r,
        subset: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeded_determinism() {
        let a = complete(&mut rng(7), 5, 3);
        let b = complete(&mut rng(7), 5, 3);
        assert_eq!(a, b);
        assert_ne!(a, complete(&mut rng(8), 5, 3));
    }

    #[test]
    fn pwaa_is_weakly_acyclic() {
        let mut r = rng(1);
        for _ in 0..50 {
            let a = pwaa(&mut r, 6, 2, 0.3);
            assert!(a.is_weakly_acyclic().is_some());
        }
    }

    #[test]
    fn fully_forward_bias_respects_order() {
        let mut r = rng(2);
        let order = total_order(&mut r, 8);
        let a = forward_biased(&mut r, 3, &order, 1.0);
        let rank = |q: StateId| order.iter().position(|&s| s == q).unwrap();
        for q in a.state_ids() {
            for x in a.letter_ids() {
                assert!(rank(a.delta(q, x).unwrap()) >= rank(q));
            }
        }
    }

    #[test]
    fn names() {
        assert_eq!(letter_names(3), ["a", "b", "c"]);
        assert_eq!(letter_names(27)[26], "x26");
    }
}
