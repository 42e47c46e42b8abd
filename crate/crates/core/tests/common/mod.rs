#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use syncorder::{Automaton, LetterId, StateSet};

/// Exact careful (or plain) subset synchronization by BFS over bitmask subsets.
pub fn subset_sync_exists(a: &Automaton, start: &StateSet) -> bool {
    let n = a.num_states();
    assert!(n <= 63);
    let mask_of = |s: &StateSet| s.iter().fold(0u64, |m, q| m | (1 << q.0));
    let init = mask_of(start);
    let mut seen = HashSet::from([init]);
    let mut queue = VecDeque::from([init]);
    while let Some(m) = queue.pop_front() {
        if m.count_ones() <= 1 {
            return true;
        }
        'letters: for x in a.letter_ids() {
            let mut next = 0u64;
            for q in a.state_ids() {
                if m >> q.0 & 1 == 1 {
                    match a.delta(q, x) {
                        Some(t) => next |= 1 << t.0,
                        None => continue 'letters,
                    }
                }
            }
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// Vertex cover of size at most `k` by trying every vertex subset.
pub fn brute_vertex_cover(vertices: &[u64], edges: &[(u64, u64)], k: usize) -> bool {
    let n = vertices.len();
    (0u32..1 << n).any(|mask| {
        mask.count_ones() as usize <= k
            && edges.iter().all(|&(u, v)| {
                let chosen = |x: u64| vertices.iter().position(|&y| y == x).map_or(false, |i| mask >> i & 1 == 1);
                chosen(u) || chosen(v)
            })
    })
}

pub fn random_word<R: rand::Rng>(rng: &mut R, k: usize, max_len: usize) -> Vec<LetterId> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| LetterId(rng.gen_range(0..k))).collect()
}

/// True iff every letter of `w` is defined on every active state along the way.
pub fn defined_throughout(a: &Automaton, w: &[LetterId]) -> bool {
    let mut s = a.full_set();
    for &x in w {
        match a.image(&s, x) {
            Ok(t) => s = t,
            Err(_) => return false,
        }
    }
    true
}
