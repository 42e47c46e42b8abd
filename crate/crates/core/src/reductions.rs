//! Instance transformations between careful synchronization, vertex cover,
//! subset synchronization and the constrained problems.
//!
//! Every construction maps yes-instances to yes-instances and no-instances
//! to no-instances; the test suites check this at small sizes. The careful
//! synchronization sources are assumed to have at least two states: a
//! one-state source is trivially synchronized by the empty word, while the
//! `leq_set` and `ll_set` targets need a nonempty word.

use std::collections::HashSet;

use crate::automaton::{Automaton, StateId, StateSet};
use crate::error::{AutomatonError, ReductionError};
use crate::order::{OrderKind, Relation, Variant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutput {
    pub automaton: Automaton,
    pub relation: Relation,
    pub kind: OrderKind,
    pub variant: Variant,
    pub subset: Option<StateSet>,
    pub provenance: String,
}

/// A simple undirected graph on integer-named vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<u64>,
    edges: Vec<(u64, u64)>,
}

impl Graph {
    /// Vertices are the listed ones plus every edge endpoint; edges are
    /// normalized and deduplicated.
    pub fn new(
        vertices: impl IntoIterator<Item = u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self, ReductionError> {
        let mut vs: Vec<u64> = vertices.into_iter().collect();
        let mut es = Vec::new();
        for (u, v) in edges {
            if u == v {
                return Err(ReductionError::SelfLoop(u as usize, v as usize));
            }
            es.push((u.min(v), u.max(v)));
            vs.push(u);
            vs.push(v);
        }
        vs.sort_unstable();
        vs.dedup();
        es.sort_unstable();
        es.dedup();
        Ok(Graph { vertices: vs, edges: es })
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(u64, u64)] {
        &self.edges
    }

    /// Brute-force check for a vertex cover of size at most `k`.
    pub fn has_vertex_cover(&self, k: usize) -> bool {
        let n = self.vertices.len();
        assert!(n < 64, "brute force limited to 63 vertices");
        let index = |v: u64| self.vertices.binary_search(&v).expect("endpoint is a vertex");
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(u, v)| (index(u), index(v))).collect();
        (0u64..1 << n)
            .filter(|m| m.count_ones() as usize <= k)
            .any(|m| edges.iter().all(|&(u, v)| m & (1 << u) != 0 || m & (1 << v) != 0))
    }
}

struct Names(HashSet<String>);

impl Names {
    fn new(a: &Automaton) -> Self {
        Names(a.state_names().iter().cloned().collect())
    }

    fn fresh(&mut self, base: &str) -> String {
        let mut name = base.to_string();
        while self.0.contains(&name) {
            name.push('\'');
        }
        self.0.insert(name.clone());
        name
    }
}

/// Builds an automaton whose first `a.num_states()` states copy `a`'s
/// defined transitions, followed by `extra` new states.
struct Extended {
    names: Vec<String>,
    letters: Vec<String>,
    table: Vec<Option<usize>>,
}

impl Extended {
    fn new(a: &Automaton, extra: &[String], extra_letters: &[&str]) -> Self {
        let mut names = a.state_names().to_vec();
        names.extend(extra.iter().cloned());
        let mut letters = a.letter_names().to_vec();
        letters.extend(extra_letters.iter().map(|s| s.to_string()));
        let k = letters.len();
        let mut table = vec![None; names.len() * k];
        for q in a.state_ids() {
            for x in a.letter_ids() {
                table[q.0 * k + x.0] = a.delta(q, x).map(|t| t.0);
            }
        }
        Extended { names, letters, table }
    }

    fn k(&self) -> usize {
        self.letters.len()
    }

    fn set(&mut self, q: usize, x: usize, t: usize) {
        let k = self.k();
        self.table[q * k + x] = Some(t);
    }

    fn get(&self, q: usize, x: usize) -> Option<usize> {
        self.table[q * self.k() + x]
    }

    fn build(self) -> Result<Automaton, AutomatonError> {
        Automaton::from_table(self.names, self.letters, self.table)
    }
}

fn first_state(a: &Automaton) -> StateId {
    assert!(a.num_states() > 0, "reduction needs a nonempty automaton");
    StateId(0)
}

/// Completion with a sink-like `q⊖` for undefined entries and a marker `r`
/// active only at the start; `R = {(q⊖, r)}` under `leq_set`.
pub fn careful_to_leq_sets(a: &Automaton) -> Result<ReductionOutput, ReductionError> {
    let t = first_state(a).0;
    let n = a.num_states();
    let mut names = Names::new(a);
    let (bad, r) = (n, n + 1);
    let extra = [names.fresh("q-"), names.fresh("r")];
    let mut e = Extended::new(a, &extra, &[]);
    complete_into(&mut e, n, bad);
    for x in 0..e.k() {
        let target = e.get(t, x).expect("completed");
        e.set(bad, x, target);
        e.set(r, x, target);
    }
    let automaton = e.build()?;
    Ok(ReductionOutput {
        automaton,
        relation: Relation::new([(StateId(bad), StateId(r))]),
        kind: OrderKind::LeqSet,
        variant: Variant::From0,
        subset: None,
        provenance: "careful_to_leq_sets: undefined entries redirected to q-; q- and r copy the first state".into(),
    })
}

fn complete_into(e: &mut Extended, n: usize, bad: usize) {
    for q in 0..n {
        for x in 0..e.k() {
            if e.get(q, x).is_none() {
                e.set(q, x, bad);
            }
        }
    }
}

/// As [`careful_to_leq_sets`], plus a copy of every state of `Q ∪ {r}`
/// leading to its original; `ll_set`.
pub fn careful_to_ll_sets(a: &Automaton) -> Result<ReductionOutput, ReductionError> {
    let t = first_state(a).0;
    let n = a.num_states();
    let mut names = Names::new(a);
    let (bad, r) = (n, n + 1);
    let mut extra = vec![names.fresh("q-"), names.fresh("r")];
    let originals: Vec<usize> = (0..n).chain([r]).collect();
    let copy_names: Vec<String> = originals
        .iter()
        .map(|&q| {
            let base = if q == r { extra[1].clone() } else { a.state_name(StateId(q)).to_string() };
            names.fresh(&format!("{base}^"))
        })
        .collect();
    extra.extend(copy_names);
    let mut e = Extended::new(a, &extra, &[]);
    complete_into(&mut e, n, bad);
    for x in 0..e.k() {
        let target = e.get(t, x).expect("completed");
        e.set(bad, x, target);
        e.set(r, x, target);
        for (i, &q) in originals.iter().enumerate() {
            e.set(n + 2 + i, x, q);
        }
    }
    Ok(ReductionOutput {
        automaton: e.build()?,
        relation: Relation::new([(StateId(bad), StateId(r))]),
        kind: OrderKind::LlSet,
        variant: Variant::From0,
        subset: None,
        provenance: "careful_to_ll_sets: leq_set completion plus copies of Q and r that fall into their originals"
            .into(),
    })
}

/// The vertex cover gadget automaton over `V ∪ {p}` with
/// `R = {(q1, r)} ∪ {(e, ê)}`; `leq_path`, from 0.
pub fn vc_to_leq_paths0(g: &Graph, k: usize) -> Result<ReductionOutput, ReductionError> {
    if k > g.vertices.len() {
        return Err(ReductionError::CoverBoundTooLarge {
            k,
            vertices: g.vertices.len(),
        });
    }
    let mut names: Vec<String> = vec!["f".into(), "r".into(), "s".into()];
    let (f, r, s) = (0, 1, 2);
    let q = |i: usize| 2 + i;
    names.extend((1..=k + 2).map(|i| format!("q{i}")));
    let edge_base = names.len();
    for &(u, v) in &g.edges {
        names.push(format!("e{u}_{v}"));
        names.push(format!("e{u}_{v}^"));
    }
    let mut letters: Vec<String> = g.vertices.iter().map(|v| format!("v{v}")).collect();
    letters.push("p".into());
    let nv = g.vertices.len();
    let p = nv;
    let kk = letters.len();
    let mut table = vec![None; names.len() * kk];
    let mut set = |from: usize, x: usize, to: usize| table[from * kk + x] = Some(to);
    for x in 0..kk {
        set(s, x, s);
        let rest = if x == p { s } else { r };
        set(r, x, rest);
        set(f, x, if x == p { s } else { f });
    }
    for i in 1..=k + 2 {
        for x in 0..nv {
            set(q(i), x, if i <= k + 1 { q(i + 1) } else { q(i) });
        }
        let on_p = if i <= k {
            q(i)
        } else if i == k + 1 {
            r
        } else {
            s
        };
        set(q(i), p, on_p);
    }
    let vindex = |v: u64| g.vertices.binary_search(&v).expect("endpoint is a vertex");
    let mut pairs = vec![(StateId(q(1)), StateId(r))];
    for (j, &(u, v)) in g.edges.iter().enumerate() {
        let (e, hat) = (edge_base + 2 * j, edge_base + 2 * j + 1);
        for x in 0..nv {
            let to = if x == vindex(u) || x == vindex(v) { hat } else { e };
            set(e, x, to);
            set(hat, x, hat);
        }
        set(e, p, f);
        set(hat, p, s);
        pairs.push((StateId(e), StateId(hat)));
    }
    Ok(ReductionOutput {
        automaton: Automaton::from_table(names, letters, table)?,
        relation: Relation::new(pairs),
        kind: OrderKind::LeqPath,
        variant: Variant::From0,
        subset: None,
        provenance: format!(
            "vc_to_leq_paths0: vertex cover of size {k} on {} vertices and {} edges",
            g.vertices.len(),
            g.edges.len()
        ),
    })
}

/// Completion through `q⊖` with a new letter `c` that leads the gadget
/// states into `Q`; `R = {(s, r)} ∪ {q⊖} × Q` under `lf_path`. The from-1
/// variant adds copies of `Q ∪ {r}` falling into their originals.
pub fn careful_to_lf_paths(a: &Automaton, v: Variant) -> Result<ReductionOutput, ReductionError> {
    let t = first_state(a).0;
    let n = a.num_states();
    let mut names = Names::new(a);
    let (bad, r, s) = (n, n + 1, n + 2);
    let mut extra = vec![names.fresh("q-"), names.fresh("r"), names.fresh("s")];
    let originals: Vec<usize> = (0..n).chain([r]).collect();
    if v == Variant::From1 {
        for &q in &originals {
            let base = if q == r { extra[1].clone() } else { a.state_name(StateId(q)).to_string() };
            let name = names.fresh(&format!("{base}'"));
            extra.push(name);
        }
    }
    let c_name = fresh_letter(a, "c");
    let mut e = Extended::new(a, &extra, &[c_name.as_str()]);
    let c = e.k() - 1;
    for q in 0..n {
        for x in 0..c {
            if e.get(q, x).is_none() {
                e.set(q, x, bad);
            }
        }
        e.set(q, c, q);
    }
    for x in 0..c {
        e.set(bad, x, bad);
        e.set(r, x, s);
        e.set(s, x, s);
    }
    for g in [bad, r, s] {
        e.set(g, c, t);
    }
    if v == Variant::From1 {
        for (i, &q) in originals.iter().enumerate() {
            for x in 0..=c {
                e.set(n + 3 + i, x, q);
            }
        }
    }
    let mut pairs = vec![(StateId(s), StateId(r))];
    pairs.extend((0..n).map(|q| (StateId(bad), StateId(q))));
    Ok(ReductionOutput {
        automaton: e.build()?,
        relation: Relation::new(pairs),
        kind: OrderKind::LfPath,
        variant: v,
        subset: None,
        provenance: format!("careful_to_lf_paths ({v}): completion through q-, gadget letter {c_name}"),
    })
}

fn fresh_letter(a: &Automaton, base: &str) -> String {
    let mut name = base.to_string();
    while a.letter(&name).is_ok() {
        name.push('\'');
    }
    name
}

/// Subset synchronization of a complete weakly acyclic automaton to
/// `lf_path`, from 1, under a strict total order.
pub fn subsetwaa_to_total1(a: &Automaton, s: &StateSet) -> Result<ReductionOutput, ReductionError> {
    if !a.is_complete() {
        return Err(AutomatonError::Partial.into());
    }
    let order = a.is_weakly_acyclic().ok_or(AutomatonError::NotWeaklyAcyclic)?;
    if s.len() < 2 {
        return Err(ReductionError::SubsetTooSmall);
    }
    let n = a.num_states();
    let qs = s.first().expect("nonempty").0;
    let members: Vec<usize> = s.iter().map(|q| q.0).collect();
    let mut names = Names::new(a);
    let mut extra: Vec<String> = members
        .iter()
        .map(|&q| names.fresh(&format!("{}^", a.state_name(StateId(q)))))
        .collect();
    let low = n + members.len();
    let high = low + 1;
    extra.push(names.fresh("q<"));
    extra.push(names.fresh("q>"));
    let c_name = fresh_letter(a, "c");
    let mut e = Extended::new(a, &extra, &[c_name.as_str()]);
    let c = e.k() - 1;
    for q in 0..n {
        e.set(q, c, low);
    }
    for (i, &q) in members.iter().enumerate() {
        for x in 0..c {
            e.set(n + i, x, n + i);
        }
        e.set(n + i, c, q);
    }
    for x in 0..c {
        let target = e.get(qs, x).expect("complete");
        e.set(low, x, target);
        e.set(high, x, high);
    }
    e.set(low, c, qs);
    e.set(high, c, qs);

    let mut total = vec![StateId(low)];
    for q in order {
        if let Some(i) = members.iter().position(|&m| m == q.0) {
            total.push(StateId(n + i));
        }
        total.push(q);
    }
    total.push(StateId(high));
    Ok(ReductionOutput {
        automaton: e.build()?,
        relation: Relation::strict_total(&total),
        kind: OrderKind::LfPath,
        variant: Variant::From1,
        subset: None,
        provenance: format!(
            "subsetwaa_to_total1: subset of {} states, copies placed before their originals, letter {c_name}",
            members.len()
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::fixtures::p1;
    use crate::order::check_word;
    use crate::powerset::{careful_decide, decide, DEFAULT_BUDGET};
    use crate::Outcome;

    fn verdict(out: &ReductionOutput) -> Outcome {
        let start = out.subset.clone().unwrap_or_else(|| out.automaton.full_set());
        decide(&out.automaton, out.kind, out.variant, &out.relation, &start).outcome
    }

    fn p1_without_b() -> Automaton {
        let mut p = p1();
        let b = p.letter("b").unwrap();
        for q in p.state_ids().collect::<Vec<_>>() {
            p.replace_transition(q, b, None);
        }
        p
    }

    #[test]
    fn leq_sets_on_p1() {
        let out = careful_to_leq_sets(&p1()).unwrap();
        assert_eq!(out.automaton.num_states(), 5);
        assert!(out.automaton.is_complete());
        for v in Variant::ALL {
            let o = ReductionOutput { variant: v, ..out.clone() };
            assert!(verdict(&o).is_positive());
        }
        let neg = careful_to_leq_sets(&p1_without_b()).unwrap();
        assert_eq!(verdict(&neg), Outcome::Negative);
    }

    #[test]
    fn ll_sets_on_p1() {
        let out = careful_to_ll_sets(&p1()).unwrap();
        assert_eq!(out.automaton.num_states(), 9);
        assert!(verdict(&out).is_positive());
        let empty = Automaton::new(["a", "b"], Vec::<&str>::new()).unwrap();
        let out = careful_to_ll_sets(&empty).unwrap();
        assert_eq!(verdict(&out), Outcome::Negative);
        assert_eq!(careful_decide(&empty, DEFAULT_BUDGET).outcome, Outcome::Negative);
    }

    #[test]
    fn vc_single_edge() {
        let g = Graph::new([], [(1, 2)]).unwrap();
        let out = vc_to_leq_paths0(&g, 1).unwrap();
        assert_eq!(out.automaton.num_states(), 3 + 2 + 3);
        let a = &out.automaton;
        let w = a.word(["v1", "p", "p"]).unwrap();
        assert!(check_word(a, out.kind, out.variant, &out.relation, &a.full_set(), &w).is_witness());
        assert!(verdict(&out).is_positive());
        let out = vc_to_leq_paths0(&g, 0).unwrap();
        assert_eq!(verdict(&out), Outcome::Negative);
        assert!(matches!(vc_to_leq_paths0(&g, 3), Err(ReductionError::CoverBoundTooLarge { .. })));
        assert!(matches!(Graph::new([], [(1, 1)]), Err(ReductionError::SelfLoop(1, 1))));
    }

    #[test]
    fn vc_triangle() {
        let g = Graph::new([], [(1, 2), (2, 3), (1, 3)]).unwrap();
        assert!(g.has_vertex_cover(2) && !g.has_vertex_cover(1));
        let out = vc_to_leq_paths0(&g, 2).unwrap();
        assert_eq!(out.automaton.num_states(), 3 + 6 + 4);
        assert!(verdict(&out).is_positive());
    }

    #[test]
    fn lf_paths_on_p1() {
        let out = careful_to_lf_paths(&p1(), Variant::From0).unwrap();
        assert_eq!(out.automaton.num_states(), 6);
        let a = &out.automaton;
        let w = a.word(["c", "a", "b"]).unwrap();
        assert!(check_word(a, out.kind, out.variant, &out.relation, &a.full_set(), &w).is_witness());
        let out1 = careful_to_lf_paths(&p1(), Variant::From1).unwrap();
        assert_eq!(out1.automaton.num_states(), 10);
        assert!(verdict(&out1).is_positive());
        for v in Variant::ALL {
            let neg = careful_to_lf_paths(&p1_without_b(), v).unwrap();
            assert_eq!(verdict(&neg), Outcome::Negative);
        }
    }

    #[test]
    fn subset_chain() {
        // x -> y -> z, z a sink
        let a = Automaton::from_table(["x", "y", "z"], ["a"], vec![Some(1), Some(2), Some(2)]).unwrap();
        let s = a.set_of(["x", "y"]).unwrap();
        let out = subsetwaa_to_total1(&a, &s).unwrap();
        assert_eq!(out.automaton.num_states(), 3 + 2 + 2);
        assert!(verdict(&out).is_positive());
        let single = a.set_of(["x"]).unwrap();
        assert!(matches!(subsetwaa_to_total1(&a, &single), Err(ReductionError::SubsetTooSmall)));
    }

    #[test]
    fn subset_disjoint_sinks() {
        let a = Automaton::from_table(["x", "y", "u", "v"], ["a"], vec![Some(2), Some(3), Some(2), Some(3)]).unwrap();
        let s = a.set_of(["x", "y"]).unwrap();
        let out = subsetwaa_to_total1(&a, &s).unwrap();
        assert_eq!(verdict(&out), Outcome::Negative);
    }
}
