//! Line-oriented instance files.
//!
//! ```text
//! # comment
//! states: 1 2 3
//! alphabet: a b
//! trans: 1 a 2
//! order: ll_set
//! variant: from0
//! pair: 1 2
//! subset: 1 2
//! ```
//!
//! `states:` and `alphabet:` are required and may appear anywhere; `order:`,
//! `variant:` and `subset:` are optional; `trans:` and `pair:` repeat.
//! A missing transition is undefined.

use std::fmt::Write as _;

use crate::automaton::{Automaton, StateSet};
use crate::error::{AutomatonError, ParseError};
use crate::order::{OrderKind, Relation, Variant};
use crate::reductions::ReductionOutput;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub automaton: Automaton,
    pub kind: Option<OrderKind>,
    pub variant: Option<Variant>,
    pub relation: Relation,
    pub subset: Option<StateSet>,
}

impl Instance {
    pub fn new(automaton: Automaton) -> Self {
        Instance {
            automaton,
            kind: None,
            variant: None,
            relation: Relation::empty(),
            subset: None,
        }
    }

    /// The start set: the subset if given, else all states.
    pub fn start(&self) -> StateSet {
        self.subset.clone().unwrap_or_else(|| self.automaton.full_set())
    }

    /// The order kind, defaulting to `ll_set`.
    pub fn kind_or_default(&self) -> OrderKind {
        self.kind.unwrap_or(OrderKind::LlSet)
    }

    /// The variant, defaulting to `from0`.
    pub fn variant_or_default(&self) -> Variant {
        self.variant.unwrap_or(Variant::From0)
    }
}

impl From<ReductionOutput> for Instance {
    fn from(out: ReductionOutput) -> Self {
        Instance {
            automaton: out.automaton,
            kind: Some(out.kind),
            variant: Some(out.variant),
            relation: out.relation,
            subset: out.subset,
        }
    }
}

struct Line<'a> {
    no: usize,
    key: &'a str,
    tokens: Vec<&'a str>,
}

pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let mut lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, rest) = content
            .split_once(':')
            .ok_or_else(|| ParseError::new(no, format!("expected `key: value`, found `{content}`")))?;
        lines.push(Line {
            no,
            key: key.trim(),
            tokens: rest.split_whitespace().collect(),
        });
    }

    let mut states: Option<&Line> = None;
    let mut alphabet: Option<&Line> = None;
    for line in &lines {
        let slot = match line.key {
            "states" => &mut states,
            "alphabet" => &mut alphabet,
            "trans" | "order" | "variant" | "pair" | "subset" => continue,
            other => return Err(ParseError::new(line.no, format!("unknown key `{other}`"))),
        };
        if slot.is_some() {
            return Err(ParseError::new(line.no, format!("`{}:` given twice", line.key)));
        }
        *slot = Some(line);
    }
    let first_use = lines.first().map_or(1, |l| l.no);
    let states = states.ok_or_else(|| ParseError::new(first_use, "missing `states:` line"))?;
    let alphabet = alphabet.ok_or_else(|| ParseError::new(first_use, "missing `alphabet:` line"))?;
    let at = |no: usize| move |e: AutomatonError| ParseError::new(no, e.to_string());
    let mut automaton = Automaton::new(states.tokens.iter().copied(), alphabet.tokens.iter().copied())
        .map_err(at(states.no))?;

    let mut kind = None;
    let mut variant = None;
    let mut pairs = Vec::new();
    let mut subset = None;
    for line in &lines {
        let arity = |n: usize| {
            if line.tokens.len() == n {
                Ok(())
            } else {
                Err(ParseError::new(
                    line.no,
                    format!("`{}:` takes {n} token(s), found {}", line.key, line.tokens.len()),
                ))
            }
        };
        match line.key {
            "trans" => {
                arity(3)?;
                let q = automaton.state(line.tokens[0]).map_err(at(line.no))?;
                let x = automaton.letter(line.tokens[1]).map_err(at(line.no))?;
                let t = automaton.state(line.tokens[2]).map_err(at(line.no))?;
                automaton.set_transition(q, x, t).map_err(at(line.no))?;
            }
            "order" => {
                arity(1)?;
                if kind.is_some() {
                    return Err(ParseError::new(line.no, "`order:` given twice"));
                }
                kind = Some(line.tokens[0].parse().map_err(|e: String| ParseError::new(line.no, e))?);
            }
            "variant" => {
                arity(1)?;
                if variant.is_some() {
                    return Err(ParseError::new(line.no, "`variant:` given twice"));
                }
                variant = Some(line.tokens[0].parse().map_err(|e: String| ParseError::new(line.no, e))?);
            }
            "pair" => {
                arity(2)?;
                let p = automaton.state(line.tokens[0]).map_err(at(line.no))?;
                let q = automaton.state(line.tokens[1]).map_err(at(line.no))?;
                pairs.push((p, q));
            }
            "subset" => {
                if subset.is_some() {
                    return Err(ParseError::new(line.no, "`subset:` given twice"));
                }
                subset = Some(automaton.set_of(line.tokens.iter().copied()).map_err(at(line.no))?);
            }
            _ => {}
        }
    }
    Ok(Instance {
        automaton,
        kind,
        variant,
        relation: Relation::new(pairs),
        subset,
    })
}

pub fn emit(inst: &Instance) -> String {
    emit_with_comments(inst, &[])
}

pub fn emit_with_comments(inst: &Instance, comments: &[String]) -> String {
    let a = &inst.automaton;
    let mut out = String::new();
    for c in comments {
        for line in c.lines() {
            let _ = writeln!(out, "# {line}");
        }
    }
    let _ = writeln!(out, "states: {}", a.state_names().join(" "));
    let _ = writeln!(out, "alphabet: {}", a.letter_names().join(" "));
    for q in a.state_ids() {
        for x in a.letter_ids() {
            if let Some(t) = a.delta(q, x) {
                let _ = writeln!(out, "trans: {} {} {}", a.state_name(q), a.letter_name(x), a.state_name(t));
            }
        }
    }
    if let Some(k) = inst.kind {
        let _ = writeln!(out, "order: {k}");
    }
    if let Some(v) = inst.variant {
        let _ = writeln!(out, "variant: {v}");
    }
    for (p, q) in inst.relation.iter() {
        let _ = writeln!(out, "pair: {} {}", a.state_name(p), a.state_name(q));
    }
    if let Some(s) = &inst.subset {
        let names: Vec<&str> = s.iter().map(|q| a.state_name(q)).collect();
        let _ = writeln!(out, "subset: {}", names.join(" "));
    }
    out
}

/// Edge-list graphs: one `u v` pair per line, plus optional
/// `vertices: ...` lines for isolated vertices; `#` starts a comment.
pub fn parse_graph(text: &str) -> Result<crate::reductions::Graph, ParseError> {
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    let num = |no: usize, tok: &str| {
        tok.parse::<u64>()
            .map_err(|_| ParseError::new(no, format!("vertex `{tok}` is not a nonnegative integer")))
    };
    for (i, raw) in text.lines().enumerate() {
        let no = i + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if let Some(rest) = content.strip_prefix("vertices:") {
            for tok in rest.split_whitespace() {
                vertices.push(num(no, tok)?);
            }
            continue;
        }
        let toks: Vec<&str> = content.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(ParseError::new(no, format!("expected `u v`, found `{content}`")));
        }
        let (u, v) = (num(no, toks[0])?, num(no, toks[1])?);
        if u == v {
            return Err(ParseError::new(no, format!("self-loop on vertex {u}")));
        }
        edges.push((u, v));
    }
    Ok(crate::reductions::Graph::new(vertices, edges).expect("self-loops rejected above"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::fixtures::{fig1, p1};

    const FIG1: &str = "\
# five states
states: 1 2 3 4 5
alphabet: a b
trans: 1 a 1
trans: 1 b 2
trans: 2 a 3
trans: 2 b 4
trans: 3 a 4
trans: 3 b 2
trans: 4 a 3
trans: 4 b 1
trans: 5 a 4
trans: 5 b 1
order: ll_set
pair: 1 2
";

    #[test]
    fn parses_fig1() {
        let inst = parse(FIG1).unwrap();
        assert_eq!(inst.automaton, fig1());
        assert_eq!(inst.kind, Some(OrderKind::LlSet));
        assert_eq!(inst.variant, None);
        assert_eq!(inst.relation.len(), 1);
        let res = crate::powerset::decide(
            &inst.automaton,
            inst.kind_or_default(),
            inst.variant_or_default(),
            &inst.relation,
            &inst.start(),
        );
        assert!(res.outcome.is_positive());
    }

    #[test]
    fn missing_alphabet_reports_line() {
        let err = parse("\n# x\nstates: 1 2\ntrans: 1 a 2\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains("alphabet"));
    }

    #[test]
    fn p1_is_partial() {
        let text = emit(&Instance::new(p1()));
        assert_eq!(text.lines().filter(|l| l.starts_with("trans:")).count(), 5);
        let inst = parse(&text).unwrap();
        assert!(!inst.automaton.is_complete());
        assert_eq!(inst.automaton, p1());
    }

    #[test]
    fn errors_name_line_and_token() {
        let err = parse("states: 1\nalphabet: a\ntrans: 1 z 1\n").unwrap_err();
        assert_eq!(err.line, 3);
        assert!(err.message.contains('z'));
        let err = parse("states: 1\nalphabet: a\ntrans: 1 a 1\ntrans: 1 a 1\n").unwrap_err();
        assert_eq!(err.line, 4);
        let err = parse("states: 1\nalphabet: a\ncolour: red\n").unwrap_err();
        assert_eq!(err.line, 3);
        let err = parse("states: 1\nalphabet: a\norder: lt\n").unwrap_err();
        assert_eq!(err.line, 3);
    }

    #[test]
    fn round_trip_with_subset() {
        let mut inst = Instance::new(fig1());
        inst.kind = Some(OrderKind::LfPath);
        inst.variant = Some(Variant::From1);
        inst.relation = Relation::from_names(&inst.automaton, [("5", "2"), ("1", "3")]).unwrap();
        inst.subset = Some(inst.automaton.set_of(["2", "4"]).unwrap());
        let text = emit_with_comments(&inst, &["generated".into()]);
        assert_eq!(parse(&text).unwrap(), inst);
    }

    #[test]
    fn graph_files() {
        let g = parse_graph("# k3\n1 2\n2 3\n3 1\nvertices: 7\n").unwrap();
        assert_eq!(g.vertices(), &[1, 2, 3, 7]);
        assert_eq!(g.edges().len(), 3);
        assert!(parse_graph("1 x\n").is_err());
    }
}
