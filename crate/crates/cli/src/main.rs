//! `syncorder` command-line front end.
//!
//! Exit codes: 0 yes / satisfied, 1 no, 2 inconclusive or negative only up
//! to a bound, 64 usage, 65 bad input or inapplicable engine, 66 missing
//! input file, 74 output write failure.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use syncorder::certificate::decide_ll_path;
use syncorder::oracle::{enumerate_decide, OracleVerdict};
use syncorder::order::{Evaluation, Satisfaction};
use syncorder::powerset;
use syncorder::reductions::{self, ReductionOutput};
use syncorder::total::{careful_sync_pwaa, decide_total_from1, fast_decide, greedy_decide, TotalOrder};
use syncorder::{generate, io, Instance, OrderKind, Outcome, Variant};

const EXIT_USAGE: u8 = 64;
const EXIT_DATA: u8 = 65;
const EXIT_NO_INPUT: u8 = 66;
const EXIT_IO: u8 = 74;

#[derive(Parser)]
#[command(name = "syncorder", version, about = "Synchronizing words under state-order constraints")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a synchronizing word satisfying the relation exists.
    Decide {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::Auto)]
        engine: Engine,
        /// Maximum number of powerset configurations.
        #[arg(long, default_value_t = powerset::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Verify a word against the instance.
    Check {
        file: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Print the relation a word induces under the instance's order kind.
    Orders {
        file: PathBuf,
        #[arg(long)]
        word: String,
    },
    /// Careful synchronization of a partial weakly acyclic automaton.
    Careful { file: PathBuf },
    /// Translate a source instance into a constrained synchronization instance.
    Reduce {
        #[arg(value_enum)]
        name: Reduction,
        /// Instance file, or an edge list for `vc-to-leq-paths0`.
        file: PathBuf,
        /// Vertex cover bound.
        #[arg(long)]
        k: Option<usize>,
        /// Variant for `careful-to-lf-paths`.
        #[arg(long, value_enum, default_value_t = VariantArg::From0)]
        variant: VariantArg,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Decide by enumerating all words up to a length.
    Oracle {
        file: PathBuf,
        #[arg(long)]
        max_len: usize,
    },
    /// Write a seeded random complete instance.
    Gen {
        #[arg(long)]
        states: usize,
        #[arg(long)]
        letters: usize,
        #[arg(long, default_value_t = 0)]
        pairs: usize,
        #[arg(long, value_enum, default_value_t = KindArg::LlSet)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = VariantArg::From0)]
        variant: VariantArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Engine {
    Auto,
    Powerset,
    Fast,
    Greedy,
    Certificate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Reduction {
    CarefulToLeqSets,
    CarefulToLlSets,
    VcToLeqPaths0,
    CarefulToLfPaths,
    SubsetwaaToTotal1,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    LlSet,
    LeqSet,
    LlPath,
    LeqPath,
    LfPath,
}

impl From<KindArg> for OrderKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::LlSet => OrderKind::LlSet,
            KindArg::LeqSet => OrderKind::LeqSet,
            KindArg::LlPath => OrderKind::LlPath,
            KindArg::LeqPath => OrderKind::LeqPath,
            KindArg::LfPath => OrderKind::LfPath,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    From0,
    From1,
}

impl From<VariantArg> for Variant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::From0 => Variant::From0,
            VariantArg::From1 => Variant::From1,
        }
    }
}

struct Failure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

/// Output text and exit code of a successful run.
type Report = (String, u8);

fn read_text(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| {
        let code = if e.kind() == std::io::ErrorKind::NotFound { EXIT_NO_INPUT } else { EXIT_DATA };
        fail(code, format!("{}: {e}", path.display()))
    })
}

fn load(path: &Path) -> Result<Instance, Failure> {
    let text = read_text(path)?;
    io::parse(&text).map_err(|e| fail(EXIT_DATA, format!("{}: {e}", path.display())))
}

fn write_out(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| fail(EXIT_IO, format!("{}: {e}", path.display())))
}

fn outcome_report(inst: &Instance, outcome: &Outcome) -> Report {
    match outcome {
        Outcome::Positive(w) => (format!("YES {}", inst.automaton.format_word(w)), 0),
        Outcome::Negative => ("NO".into(), 1),
        Outcome::Inconclusive => ("INCONCLUSIVE".into(), 2),
    }
}

fn decide(inst: &Instance, engine: Engine, budget: usize) -> Result<Report, Failure> {
    let a = &inst.automaton;
    let (kind, v) = (inst.kind_or_default(), inst.variant_or_default());
    let r = &inst.relation;
    let full_start = inst.subset.is_none() || inst.start().len() == a.num_states();
    let total = TotalOrder::from_relation(a, r);
    let total_applies = || -> Result<(), String> {
        if kind != OrderKind::LfPath {
            return Err(format!("needs order lf_path, instance uses {kind}"));
        }
        if !full_start {
            return Err("needs the full state set as start, instance has a subset".into());
        }
        if !a.is_complete() {
            return Err("needs a complete automaton".into());
        }
        total.as_ref().map(|_| ()).map_err(|e| format!("needs a strict total order: {e}"))
    };
    let certificate_applies = || -> Result<(), String> {
        if kind != OrderKind::LlPath {
            return Err(format!("needs order ll_path, instance uses {kind}"));
        }
        if !full_start {
            return Err("needs the full state set as start, instance has a subset".into());
        }
        if !a.is_complete() {
            return Err("needs a complete automaton".into());
        }
        Ok(())
    };
    let engine = match engine {
        Engine::Auto if total_applies().is_ok() => Engine::Fast,
        Engine::Auto if certificate_applies().is_ok() => Engine::Certificate,
        Engine::Auto => Engine::Powerset,
        e => e,
    };
    let inapplicable = |name: &str, why: String| fail(EXIT_DATA, format!("engine {name} does not apply: {why}"));
    let outcome = match engine {
        Engine::Fast => {
            total_applies().map_err(|why| inapplicable("fast", why))?;
            match v {
                Variant::From0 => fast_decide(a, r).map_err(|e| fail(EXIT_DATA, e.to_string()))?.outcome,
                Variant::From1 => decide_total_from1(a, r, budget).map_err(|e| fail(EXIT_DATA, e.to_string()))?,
            }
        }
        Engine::Greedy => {
            total_applies().map_err(|why| inapplicable("greedy", why))?;
            if v != Variant::From0 {
                return Err(inapplicable("greedy", "needs variant from0".into()));
            }
            greedy_decide(a, r).map_err(|e| fail(EXIT_DATA, e.to_string()))?
        }
        Engine::Certificate => {
            certificate_applies().map_err(|why| inapplicable("certificate", why))?;
            decide_ll_path(a, r, v).map_err(|e| fail(EXIT_DATA, e.to_string()))?.outcome
        }
        Engine::Powerset | Engine::Auto => {
            r.check(a).map_err(|e| fail(EXIT_DATA, e.to_string()))?;
            powerset::decide_with_budget(a, kind, v, r, &inst.start(), budget).outcome
        }
    };
    Ok(outcome_report(inst, &outcome))
}

fn evaluation(inst: &Instance, word: &str) -> Result<Result<Evaluation, String>, Failure> {
    let a = &inst.automaton;
    let w = a.parse_word(word).map_err(|e| fail(EXIT_DATA, format!("word: {e}")))?;
    Ok(Evaluation::new(a, &inst.start(), &w, inst.variant_or_default()).map_err(|e| {
        let u = e.0;
        format!(
            "UNDEFINED at position {}: state {} has no {}-transition",
            u.position,
            a.state_name(u.state),
            a.letter_name(u.letter)
        )
    }))
}

fn check(inst: &Instance, word: &str) -> Result<Report, Failure> {
    let a = &inst.automaton;
    inst.relation.check(a).map_err(|e| fail(EXIT_DATA, e.to_string()))?;
    let eval = match evaluation(inst, word)? {
        Ok(eval) => eval,
        Err(msg) => return Ok((msg, 1)),
    };
    let sync = if eval.image().is_singleton() {
        format!("synchronized to {}", a.state_name(eval.image().first().unwrap()))
    } else {
        format!("not synchronized, image {}", a.format_set(eval.image()))
    };
    Ok(match eval.satisfies(inst.kind_or_default(), &inst.relation) {
        Satisfaction::Satisfied => {
            let code = if eval.image().is_singleton() { 0 } else { 1 };
            (format!("SATISFIED; {sync}"), code)
        }
        Satisfaction::Violated(p, q) => (
            format!("VIOLATED at ({}, {}); {sync}", a.state_name(p), a.state_name(q)),
            1,
        ),
    })
}

fn orders(inst: &Instance, word: &str) -> Result<Report, Failure> {
    let a = &inst.automaton;
    let eval = match evaluation(inst, word)? {
        Ok(eval) => eval,
        Err(msg) => return Ok((msg, 1)),
    };
    let mut out = String::new();
    let _ = write!(out, "# {} {}", inst.kind_or_default(), inst.variant_or_default());
    for (p, q) in eval.induced(inst.kind_or_default()).iter() {
        let _ = write!(out, "\npair: {} {}", a.state_name(p), a.state_name(q));
    }
    Ok((out, 0))
}

fn careful(inst: &Instance) -> Result<Report, Failure> {
    let outcome = careful_sync_pwaa(&inst.automaton).map_err(|e| fail(EXIT_DATA, e.to_string()))?;
    Ok(outcome_report(inst, &outcome))
}

fn reduce(name: Reduction, file: &Path, k: Option<usize>, v: Variant, output: &Path) -> Result<Report, Failure> {
    let data = |e: syncorder::ReductionError| fail(EXIT_DATA, e.to_string());
    let out: ReductionOutput = match name {
        Reduction::VcToLeqPaths0 => {
            let text = read_text(file)?;
            let g = io::parse_graph(&text).map_err(|e| fail(EXIT_DATA, format!("{}: {e}", file.display())))?;
            let k = k.ok_or_else(|| fail(EXIT_USAGE, "vc-to-leq-paths0 needs --k"))?;
            reductions::vc_to_leq_paths0(&g, k).map_err(data)?
        }
        other => {
            let inst = load(file)?;
            let a = &inst.automaton;
            if a.num_states() == 0 {
                return Err(fail(EXIT_DATA, "reduction needs at least one state"));
            }
            match other {
                Reduction::CarefulToLeqSets => reductions::careful_to_leq_sets(a),
                Reduction::CarefulToLlSets => reductions::careful_to_ll_sets(a),
                Reduction::CarefulToLfPaths => reductions::careful_to_lf_paths(a, v),
                Reduction::SubsetwaaToTotal1 => {
                    let s = inst.subset.clone().ok_or_else(|| fail(EXIT_DATA, "instance has no `subset:` line"))?;
                    reductions::subsetwaa_to_total1(a, &s)
                }
                Reduction::VcToLeqPaths0 => unreachable!(),
            }
            .map_err(data)?
        }
    };
    let comments = vec![out.provenance.clone(), format!("source: {}", file.display())];
    let (states, pairs) = (out.automaton.num_states(), out.relation.len());
    write_out(output, &io::emit_with_comments(&Instance::from(out), &comments))?;
    Ok((format!("wrote {} ({states} states, {pairs} pairs)", output.display()), 0))
}

fn oracle(inst: &Instance, max_len: usize) -> Result<Report, Failure> {
    let a = &inst.automaton;
    inst.relation.check(a).map_err(|e| fail(EXIT_DATA, e.to_string()))?;
    let verdict = enumerate_decide(
        a,
        inst.kind_or_default(),
        inst.variant_or_default(),
        &inst.relation,
        &inst.start(),
        max_len,
    );
    Ok(match verdict {
        OracleVerdict::Positive(w) => (format!("YES {}", a.format_word(&w)), 0),
        OracleVerdict::Negative => ("NO".into(), 1),
        OracleVerdict::NegativeUpToBound(d) => (format!("NO up to length {d}"), 2),
    })
}

fn gen(
    n: usize,
    k: usize,
    m: usize,
    kind: OrderKind,
    v: Variant,
    seed: u64,
    output: &Path,
) -> Result<Report, Failure> {
    if n == 0 || k == 0 {
        return Err(fail(EXIT_USAGE, "--states and --letters must be positive"));
    }
    let inst = generate::instance(&mut generate::rng(seed), n, k, m, kind, v);
    let comment = format!("random complete instance: states {n}, letters {k}, pairs {m}, seed {seed}");
    write_out(output, &io::emit_with_comments(&inst, &[comment]))?;
    Ok((format!("wrote {}", output.display()), 0))
}

fn run(cli: Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Decide { file, engine, budget } => decide(&load(&file)?, engine, budget),
        Command::Check { file, word } => check(&load(&file)?, &word),
        Command::Orders { file, word } => orders(&load(&file)?, &word),
        Command::Careful { file } => careful(&load(&file)?),
        Command::Reduce {
            name,
            file,
            k,
            variant,
            output,
        } => reduce(name, &file, k, variant.into(), &output),
        Command::Oracle { file, max_len } => oracle(&load(&file)?, max_len),
        Command::Gen {
            states,
            letters,
            pairs,
            kind,
            variant,
            seed,
            output,
        } => gen(states, letters, pairs, kind.into(), variant.into(), seed, &output),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok((text, code)) => {
            println!("{text}");
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("syncorder: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
