// SPDX-License-Identifier: Apache-2.0

//! Command-line front end. [`run`] takes the argument vector and returns the
//! exit code with everything that would be written to the two streams, so
//! the binary is a thin wrapper and the commands are testable in-process.
//!
//! JSON output carries `"schema": 1` and uses 1-based positions and judges.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use arrovian_core::agenda::Agenda;
use arrovian_core::boolfn::{BoolFn, FnClass, RelevantClass};
use arrovian_core::fourier::spectrum;
use arrovian_core::jar::{
    check_jar, enumerate_arrovian_general, enumerate_arrovian_normal_form, filter_axioms, PiJar, SolutionShape,
};
use arrovian_core::limits::Limits;
use arrovian_core::normalpair::{check_normal_pair, classify_pair, enumerate_normal_pairs, Violation};
use arrovian_core::verify::{describe_shape, verify_suites, VerifyReport, SUITES};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};

pub const SCHEMA: u64 = 1;

#[derive(Debug, Parser)]
#[command(name = "arrovian", version, about = "Boolean-function and judgment-aggregation checks")]
pub struct Cli {
    #[command(flatten)]
    config: ConfigArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
struct ConfigArgs {
    /// Largest arity for functions and symbol universes
    #[arg(long, global = true, env = "ARROVIAN_ARITY_CAP", default_value_t = 20,
          value_parser = clap::value_parser!(u64).range(1..=26))]
    arity_cap: u64,
    /// Largest matrix size m*n swept by the normal-pair check
    #[arg(long, global = true, env = "ARROVIAN_MATRIX_CAP", default_value_t = 25,
          value_parser = clap::value_parser!(u64).range(1..=63))]
    matrix_cap: u64,
    /// Largest candidate space an enumeration may visit
    #[arg(long, global = true, env = "ARROVIAN_ENUMERATION_BUDGET", default_value_t = 10_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    enumeration_budget: u64,
    /// Largest number of profiles a consistency sweep may visit
    #[arg(long, global = true, env = "ARROVIAN_PROFILE_CAP", default_value_t = 10_000_000,
          value_parser = clap::value_parser!(u64).range(1..))]
    profile_cap: u64,
    /// Worker threads; 0 uses every core
    #[arg(long, global = true, env = "ARROVIAN_WORKERS", default_value_t = 0)]
    workers: usize,
    /// Output format
    #[arg(long, global = true, env = "ARROVIAN_OUTPUT", value_enum, default_value_t = Format::Json)]
    output: Format,
    /// Shorthand for --output json
    #[arg(long, global = true, conflicts_with = "text")]
    json: bool,
    /// Shorthand for --output text
    #[arg(long, global = true)]
    text: bool,
}

impl ConfigArgs {
    fn limits(&self) -> Limits {
        Limits {
            arity_cap: self.arity_cap as usize,
            matrix_cap: self.matrix_cap as usize,
            enumeration_budget: self.enumeration_budget,
            profile_cap: self.profile_cap,
        }
    }

    fn format(&self) -> Format {
        if self.json {
            Format::Json
        } else if self.text {
            Format::Text
        } else {
            self.output
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Exact Fourier spectrum of a function
    Fourier { spec: String },
    /// Class, relevant inputs and forceful decomposition of a function
    Classify { spec: String },
    /// Check whether (g, f) is a normal pair
    CheckPair {
        #[arg(long)]
        g: String,
        #[arg(long)]
        f: String,
    },
    /// Enumerate every normal pair of arities (m, n)
    EnumeratePairs {
        #[arg(short)]
        m: usize,
        #[arg(short)]
        n: usize,
    },
    /// Agenda structure and rational judgments
    #[command(subcommand)]
    Agenda(AgendaCommand),
    /// Aggregation rules on an agenda
    #[command(subcommand)]
    Jars(JarsCommand),
    /// Run the verification suites
    Verify {
        /// Suite to run, repeatable; `all` runs every suite
        #[arg(long = "suite", default_value = "all")]
        suites: Vec<String>,
        /// Include elapsed times, which makes output nondeterministic
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Debug, Subcommand)]
enum AgendaCommand {
    /// Symbol-completeness, connectivity, components and |U_X|
    Check { file: PathBuf },
    /// The fully rational judgments with witnesses
    Rationals { file: PathBuf },
}

#[derive(Debug, Subcommand)]
enum JarsCommand {
    /// Enumerate consistent unanimity-preserving rules
    Enumerate {
        #[arg(long)]
        agenda: PathBuf,
        /// Number of judges
        #[arg(short = 'n', long = "judges")]
        judges: usize,
        /// Apply one function to every proposition
        #[arg(long)]
        normal_form: bool,
        /// Keep only anonymous rules
        #[arg(long)]
        anonymous: bool,
        /// Keep only systematic rules
        #[arg(long)]
        systematic: bool,
    },
    /// Check one rule given per position as `<pos>=<fn-spec>`, or `*=<fn-spec>`
    Check {
        #[arg(long)]
        agenda: PathBuf,
        #[arg(short = 'n', long = "judges")]
        judges: usize,
        #[arg(long = "fn", required = true)]
        functions: Vec<String>,
    },
}

/// Exit code and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A command result: the document plus whether a verification failed.
struct Rendered {
    json: Value,
    text: String,
    failed: bool,
}

impl Rendered {
    fn ok(json: Value, text: String) -> Self {
        Rendered { json, text, failed: false }
    }
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome { code: 2, stdout: String::new(), stderr: rendered }
            } else {
                Outcome { code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    let format = cli.config.format();
    let result = match cli.config.workers {
        0 => execute(&cli),
        w => match rayon::ThreadPoolBuilder::new().num_threads(w).build() {
            Ok(pool) => pool.install(|| execute(&cli)),
            Err(e) => Err(format!("cannot start {w} workers: {e}")),
        },
    };
    match result {
        Ok(r) => {
            let mut stdout = match format {
                Format::Json => serde_json::to_string_pretty(&r.json).expect("serializable"),
                Format::Text => r.text.trim_end().to_string(),
            };
            stdout.push('\n');
            Outcome { code: if r.failed { 1 } else { 0 }, stdout, stderr: String::new() }
        }
        Err(message) => Outcome { code: 2, stdout: String::new(), stderr: format!("error: {message}\n") },
    }
}

fn execute(cli: &Cli) -> Result<Rendered, String> {
    let limits = cli.config.limits();
    match &cli.command {
        Command::Fourier { spec } => fourier(&parse_fn(spec, &limits)?),
        Command::Classify { spec } => classify(&parse_fn(spec, &limits)?),
        Command::CheckPair { g, f } => check_pair(&parse_fn(g, &limits)?, &parse_fn(f, &limits)?, &limits),
        Command::EnumeratePairs { m, n } => enumerate_pairs(*m, *n, &limits),
        Command::Agenda(AgendaCommand::Check { file }) => agenda_check(&load_agenda(file, &limits)?),
        Command::Agenda(AgendaCommand::Rationals { file }) => agenda_rationals(&load_agenda(file, &limits)?),
        Command::Jars(JarsCommand::Enumerate { agenda, judges, normal_form, anonymous, systematic }) => {
            let a = load_agenda(agenda, &limits)?;
            jars_enumerate(&a, *judges, *normal_form, *anonymous, *systematic, &limits)
        }
        Command::Jars(JarsCommand::Check { agenda, judges, functions }) => {
            let a = load_agenda(agenda, &limits)?;
            jars_check(a, *judges, functions, &limits)
        }
        Command::Verify { suites, timings } => verify(suites, *timings, &limits),
    }
}

fn parse_fn(spec: &str, limits: &Limits) -> Result<BoolFn, String> {
    BoolFn::parse_spec(spec, limits.arity_cap).map_err(|e| format!("`{spec}`: {e}"))
}

fn load_agenda(path: &Path, limits: &Limits) -> Result<Agenda, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Agenda::from_text(&text, limits).map_err(|e| format!("{}: {e}", path.display()))
}

fn header(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), json!(SCHEMA));
    m.insert("command".into(), json!(command));
    m
}

fn one_based(xs: &[usize]) -> Vec<usize> {
    xs.iter().map(|x| x + 1).collect()
}

fn set_label(mask: usize, arity: usize) -> String {
    let items: Vec<String> = (0..arity).filter(|i| mask >> i & 1 == 1).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", items.join(","))
}

/// Text table with left-aligned columns.
fn table(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> =
        (0..cols).map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for row in rows {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(c, s)| if c + 1 == row.len() { s.clone() } else { format!("{s:<w$}", w = widths[c]) })
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn describe_relevant(r: &RelevantClass) -> String {
    match r.class {
        FnClass::And | FnClass::Or | FnClass::Xor | FnClass::Nxor => {
            format!("{} over {}", r.class.label(), set_label(r.support.iter().fold(0, |a, &i| a | 1 << i), 64))
        }
        other => other.to_string(),
    }
}

fn fourier(f: &BoolFn) -> Result<Rendered, String> {
    let s = spectrum(f);
    let n = f.arity();
    let mut doc = header("fourier");
    doc.insert("function".into(), json!(f.spec_string()));
    doc.insert("arity".into(), json!(n));
    let coefficients: Vec<Value> = (0..1usize << n)
        .map(|r| {
            let subset: Vec<usize> = (0..n).filter(|i| r >> i & 1 == 1).map(|i| i + 1).collect();
            let c = s.coefficient(r);
            json!({ "subset": subset, "num": c.numerator(), "exp": c.exponent(), "value": c.to_string() })
        })
        .collect();
    doc.insert("coefficients".into(), Value::Array(coefficients));
    doc.insert("parseval".into(), json!(s.parseval_sum().to_string()));
    let mut rows = vec![vec!["R".to_string(), "coefficient".to_string()]];
    rows.extend((0..1usize << n).map(|r| vec![set_label(r, n), s.coefficient(r).to_string()]));
    let text = format!("function {}\n{}parseval {}\n", f.spec_string(), table(&rows), s.parseval_sum());
    Ok(Rendered::ok(Value::Object(doc), text))
}

fn classify(f: &BoolFn) -> Result<Rendered, String> {
    let relevant = f.classify_on_relevant();
    let decomposition = (f.arity() >= 2 && f.is_forceful() && f.constant_value().is_none())
        .then(|| f.forceful_decomposition().ok())
        .flatten();
    let mut doc = header("classify");
    doc.insert("function".into(), json!(f.spec_string()));
    doc.insert("arity".into(), json!(f.arity()));
    doc.insert("class".into(), json!(f.classify().to_string()));
    doc.insert("relevant".into(), json!(one_based(&relevant.support)));
    doc.insert("class_on_relevant".into(), json!(describe_relevant(&relevant)));
    doc.insert("symmetric".into(), json!(f.is_symmetric()));
    doc.insert("self_dual".into(), json!(f.flip() == *f));
    doc.insert("forceful".into(), json!(f.is_forceful()));
    doc.insert(
        "decomposition".into(),
        decomposition.as_ref().map_or(Value::Null, |d| {
            json!({
                "c0": d.c0.value(),
                "coefficients": d.coefficients.iter().map(|c| c.value()).collect::<Vec<_>>(),
            })
        }),
    );
    doc.insert("flip".into(), json!(f.flip().spec_string()));
    let rows = vec![
        vec!["function".into(), f.spec_string()],
        vec!["class".into(), f.classify().to_string()],
        vec!["relevant".into(), set_label(relevant.support.iter().fold(0, |a, &i| a | 1 << i), f.arity())],
        vec!["on relevant".into(), describe_relevant(&relevant)],
        vec!["symmetric".into(), f.is_symmetric().to_string()],
        vec!["self-dual".into(), (f.flip() == *f).to_string()],
        vec!["forceful".into(), f.is_forceful().to_string()],
        vec!["flip".into(), f.flip().spec_string()],
    ];
    Ok(Rendered::ok(Value::Object(doc), table(&rows)))
}

fn violation_json(v: Option<Violation>) -> (Value, Value) {
    match v {
        None => (Value::Null, Value::Null),
        Some(Violation::GIrrelevantIndex(i) | Violation::FIrrelevantIndex(i)) => {
            (json!(v.expect("some").label()), json!(i + 1))
        }
        Some(other) => (json!(other.label()), Value::Null),
    }
}

fn check_pair(g: &BoolFn, f: &BoolFn, limits: &Limits) -> Result<Rendered, String> {
    let report = check_normal_pair(g, f, limits).map_err(|e| e.to_string())?;
    let case = if report.is_normal { Some(classify_pair(g, f, limits).map_err(|e| e.to_string())?.case) } else { None };
    let (condition, index) = violation_json(report.violated_condition);
    let mut doc = header("check-pair");
    doc.insert("g".into(), json!(g.spec_string()));
    doc.insert("f".into(), json!(f.spec_string()));
    doc.insert("is_normal".into(), json!(report.is_normal));
    doc.insert("violated_condition".into(), condition.clone());
    doc.insert("violated_index".into(), index);
    doc.insert(
        "counterexample".into(),
        report.counterexample.map_or(
            Value::Null,
            |c| json!({ "matrix": c.matrix_rows(), "column_path": c.column_path, "row_path": c.row_path }),
        ),
    );
    doc.insert("case".into(), case.map_or(Value::Null, |c| json!(c.label())));
    let mut text = format!(
        "g {}\nf {}\nnormal {}\n",
        g.spec_string(),
        f.spec_string(),
        if report.is_normal { "yes" } else { "no" }
    );
    if let Some(v) = report.violated_condition {
        let _ = writeln!(text, "violated {}", v.label());
    }
    if let Some(c) = report.counterexample {
        text.push_str("counterexample\n");
        for row in c.matrix_rows() {
            let cells: Vec<&str> = row.iter().map(|&b| if b { "T" } else { "F" }).collect();
            let _ = writeln!(text, "  {}", cells.join(" "));
        }
        let _ = writeln!(text, "column path {}  row path {}", tf(c.column_path), tf(c.row_path));
    }
    if let Some(c) = case {
        let _ = writeln!(text, "case {}", c.label());
    }
    Ok(Rendered::ok(Value::Object(doc), text))
}

fn tf(b: bool) -> &'static str {
    if b {
        "T"
    } else {
        "F"
    }
}

fn enumerate_pairs(m: usize, n: usize, limits: &Limits) -> Result<Rendered, String> {
    let pairs = enumerate_normal_pairs(m, n, limits).map_err(|e| e.to_string())?;
    let mut entries = Vec::new();
    let mut rows = vec![vec!["g".to_string(), "f".to_string(), "case".to_string()]];
    for (g, f) in &pairs {
        let c = classify_pair(g, f, limits).map_err(|e| e.to_string())?;
        entries.push(json!({
            "g": g.spec_string(),
            "f": f.spec_string(),
            "g_class": c.g_class.to_string(),
            "f_class": c.f_class.to_string(),
            "case": c.case.label(),
        }));
        rows.push(vec![g.spec_string(), f.spec_string(), c.case.label().to_string()]);
    }
    let mut doc = header("enumerate-pairs");
    doc.insert("m".into(), json!(m));
    doc.insert("n".into(), json!(n));
    doc.insert("count".into(), json!(pairs.len()));
    doc.insert("pairs".into(), Value::Array(entries));
    let text = format!("{}{} normal pairs at ({m}, {n})\n", table(&rows), pairs.len());
    Ok(Rendered::ok(Value::Object(doc), text))
}

fn propositions(a: &Agenda) -> Vec<String> {
    a.basis().iter().map(|f| f.to_string()).collect()
}

fn agenda_check(a: &Agenda) -> Result<Rendered, String> {
    let components = a.symbol_graph().components();
    let mut doc = header("agenda-check");
    doc.insert("propositions".into(), json!(propositions(a)));
    doc.insert("symbols".into(), json!(a.universe().iter().map(|s| s.as_str()).collect::<Vec<_>>()));
    doc.insert("symbol_complete".into(), json!(a.is_symbol_complete()));
    doc.insert("symbol_connected".into(), json!(a.is_symbol_connected()));
    doc.insert("atomic".into(), json!(one_based(&a.atomic_positions())));
    doc.insert("compounds".into(), json!(one_based(&a.compound_positions())));
    doc.insert(
        "components".into(),
        Value::Array(
            components
                .iter()
                .map(|c| {
                    let props: Vec<String> = c.iter().map(|&p| a.basis()[p].to_string()).collect();
                    json!({ "positions": one_based(c), "propositions": props })
                })
                .collect(),
        ),
    );
    doc.insert("rational_count".into(), json!(a.rational_judgments().len()));
    let comps: Vec<String> = components
        .iter()
        .map(|c| format!("{{{}}}", c.iter().map(|&p| a.basis()[p].to_string()).collect::<Vec<_>>().join(", ")))
        .collect();
    let rows = vec![
        vec!["agenda".into(), a.to_string()],
        vec!["symbol-complete".into(), a.is_symbol_complete().to_string()],
        vec!["symbol-connected".into(), a.is_symbol_connected().to_string()],
        vec!["components".into(), comps.join(" ")],
        vec!["|U_X|".into(), a.rational_judgments().len().to_string()],
    ];
    Ok(Rendered::ok(Value::Object(doc), table(&rows)))
}

fn agenda_rationals(a: &Agenda) -> Result<Rendered, String> {
    let rs = a.rational_judgments();
    let mut entries = Vec::new();
    let mut rows = vec![vec!["judgment".to_string(), "witness".to_string()]];
    for (j, &w) in rs.judgments().iter().zip(rs.witnesses()) {
        let mut witness = Map::new();
        let mut shown = Vec::new();
        for (i, s) in a.universe().iter().enumerate() {
            let v = w >> i & 1 == 1;
            witness.insert(s.to_string(), json!(v));
            shown.push(format!("{s}={}", tf(v)));
        }
        entries.push(json!({ "values": j.to_string(), "witness": witness }));
        rows.push(vec![j.to_string(), shown.join(" ")]);
    }
    let mut doc = header("agenda-rationals");
    doc.insert("propositions".into(), json!(propositions(a)));
    doc.insert("count".into(), json!(rs.len()));
    doc.insert("judgments".into(), Value::Array(entries));
    let text = format!("agenda {a}\n{}{} rational judgments\n", table(&rows), rs.len());
    Ok(Rendered::ok(Value::Object(doc), text))
}

fn axioms_json(j: &PiJar) -> Value {
    json!({ "up": j.is_up(), "anonymous": j.is_anonymous(), "systematic": j.is_systematic() })
}

fn jars_enumerate(
    a: &Agenda,
    judges: usize,
    normal_form: bool,
    anonymous: bool,
    systematic: bool,
    limits: &Limits,
) -> Result<Rendered, String> {
    let mut entries = Vec::new();
    let mut rows = vec![vec!["functions".to_string(), "classification".to_string()]];
    if normal_form {
        let solutions = enumerate_arrovian_normal_form(a, judges, limits).map_err(|e| e.to_string())?;
        for s in solutions {
            let j = s.jar(a);
            if filter_axioms(vec![j.clone()], anonymous, systematic).is_empty() {
                continue;
            }
            let functions: Vec<String> = j.functions().iter().map(BoolFn::spec_string).collect();
            let description = describe_shape(&s.shape);
            rows.push(vec![s.function.spec_string(), description.clone()]);
            entries.push(json!({
                "functions": functions,
                "classification": description,
                "shape": s.shape.label(),
                "theorem_violation": s.shape == SolutionShape::TheoremViolation,
                "axioms": axioms_json(&j),
            }));
        }
    } else {
        let jars = enumerate_arrovian_general(a, judges, limits).map_err(|e| e.to_string())?;
        for j in filter_axioms(jars, anonymous, systematic) {
            let functions: Vec<String> = j.functions().iter().map(BoolFn::spec_string).collect();
            let classes: Vec<String> =
                j.functions().iter().map(|f| describe_relevant(&f.classify_on_relevant())).collect();
            rows.push(vec![functions.join(" "), classes.join(" | ")]);
            entries.push(json!({ "functions": functions, "classification": classes, "axioms": axioms_json(&j) }));
        }
    }
    let mut doc = header("jars-enumerate");
    doc.insert("propositions".into(), json!(propositions(a)));
    doc.insert("judges".into(), json!(judges));
    doc.insert("mode".into(), json!(if normal_form { "normal-form" } else { "general" }));
    doc.insert("filters".into(), json!({ "anonymous": anonymous, "systematic": systematic }));
    doc.insert("count".into(), json!(entries.len()));
    doc.insert("solutions".into(), Value::Array(entries));
    let text = format!("agenda {a}, {judges} judges\n{}{} rules\n", table(&rows), rows.len() - 1);
    Ok(Rendered::ok(Value::Object(doc), text))
}

fn jars_check(a: Agenda, judges: usize, specs: &[String], limits: &Limits) -> Result<Rendered, String> {
    let mut per_prop: Vec<Option<BoolFn>> = vec![None; a.len()];
    for item in specs {
        let (pos, spec) = item.split_once('=').ok_or_else(|| format!("`{item}`: expected <pos>=<fn-spec>"))?;
        let f = parse_fn(spec, limits)?;
        if pos == "*" {
            per_prop.iter_mut().for_each(|slot| *slot = Some(f.clone()));
            continue;
        }
        let p: usize = pos.parse().map_err(|_| format!("`{item}`: position must be a number or `*`"))?;
        if p == 0 || p > a.len() {
            return Err(format!("`{item}`: position must be between 1 and {}", a.len()));
        }
        per_prop[p - 1] = Some(f);
    }
    let missing: Vec<String> =
        per_prop.iter().enumerate().filter(|(_, f)| f.is_none()).map(|(p, _)| (p + 1).to_string()).collect();
    if !missing.is_empty() {
        return Err(format!("no function given for position(s) {}", missing.join(", ")));
    }
    let functions: Vec<BoolFn> = per_prop.into_iter().flatten().collect();
    let jar = PiJar::new(a, judges, functions).map_err(|e| e.to_string())?;
    let v = check_jar(&jar, limits).map_err(|e| e.to_string())?;
    let mut doc = header("jars-check");
    doc.insert("propositions".into(), json!(propositions(jar.agenda())));
    doc.insert("judges".into(), json!(judges));
    doc.insert("functions".into(), json!(jar.functions().iter().map(BoolFn::spec_string).collect::<Vec<_>>()));
    doc.insert("consistent".into(), json!(v.consistent));
    doc.insert("up".into(), json!(v.up));
    doc.insert("anonymous".into(), json!(v.anonymous));
    doc.insert("systematic".into(), json!(v.systematic));
    doc.insert(
        "counterexample".into(),
        v.counterexample.as_ref().map_or(Value::Null, |c| {
            let profile: Vec<String> = c.profile.iter().map(|p| p.to_string()).collect();
            json!({ "profile": profile, "aggregate": c.aggregate.to_string() })
        }),
    );
    let mut rows = vec![
        vec!["agenda".into(), jar.agenda().to_string()],
        vec!["consistent".into(), v.consistent.to_string()],
        vec!["up".into(), v.up.to_string()],
        vec!["anonymous".into(), v.anonymous.to_string()],
        vec!["systematic".into(), v.systematic.to_string()],
    ];
    if let Some(c) = &v.counterexample {
        let profile: Vec<String> = c.profile.iter().map(|p| p.to_string()).collect();
        rows.push(vec!["counterexample".into(), format!("{} -> {}", profile.join(" "), c.aggregate)]);
    }
    Ok(Rendered::ok(Value::Object(doc), table(&rows)))
}

fn verify(suites: &[String], timings: bool, limits: &Limits) -> Result<Rendered, String> {
    let names: Vec<&str> = suites.iter().map(String::as_str).collect();
    let report: VerifyReport = verify_suites(&names, limits)?;
    let mut text = String::new();
    let suites_json: Vec<Value> = report
        .suites
        .iter()
        .map(|s| {
            let checks: Vec<Value> = s
                .checks
                .iter()
                .map(|c| {
                    let params: Map<String, Value> = c.params.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
                    let shown: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    let _ = writeln!(
                        text,
                        "{} {}/{} [{}] {}",
                        if c.passed { "PASS" } else { "FAIL" },
                        s.name,
                        c.name,
                        shown.join(" "),
                        c.detail
                    );
                    json!({ "name": c.name, "params": params, "passed": c.passed, "detail": c.detail })
                })
                .collect();
            let mut m = Map::new();
            m.insert("name".into(), json!(s.name));
            m.insert("passed".into(), json!(s.passed()));
            if timings {
                m.insert("elapsed_ms".into(), json!(s.elapsed.as_millis() as u64));
            }
            m.insert("checks".into(), Value::Array(checks));
            Value::Object(m)
        })
        .collect();
    let mut doc = header("verify");
    doc.insert("passed".into(), json!(report.passed()));
    doc.insert("suites".into(), Value::Array(suites_json));
    let passed = report.suites.iter().filter(|s| s.passed()).count();
    let _ = writeln!(text, "{passed}/{} suites passed", report.suites.len());
    Ok(Rendered { json: Value::Object(doc), text, failed: !report.passed() })
}

/// Suite names accepted by `verify --suite`.
pub fn suite_names() -> impl Iterator<Item = &'static str> {
    std::iter::once("all").chain(SUITES.iter().copied())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_ok(args: &[&str]) -> Value {
        let out = run(std::iter::once("arrovian").chain(args.iter().copied()));
        assert_eq!(out.code, 0, "{}", out.stderr);
        serde_json::from_str(&out.stdout).unwrap()
    }

    #[test]
    fn fourier_and() {
        let v = run_ok(&["fourier", "and:2"]);
        assert_eq!(v["schema"], 1);
        assert_eq!(v["coefficients"][0]["value"], "-1/2");
        assert_eq!(v["coefficients"][3]["subset"], json!([1, 2]));
        assert_eq!(v["coefficients"][0]["num"], -1);
        assert_eq!(v["coefficients"][0]["exp"], 1);
        assert_eq!(v["parseval"], "1");
    }

    #[test]
    fn check_pair_or_and() {
        let v = run_ok(&["check-pair", "--g", "or:2", "--f", "and:2"]);
        assert_eq!(v["is_normal"], false);
        assert_eq!(v["violated_condition"], "commutation");
        assert_eq!(v["counterexample"]["matrix"], json!([[false, true], [true, false]]));
    }

    #[test]
    fn check_pair_reports_one_based_index() {
        let v = run_ok(&["check-pair", "--g", "dictator:2:1", "--f", "and:2"]);
        assert_eq!(v["violated_condition"], "g_irrelevant_index");
        assert_eq!(v["violated_index"], 2);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["arrovian", "bogus"]).code, 2);
        assert_eq!(run(["arrovian", "fourier", "and:x"]).code, 2);
        assert_eq!(run(["arrovian", "verify", "--suite", "nope"]).code, 2);
        assert_eq!(run(["arrovian", "--matrix-cap", "0", "fourier", "and:2"]).code, 2);
        assert_eq!(run(["arrovian", "--json", "--text", "fourier", "and:2"]).code, 2);
        let help = run(["arrovian", "--help"]);
        assert_eq!(help.code, 0);
        assert!(help.stdout.contains("enumerate-pairs"));
    }

    #[test]
    fn verify_failure_exits_one() {
        let out = run(["arrovian", "--enumeration-budget", "10", "verify", "--suite", "normal-pairs-2x2"]);
        assert_eq!(out.code, 1);
        let v: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["passed"], false);
    }

    #[test]
    fn text_output() {
        let out = run(["arrovian", "--text", "enumerate-pairs", "-m", "2", "-n", "2"]);
        assert_eq!(out.code, 0);
        assert!(out.stdout.contains("4 normal pairs at (2, 2)"));
        assert!(out.stdout.contains("nxor:2"));
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let a = run(["arrovian", "--workers", "1", "enumerate-pairs", "-m", "2", "-n", "3"]);
        let b = run(["arrovian", "--workers", "4", "enumerate-pairs", "-m", "2", "-n", "3"]);
        assert_eq!(a, b);
    }

    #[test]
    fn suite_names_start_with_all() {
        assert_eq!(suite_names().next(), Some("all"));
        assert_eq!(suite_names().count(), SUITES.len() + 1);
    }
}
