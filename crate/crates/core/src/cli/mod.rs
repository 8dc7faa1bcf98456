//! Command-line front end: `count`, `verify`, `validate` and `bench`.
//!
//! Exit codes: 0 success, 1 input error, 2 closed form inapplicable,
//! 3 disagreement between methods, 4 oracle refused (guard or budget).

pub mod bench;
pub mod document;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Map, Value};

use crate::automaton::{dp_count_with_budget, DEFAULT_BUDGET};
use crate::closed_form::{count_multi, count_single};
use crate::enumeration::{enumerate_count, DEFAULT_GUARD};
use crate::error::Error;
use crate::instance::{validate_instance, ProblemInstance, ValidationReport};

use bench::{run_bench, BenchConfig, BenchError, Method};
use document::{DocumentError, InstanceDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_INAPPLICABLE: i32 = 2;
pub const EXIT_DISAGREE: i32 = 3;
pub const EXIT_REFUSED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "subword-count",
    version,
    about = "Exact counts of words with prescribed pattern multiplicities"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count words with the closed form
    Count {
        #[command(flatten)]
        input: InstanceArgs,
        /// Include every signed term of the summation
        #[arg(long)]
        breakdown: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the closed form against the oracles
    Verify {
        #[command(flatten)]
        input: InstanceArgs,
        #[arg(long, value_enum, default_value_t = OracleChoice::Both)]
        oracle: OracleChoice,
        #[arg(long, default_value_t = DEFAULT_GUARD)]
        guard: u64,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Report self-intersections and overlapping pattern pairs
    Validate {
        #[command(flatten)]
        input: InstanceArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Time the methods over a range of word lengths
    Bench(BenchArgs),
}

#[derive(Debug, Args)]
struct InstanceArgs {
    /// JSON instance document
    #[arg(long, conflicts_with_all = ["q", "t", "pattern", "alphabet"])]
    input: Option<String>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    /// PATTERN=COUNT, repeatable; `[0,1,2]=COUNT` for index lists
    #[arg(long)]
    pattern: Vec<String>,
    /// Symbols, either one per character (`ACGT`) or comma separated
    #[arg(long)]
    alphabet: Option<String>,
}

impl InstanceArgs {
    fn document(&self) -> Result<InstanceDocument, DocumentError> {
        match &self.input {
            Some(path) => InstanceDocument::read(path),
            None => InstanceDocument::from_flags(
                self.q,
                self.t,
                self.alphabet.as_deref(),
                &self.pattern,
            ),
        }
    }
}

#[derive(Debug, Args)]
struct OutputArgs {
    /// Write the result here instead of stdout
    #[arg(long)]
    output: Option<String>,
}

#[derive(Debug, Args)]
struct BenchArgs {
    #[arg(long)]
    q: usize,
    /// Word lengths, comma separated
    #[arg(long, value_delimiter = ',', required = true)]
    t: Vec<usize>,
    /// Lengths of generated patterns, comma separated
    #[arg(long, value_delimiter = ',', default_value = "3")]
    lengths: Vec<usize>,
    /// Required occurrence counts, one per pattern
    #[arg(long, value_delimiter = ',', default_value = "1")]
    counts: Vec<usize>,
    /// Explicit patterns (index lists or text over --alphabet); overrides --lengths
    #[arg(long)]
    pattern: Vec<String>,
    #[arg(long)]
    alphabet: Option<String>,
    #[arg(long = "method", value_enum, default_values_t = [Method::ClosedForm])]
    methods: Vec<Method>,
    #[arg(long, default_value_t = 3)]
    reps: usize,
    #[arg(long, default_value_t = DEFAULT_GUARD)]
    guard: u64,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OracleChoice {
    Enum,
    Automaton,
    Both,
}

fn emit(output: Option<&str>, text: &str) -> Result<(), std::io::Error> {
    match output {
        Some(path) => std::fs::write(path, format!("{text}\n")),
        None => {
            let mut out = std::io::stdout().lock();
            writeln!(out, "{text}")
        }
    }
}

fn report_json(report: &ValidationReport) -> String {
    serde_json::to_string(report).expect("report serializes")
}

fn fail_input(err: impl std::fmt::Display) -> i32 {
    eprintln!("error: {err}");
    EXIT_INPUT
}

fn emit_or_fail(output: Option<&str>, text: &str, code: i32) -> i32 {
    match emit(output, text) {
        Ok(()) => code,
        Err(e) => fail_input(e),
    }
}

fn load(input: &InstanceArgs) -> Result<ProblemInstance, i32> {
    input
        .document()
        .and_then(|doc| doc.to_instance())
        .map_err(fail_input)
}

/// Closed form, routed through the multi-pattern sum; single-pattern
/// instances are cross-checked against the one-pattern formula in debug
/// builds.
fn closed_form_count(instance: &ProblemInstance) -> Result<crate::CountBreakdown, Error> {
    let breakdown = count_multi(instance)?;
    if cfg!(debug_assertions) && instance.specs().len() == 1 {
        let spec = &instance.specs()[0];
        let single = count_single(
            instance.alphabet_size(),
            instance.word_length(),
            spec.pattern.len(),
            spec.required_count,
        )?;
        debug_assert_eq!(single.total, breakdown.total);
    }
    Ok(breakdown)
}

fn cmd_count(input: &InstanceArgs, breakdown: bool, output: Option<&str>) -> i32 {
    let instance = match load(input) {
        Ok(i) => i,
        Err(code) => return code,
    };
    match closed_form_count(&instance) {
        Ok(result) => {
            let mut body = Map::new();
            body.insert("count".into(), json!(result.total.to_string()));
            body.insert("method".into(), json!("closed_form"));
            if breakdown {
                let terms: Vec<Value> = result
                    .terms
                    .iter()
                    .map(|t| json!({"indices": t.indices, "value": t.value.to_string()}))
                    .collect();
                body.insert("terms".into(), Value::Array(terms));
            }
            emit_or_fail(output, &Value::Object(body).to_string(), EXIT_OK)
        }
        Err(Error::Inapplicable(report)) => {
            eprintln!("{}", report_json(&report));
            EXIT_INAPPLICABLE
        }
        Err(e) => fail_input(e),
    }
}

fn oracle_value(result: &Result<BigUint, Error>) -> Value {
    match result {
        Ok(v) => json!(v.to_string()),
        Err(_) => Value::Null,
    }
}

fn cmd_verify(
    input: &InstanceArgs,
    oracle: OracleChoice,
    guard: u64,
    budget: u64,
    output: Option<&str>,
) -> i32 {
    let instance = match load(input) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let closed = match closed_form_count(&instance) {
        Ok(b) => b.total,
        Err(Error::Inapplicable(report)) => {
            eprintln!("{}", report_json(&report));
            return EXIT_INAPPLICABLE;
        }
        Err(e) => return fail_input(e),
    };

    let mut oracles: Vec<(&str, Result<BigUint, Error>)> = Vec::new();
    if matches!(oracle, OracleChoice::Enum | OracleChoice::Both) {
        oracles.push(("enum", enumerate_count(&instance, guard)));
    }
    if matches!(oracle, OracleChoice::Automaton | OracleChoice::Both) {
        oracles.push(("automaton", dp_count_with_budget(&instance, budget)));
    }

    let agree = oracles
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok())
        .all(|v| *v == closed);
    let refused: Vec<&str> = oracles
        .iter()
        .filter(|(_, r)| r.is_err())
        .map(|(name, _)| *name)
        .collect();
    for (name, r) in &oracles {
        if let Err(e) = r {
            eprintln!("{name}: {e}");
        }
    }

    let mut body = Map::new();
    body.insert("closed_form".into(), json!(closed.to_string()));
    for (name, r) in &oracles {
        body.insert((*name).into(), oracle_value(r));
    }
    body.insert("agree".into(), json!(agree));
    body.insert("refused".into(), json!(refused));

    let code = if !agree {
        EXIT_DISAGREE
    } else if !refused.is_empty() {
        EXIT_REFUSED
    } else {
        EXIT_OK
    };
    emit_or_fail(output, &Value::Object(body).to_string(), code)
}

fn cmd_validate(input: &InstanceArgs, output: Option<&str>) -> i32 {
    let instance = match load(input) {
        Ok(i) => i,
        Err(code) => return code,
    };
    let report = validate_instance(&instance);
    let code = if report.is_formula_applicable {
        EXIT_OK
    } else {
        EXIT_INAPPLICABLE
    };
    emit_or_fail(output, &report_json(&report), code)
}

fn cmd_bench(args: &BenchArgs) -> i32 {
    let patterns = if args.pattern.is_empty() {
        None
    } else {
        // reuse document tokenization; counts come from --counts
        let entries: Vec<String> = args.pattern.iter().map(|p| format!("{p}=0")).collect();
        let doc = match InstanceDocument::from_flags(
            Some(args.q),
            Some(0),
            args.alphabet.as_deref(),
            &entries,
        ) {
            Ok(d) => d,
            Err(e) => return fail_input(e),
        };
        match doc.to_instance() {
            Ok(inst) => Some(inst.patterns().cloned().collect()),
            Err(e) => return fail_input(e),
        }
    };
    let config = BenchConfig {
        alphabet_size: args.q,
        word_lengths: args.t.clone(),
        required_counts: args.counts.clone(),
        patterns,
        pattern_lengths: args.lengths.clone(),
        methods: args.methods.clone(),
        repetitions: args.reps,
        guard: args.guard,
        budget: args.budget,
    };
    match run_bench(&config) {
        Ok(report) => {
            let text = if args.csv {
                report.to_csv().trim_end().to_string()
            } else {
                report.to_json()
            };
            emit_or_fail(args.output.as_deref(), &text, EXIT_OK)
        }
        Err(BenchError::Disagreement { t, detail }) => {
            eprintln!("error: disagreement at t={t}: {detail}");
            EXIT_DISAGREE
        }
        Err(e @ BenchError::AllRefused(_)) => {
            eprintln!("error: {e}");
            EXIT_REFUSED
        }
        Err(BenchError::Instance(Error::Inapplicable(report))) => {
            eprintln!("{}", report_json(&report));
            EXIT_INAPPLICABLE
        }
        Err(e) => fail_input(e),
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match &cli.command {
        Command::Count {
            input,
            breakdown,
            output,
        } => cmd_count(input, *breakdown, output.output.as_deref()),
        Command::Verify {
            input,
            oracle,
            guard,
            budget,
            output,
        } => cmd_verify(input, *oracle, *guard, *budget, output.output.as_deref()),
        Command::Validate { input, output } => cmd_validate(input, output.output.as_deref()),
        Command::Bench(args) => cmd_bench(args),
    }
}
