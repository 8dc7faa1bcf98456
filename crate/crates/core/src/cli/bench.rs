//! Wall-clock comparison of the closed form against the two oracles.

use std::time::Instant;

use clap::ValueEnum;
use num_bigint::BigUint;
use serde::Serialize;
use thiserror::Error;

use crate::automaton::dp_count_with_budget;
use crate::closed_form::count_multi;
use crate::enumeration::enumerate_count;
use crate::error::Error;
use crate::instance::{Pattern, PatternSpec, ProblemInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
pub enum Method {
    #[value(name = "closed-form")]
    #[serde(rename = "closed_form")]
    ClosedForm,
    #[value(name = "enum")]
    #[serde(rename = "enum")]
    Enumeration,
    #[value(name = "automaton")]
    #[serde(rename = "automaton")]
    Automaton,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Enumeration => "enum",
            Method::Automaton => "automaton",
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub alphabet_size: usize,
    pub word_lengths: Vec<usize>,
    pub required_counts: Vec<usize>,
    /// Explicit patterns; when absent, patterns are generated from
    /// `pattern_lengths`.
    pub patterns: Option<Vec<Pattern>>,
    pub pattern_lengths: Vec<usize>,
    pub methods: Vec<Method>,
    pub repetitions: usize,
    pub guard: u64,
    pub budget: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub method: Method,
    pub q: usize,
    pub t: usize,
    pub pattern_lengths: Vec<usize>,
    pub required_counts: Vec<usize>,
    pub wall_seconds: f64,
    pub count_digits: usize,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("methods disagree at t={t}: {detail}")]
    Disagreement { t: usize, detail: String },
    #[error("method {0} refused every instance")]
    AllRefused(&'static str),
    #[error("pattern lengths and counts must have the same nonzero length")]
    ShapeMismatch,
    #[error(transparent)]
    Instance(#[from] Error),
}

impl BenchReport {
    pub fn to_csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer
            .write_record([
                "method",
                "q",
                "t",
                "pattern_lengths",
                "required_counts",
                "wall_seconds",
                "count_digits",
            ])
            .expect("in-memory csv");
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(";");
        for row in &self.rows {
            writer
                .write_record([
                    row.method.name().to_string(),
                    row.q.to_string(),
                    row.t.to_string(),
                    join(&row.pattern_lengths),
                    join(&row.required_counts),
                    format!("{:.9}", row.wall_seconds),
                    row.count_digits.to_string(),
                ])
                .expect("in-memory csv");
        }
        String::from_utf8(writer.into_inner().expect("flush")).expect("utf-8 csv")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Borderless, pairwise non-overlapping patterns: pattern `p` is symbol `p`
/// followed by `len - 1` copies of symbol `d`. The leading symbol occurs
/// nowhere else, so no pattern can overlap itself or another.
pub fn generated_patterns(lengths: &[usize], alphabet_size: usize) -> Result<Vec<Pattern>, Error> {
    let d = lengths.len();
    lengths
        .iter()
        .enumerate()
        .map(|(p, &len)| {
            let mut indices = vec![p];
            indices.resize(len, d);
            if let Some(&bad) = indices.iter().find(|&&s| s >= alphabet_size) {
                return Err(Error::SymbolOutOfRange {
                    index: bad,
                    alphabet_size,
                });
            }
            Pattern::from_indices(&indices)
        })
        .collect()
}

fn median(mut samples: Vec<f64>) -> f64 {
    samples.sort_by(|a, b| a.total_cmp(b));
    let mid = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[mid]
    } else {
        (samples[mid - 1] + samples[mid]) / 2.0
    }
}

fn run_once(
    method: Method,
    instance: &ProblemInstance,
    config: &BenchConfig,
) -> Result<BigUint, Error> {
    match method {
        Method::ClosedForm => count_multi(instance).map(|b| b.total),
        Method::Enumeration => enumerate_count(instance, config.guard),
        Method::Automaton => dp_count_with_budget(instance, config.budget),
    }
}

fn is_refusal(err: &Error) -> bool {
    matches!(
        err,
        Error::GuardExceeded { .. } | Error::BudgetExceeded { .. }
    )
}

/// Median wall time of `reps` runs of one method on one instance.
pub fn time_method(
    method: Method,
    instance: &ProblemInstance,
    config: &BenchConfig,
) -> Result<(f64, BigUint), Error> {
    let mut samples = Vec::with_capacity(config.repetitions.max(1));
    let mut count = BigUint::default();
    for _ in 0..config.repetitions.max(1) {
        let start = Instant::now();
        count = run_once(method, instance, config)?;
        samples.push(start.elapsed().as_secs_f64());
    }
    Ok((median(samples), count))
}

pub fn run_bench(config: &BenchConfig) -> Result<BenchReport, BenchError> {
    let patterns = match &config.patterns {
        Some(p) => p.clone(),
        None => generated_patterns(&config.pattern_lengths, config.alphabet_size)?,
    };
    if patterns.is_empty() || patterns.len() != config.required_counts.len() {
        return Err(BenchError::ShapeMismatch);
    }
    let lengths: Vec<usize> = patterns.iter().map(Pattern::len).collect();

    let mut report = BenchReport::default();
    let mut answered = vec![false; config.methods.len()];
    for &t in &config.word_lengths {
        let specs = patterns
            .iter()
            .zip(&config.required_counts)
            .map(|(p, &x)| PatternSpec::new(p.clone(), x))
            .collect();
        let instance = ProblemInstance::new(config.alphabet_size, t, specs)?;

        let mut reference: Option<(Method, BigUint)> = None;
        for (m, &method) in config.methods.iter().enumerate() {
            let (seconds, count) = match time_method(method, &instance, config) {
                Ok(r) => r,
                Err(e) if is_refusal(&e) => continue,
                Err(e) => return Err(e.into()),
            };
            answered[m] = true;
            match &reference {
                Some((other, expected)) if *expected != count => {
                    return Err(BenchError::Disagreement {
                        t,
                        detail: format!(
                            "{} gave {expected}, {} gave {count}",
                            other.name(),
                            method.name()
                        ),
                    });
                }
                Some(_) => {}
                None => reference = Some((method, count.clone())),
            }
            report.rows.push(BenchRow {
                method,
                q: config.alphabet_size,
                t,
                pattern_lengths: lengths.clone(),
                required_counts: config.required_counts.clone(),
                wall_seconds: seconds,
                count_digits: count.to_string().len(),
            });
        }
    }
    if let Some(m) = answered.iter().position(|ok| !ok) {
        return Err(BenchError::AllRefused(config.methods[m].name()));
    }
    Ok(report)
}
