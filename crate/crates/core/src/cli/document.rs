//! JSON instance documents and their conversion to [`ProblemInstance`].

use std::collections::HashMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::instance::{Pattern, PatternSpec, ProblemInstance};

/// Symbols assumed when only an alphabet size is declared.
pub const DEFAULT_SYMBOLS: &str = "abcdefghijklmnopqrstuvwxyz0123456789";

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed instance document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("symbol {token:?} in pattern {pattern:?} is not in the alphabet")]
    UnknownSymbol { token: String, pattern: String },
    #[error("alphabet of size {0} has no default symbol names; give patterns as index lists")]
    NoDefaultSymbols(usize),
    #[error("pattern {0:?} is ambiguous for a multi-character alphabet; separate symbols with spaces or use an index list")]
    Ambiguous(String),
    #[error("bad pattern argument {0:?}, expected PATTERN=COUNT")]
    BadPatternArg(String),
    #[error("--q {q} disagrees with the {symbols} symbols given by --alphabet")]
    SizeMismatch { q: usize, symbols: usize },
    #[error("missing {0}")]
    Missing(&'static str),
    #[error(transparent)]
    Instance(#[from] crate::Error),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum AlphabetSpec {
    Size { size: usize },
    Symbols { symbols: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PatternText {
    Indices(Vec<usize>),
    Text(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PatternEntry {
    pub pattern: PatternText,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub alphabet: AlphabetSpec,
    pub length: usize,
    pub patterns: Vec<PatternEntry>,
}

impl InstanceDocument {
    pub fn from_json(text: &str) -> Result<Self, DocumentError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn read(path: &str) -> Result<Self, DocumentError> {
        let text = std::fs::read_to_string(path).map_err(|source| DocumentError::Io {
            path: path.to_string(),
            source,
        })?;
        Self::from_json(&text)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("document serializes")
    }

    /// Builds a document from `--q`, `--t`, `--alphabet` and repeated
    /// `--pattern STR=COUNT` arguments.
    pub fn from_flags(
        q: Option<usize>,
        t: Option<usize>,
        alphabet: Option<&str>,
        patterns: &[String],
    ) -> Result<Self, DocumentError> {
        let length = t.ok_or(DocumentError::Missing("--t"))?;
        let alphabet = match (alphabet, q) {
            (Some(list), q) => {
                let symbols = split_alphabet(list);
                if let Some(q) = q.filter(|&q| q != symbols.len()) {
                    return Err(DocumentError::SizeMismatch {
                        q,
                        symbols: symbols.len(),
                    });
                }
                AlphabetSpec::Symbols { symbols }
            }
            (None, Some(size)) => AlphabetSpec::Size { size },
            (None, None) => return Err(DocumentError::Missing("--q or --alphabet")),
        };
        let patterns = patterns
            .iter()
            .map(|arg| parse_pattern_arg(arg))
            .collect::<Result<_, _>>()?;
        Ok(InstanceDocument {
            alphabet,
            length,
            patterns,
        })
    }

    pub fn symbol_names(&self) -> Option<Vec<String>> {
        match &self.alphabet {
            AlphabetSpec::Symbols { symbols } => Some(symbols.clone()),
            AlphabetSpec::Size { size } if *size <= DEFAULT_SYMBOLS.len() => Some(
                DEFAULT_SYMBOLS
                    .chars()
                    .take(*size)
                    .map(String::from)
                    .collect(),
            ),
            AlphabetSpec::Size { .. } => None,
        }
    }

    pub fn alphabet_size(&self) -> usize {
        match &self.alphabet {
            AlphabetSpec::Size { size } => *size,
            AlphabetSpec::Symbols { symbols } => symbols.len(),
        }
    }

    pub fn to_instance(&self) -> Result<ProblemInstance, DocumentError> {
        let q = self.alphabet_size();
        let names = self.symbol_names();
        let specs = self
            .patterns
            .iter()
            .map(|entry| {
                let indices = match &entry.pattern {
                    PatternText::Indices(v) => v.clone(),
                    PatternText::Text(s) => tokenize(s, names.as_deref(), q)?,
                };
                Ok(PatternSpec::new(
                    Pattern::from_indices(&indices)?,
                    entry.count,
                ))
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        let instance = ProblemInstance::new(q, self.length, specs)?;
        match (&self.alphabet, names) {
            (AlphabetSpec::Symbols { .. }, Some(names)) => Ok(instance.with_symbol_names(names)?),
            _ => Ok(instance),
        }
    }
}

/// `ACGT` splits per character; `ALA,GLY,SER` splits on commas.
fn split_alphabet(list: &str) -> Vec<String> {
    if list.contains(',') {
        list.split(',').map(|s| s.trim().to_string()).collect()
    } else {
        list.chars().map(String::from).collect()
    }
}

/// `ATG=5` or `[0,1,2]=5`.
fn parse_pattern_arg(arg: &str) -> Result<PatternEntry, DocumentError> {
    let bad = || DocumentError::BadPatternArg(arg.to_string());
    let (text, count) = arg.rsplit_once('=').ok_or_else(bad)?;
    let count = count.trim().parse().map_err(|_| bad())?;
    let pattern = match text.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
        Some(inner) => PatternText::Indices(
            inner
                .split(',')
                .map(|v| v.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| bad())?,
        ),
        None => PatternText::Text(text.to_string()),
    };
    Ok(PatternEntry { pattern, count })
}

fn tokenize(
    pattern: &str,
    names: Option<&[String]>,
    q: usize,
) -> Result<Vec<usize>, DocumentError> {
    let names = names.ok_or(DocumentError::NoDefaultSymbols(q))?;
    let lookup: HashMap<&str, usize> = names
        .iter()
        .enumerate()
        .map(|(i, n)| (n.as_str(), i))
        .collect();
    let single_char = names.iter().all(|n| n.chars().count() == 1);
    let tokens: Vec<String> = if single_char {
        pattern.chars().map(String::from).collect()
    } else if pattern.contains(char::is_whitespace) || lookup.contains_key(pattern) {
        pattern.split_whitespace().map(String::from).collect()
    } else {
        return Err(DocumentError::Ambiguous(pattern.to_string()));
    };
    tokens
        .into_iter()
        .map(|tok| {
            lookup
                .get(tok.as_str())
                .copied()
                .ok_or_else(|| DocumentError::UnknownSymbol {
                    token: tok,
                    pattern: pattern.to_string(),
                })
        })
        .collect()
}
