//! Domain types shared by the counting engine and its oracles.
//!
//! A [`ProblemInstance`] fixes an alphabet size `q`, a word length `t` and a
//! list of [`PatternSpec`]s, each pairing a pattern with the exact number of
//! times it must occur. Every instance built through [`ProblemInstance::new`]
//! satisfies the structural invariants (symbols in range, distinct patterns);
//! whether the closed form applies is a separate question answered by
//! [`validate_instance`].

use std::collections::HashSet;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::intersection;

/// Position of a symbol in the alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub usize);

impl Symbol {
    pub fn index(self) -> usize {
        self.0
    }
}

/// A nonempty word over the alphabet, stored as symbol indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pattern {
    symbols: Vec<Symbol>,
}

impl Pattern {
    pub fn new(symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern { symbols })
    }

    pub fn from_indices(indices: &[usize]) -> Result<Self> {
        Self::new(indices.iter().copied().map(Symbol).collect())
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn indices(&self) -> Vec<usize> {
        self.symbols.iter().map(|s| s.0).collect()
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.symbols.len()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.symbols.iter().map(|s| s.0.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A pattern together with the exact number of occurrences required.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PatternSpec {
    pub pattern: Pattern,
    pub required_count: usize,
}

impl PatternSpec {
    pub fn new(pattern: Pattern, required_count: usize) -> Self {
        PatternSpec {
            pattern,
            required_count,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    alphabet_size: usize,
    word_length: usize,
    specs: Vec<PatternSpec>,
    symbol_names: Option<Vec<String>>,
}

impl ProblemInstance {
    pub fn new(alphabet_size: usize, word_length: usize, specs: Vec<PatternSpec>) -> Result<Self> {
        if alphabet_size < 2 {
            return Err(Error::AlphabetTooSmall(alphabet_size));
        }
        if specs.is_empty() {
            return Err(Error::NoPatterns);
        }
        let mut seen = HashSet::new();
        for (i, spec) in specs.iter().enumerate() {
            if let Some(bad) = spec.pattern.symbols().iter().find(|s| s.0 >= alphabet_size) {
                return Err(Error::SymbolOutOfRange {
                    index: bad.0,
                    alphabet_size,
                });
            }
            if !seen.insert(spec.pattern.symbols()) {
                return Err(Error::DuplicatePattern(i));
            }
        }
        Ok(ProblemInstance {
            alphabet_size,
            word_length,
            specs,
            symbol_names: None,
        })
    }

    /// Attaches display names for the symbols; there must be exactly `q`
    /// distinct nonempty names.
    pub fn with_symbol_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.alphabet_size {
            return Err(Error::SymbolNameCount {
                expected: self.alphabet_size,
                actual: names.len(),
            });
        }
        let mut seen = HashSet::new();
        for name in &names {
            if name.is_empty() || !seen.insert(name.as_str()) {
                return Err(Error::BadSymbolName(name.clone()));
            }
        }
        self.symbol_names = Some(names);
        Ok(self)
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }

    pub fn specs(&self) -> &[PatternSpec] {
        &self.specs
    }

    pub fn symbol_names(&self) -> Option<&[String]> {
        self.symbol_names.as_deref()
    }

    pub fn patterns(&self) -> impl Iterator<Item = &Pattern> {
        self.specs.iter().map(|s| &s.pattern)
    }

    /// Positions covered when every pattern appears exactly its required
    /// number of times: the sum of `a_p * x_p`.
    pub fn minimum_occupancy(&self) -> usize {
        self.specs
            .iter()
            .map(|s| s.pattern.len() * s.required_count)
            .sum()
    }
}

/// One signed summand of a closed-form count, keyed by its index tuple.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub indices: Vec<usize>,
    pub value: BigInt,
}

/// Exact total plus the signed terms that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountBreakdown {
    pub total: BigUint,
    pub terms: Vec<Term>,
}

/// Applicability findings for the closed form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub per_pattern_self_intersection: Vec<bool>,
    /// Pairs `(i, j)` with `i < j` whose patterns can share a position.
    pub cross_overlap_pairs: Vec<(usize, usize)>,
    pub is_formula_applicable: bool,
}

/// Checks every pattern for borders and every distinct pair for possible
/// overlap. Never fails; infeasible occupancy is left to the counters,
/// which return zero for it.
pub fn validate_instance(instance: &ProblemInstance) -> ValidationReport {
    let patterns: Vec<&Pattern> = instance.patterns().collect();
    let per_pattern_self_intersection: Vec<bool> = patterns
        .iter()
        .map(|p| intersection::is_self_intersecting(p))
        .collect();

    let mut cross_overlap_pairs = Vec::new();
    for i in 0..patterns.len() {
        for j in i + 1..patterns.len() {
            if intersection::can_overlap(patterns[i], patterns[j]) {
                cross_overlap_pairs.push((i, j));
            }
        }
    }

    let is_formula_applicable =
        !per_pattern_self_intersection.iter().any(|&b| b) && cross_overlap_pairs.is_empty();

    ValidationReport {
        per_pattern_self_intersection,
        cross_overlap_pairs,
        is_formula_applicable,
    }
}
