//! Exact counting of words of length `t` over a `q`-symbol alphabet that
//! contain given patterns an exact number of times.
//!
//! [`closed_form`] evaluates signed summations whose cost is polynomial in
//! `t`; they apply when every pattern is borderless and no two patterns can
//! overlap (see [`validate_instance`]). Two independent oracles check them:
//! [`enumeration`] walks all `q^t` words, and [`automaton`] runs a counting
//! DP over an Aho-Corasick automaton, which also handles overlapping
//! pattern sets.

pub mod automaton;
pub mod cli;
pub mod closed_form;
pub mod combinatorics;
pub mod enumeration;
mod error;
pub mod instance;
pub mod intersection;

pub use automaton::{build_automaton, dp_count, dp_count_with_budget, MatchAutomaton};
pub use closed_form::{count_multi, count_single, enumerate_index_tuples, IndexTuple};
pub use enumeration::{count_occurrences, enumerate_count};
pub use error::{Error, Result};
pub use instance::{
    validate_instance, CountBreakdown, Pattern, PatternSpec, ProblemInstance, Symbol, Term,
    ValidationReport,
};
