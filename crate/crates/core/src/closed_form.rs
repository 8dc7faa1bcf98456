//! Signed closed-form sums counting words with exact pattern multiplicities.
//!
//! For a borderless pattern of length `a` required exactly `x` times in
//! words of length `t` over `q` symbols:
//!
//! ```text
//! |Y| = Σ_{i=x}^{⌊t/a⌋} (-1)^{i-x} · q^{t-ai} · ((i+1 multichoose t-ai)) · C(i, i-x)
//! ```
//!
//! Each term places `i` copies of the pattern, fills the `t - ai` free
//! positions freely and distributes them among the `i + 1` gaps between
//! copies. The alternating sign, anchored so the `i = x` term is positive,
//! strips words that carry extra copies.
//!
//! With several mutually non-overlapping patterns the sum runs over index
//! tuples `(i_1..i_d)` with `i_p >= x_p` and `D_t = Σ a_p·i_p <= t`; the
//! gap count becomes `i_t + 1` with `i_t = Σ i_p`, and a multinomial
//! factor orders the copies of the different patterns.

use num_bigint::{BigInt, BigUint};
use num_traits::{Pow, Signed, Zero};

use crate::combinatorics::{binomial, multichoose, multinomial};
use crate::error::{Error, Result};
use crate::instance::{validate_instance, CountBreakdown, PatternSpec, ProblemInstance, Term};

/// Current copy counts per pattern, with the derived copy total and
/// occupied-position count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexTuple {
    pub values: Vec<usize>,
    pub total_copies: usize,
    pub occupied: usize,
}

impl IndexTuple {
    fn new(values: Vec<usize>, lengths: &[usize]) -> Self {
        let total_copies = values.iter().sum();
        let occupied = values.iter().zip(lengths).map(|(i, a)| i * a).sum();
        IndexTuple {
            values,
            total_copies,
            occupied,
        }
    }
}

/// Lexicographic walk over `{(i_1..i_d) : i_p >= x_p, Σ a_p·i_p <= t}`.
pub struct IndexTuples {
    t: usize,
    lengths: Vec<usize>,
    mins: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl IndexTuples {
    fn new(t: usize, lengths: Vec<usize>, mins: Vec<usize>) -> Self {
        let floor: usize = lengths.iter().zip(&mins).map(|(a, x)| a * x).sum();
        let current = (floor <= t).then(|| mins.clone());
        IndexTuples {
            t,
            lengths,
            mins,
            current,
        }
    }

    fn advance(&self, cur: &[usize]) -> Option<Vec<usize>> {
        let d = cur.len();
        // occupancy of the tail when every later index sits at its minimum
        let mut tail_floor = 0;
        let mut head: usize = cur.iter().zip(&self.lengths).map(|(i, a)| i * a).sum();
        for p in (0..d).rev() {
            head -= cur[p] * self.lengths[p];
            if head + (cur[p] + 1) * self.lengths[p] + tail_floor <= self.t {
                let mut next = cur[..p].to_vec();
                next.push(cur[p] + 1);
                next.extend_from_slice(&self.mins[p + 1..]);
                return Some(next);
            }
            tail_floor += self.mins[p] * self.lengths[p];
        }
        None
    }
}

impl Iterator for IndexTuples {
    type Item = IndexTuple;

    fn next(&mut self) -> Option<IndexTuple> {
        let cur = self.current.take()?;
        self.current = self.advance(&cur);
        Some(IndexTuple::new(cur, &self.lengths))
    }
}

/// The index space of the multi-pattern sum, in lexicographic order.
pub fn enumerate_index_tuples(t: usize, specs: &[PatternSpec]) -> IndexTuples {
    let lengths = specs.iter().map(|s| s.pattern.len()).collect();
    let mins = specs.iter().map(|s| s.required_count).collect();
    IndexTuples::new(t, lengths, mins)
}

fn alternator(copies: usize, required: usize) -> BigInt {
    if (copies - required).is_multiple_of(2) {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

fn finish(sum: BigInt, terms: Vec<Term>) -> Result<CountBreakdown> {
    if sum.is_negative() {
        return Err(Error::NegativeTotal(sum.to_string()));
    }
    let total = sum.magnitude().clone();
    Ok(CountBreakdown { total, terms })
}

/// Words of length `t` over `q` symbols containing a borderless pattern of
/// length `a` exactly `x` times. Only the length matters; checking that the
/// pattern is borderless is the caller's job.
pub fn count_single(q: usize, t: usize, a: usize, x: usize) -> Result<CountBreakdown> {
    if a == 0 {
        return Err(Error::ZeroLengthPattern);
    }
    let base = BigUint::from(q);
    let mut sum = BigInt::zero();
    let mut terms = Vec::new();
    for i in x..=t / a {
        let free = t - a * i;
        let magnitude = Pow::pow(&base, free)
            * multichoose(i as u64 + 1, free as u64)
            * binomial(i as u64, (i - x) as i64);
        let value = alternator(i, x) * BigInt::from(magnitude);
        sum += &value;
        terms.push(Term {
            indices: vec![i],
            value,
        });
    }
    finish(sum, terms)
}

/// Multi-pattern count for an instance whose patterns are borderless and
/// pairwise non-overlapping.
pub fn count_multi(instance: &ProblemInstance) -> Result<CountBreakdown> {
    let report = validate_instance(instance);
    if !report.is_formula_applicable {
        return Err(Error::Inapplicable(report));
    }
    let q = BigUint::from(instance.alphabet_size());
    let t = instance.word_length();
    let required: Vec<usize> = instance.specs().iter().map(|s| s.required_count).collect();
    let required_total: usize = required.iter().sum();

    let mut sum = BigInt::zero();
    let mut terms = Vec::new();
    for tuple in enumerate_index_tuples(t, instance.specs()) {
        let free = t - tuple.occupied;
        let mut magnitude =
            Pow::pow(&q, free) * multichoose(tuple.total_copies as u64 + 1, free as u64);
        for (&i, &x) in tuple.values.iter().zip(&required) {
            magnitude *= binomial(i as u64, (i - x) as i64);
        }
        let parts: Vec<u64> = tuple.values.iter().map(|&i| i as u64).collect();
        magnitude *= multinomial(&parts);

        let value = alternator(tuple.total_copies, required_total) * BigInt::from(magnitude);
        sum += &value;
        terms.push(Term {
            indices: tuple.values,
            value,
        });
    }
    finish(sum, terms)
}
