//! Brute-force oracle: walk every word of `Q^t` and count occurrences.

use num_bigint::BigUint;
use num_traits::{One, Pow, Zero};

use crate::error::{Error, Result};
use crate::instance::{Pattern, ProblemInstance, Symbol};

/// Default word budget for [`enumerate_count`].
pub const DEFAULT_GUARD: u64 = 100_000_000;

/// Per-pattern occurrence counts of one word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OccurrenceProfile {
    pub counts: Vec<usize>,
}

impl OccurrenceProfile {
    pub fn of(word: &[Symbol], patterns: &[&Pattern]) -> Self {
        OccurrenceProfile {
            counts: patterns
                .iter()
                .map(|p| count_occurrences(word, p))
                .collect(),
        }
    }
}

/// Sliding-window count; overlapping occurrences all count.
pub fn count_occurrences(word: &[Symbol], pattern: &Pattern) -> usize {
    let needle = pattern.symbols();
    if needle.len() > word.len() {
        return 0;
    }
    word.windows(needle.len()).filter(|w| *w == needle).count()
}

/// Visits every word of the given length in lexicographic order.
pub fn for_each_word(alphabet_size: usize, length: usize, mut visit: impl FnMut(&[Symbol])) {
    let mut word = vec![Symbol(0); length];
    loop {
        visit(&word);
        // odometer increment from the right
        let mut pos = length;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            if word[pos].0 + 1 < alphabet_size {
                word[pos].0 += 1;
                break;
            }
            word[pos].0 = 0;
        }
    }
}

/// `q^t`, the number of words the enumeration would visit.
pub fn word_count(alphabet_size: usize, length: usize) -> BigUint {
    Pow::pow(BigUint::from(alphabet_size), length)
}

/// Exact count of words whose occurrence profile equals the required
/// counts. Accepts any pattern set. Refuses when `q^t` exceeds `guard`.
pub fn enumerate_count(instance: &ProblemInstance, guard: u64) -> Result<BigUint> {
    let q = instance.alphabet_size();
    let t = instance.word_length();
    let words = word_count(q, t);
    if words > BigUint::from(guard) {
        return Err(Error::GuardExceeded {
            words: words.to_string(),
            guard,
        });
    }
    let targets: Vec<(&Pattern, usize)> = instance
        .specs()
        .iter()
        .map(|s| (&s.pattern, s.required_count))
        .collect();

    let mut hits: u64 = 0;
    for_each_word(q, t, |word| {
        if targets
            .iter()
            .all(|&(p, x)| count_occurrences(word, p) == x)
        {
            hits += 1;
        }
    });
    Ok(BigUint::from(hits))
}

/// Tallies how many words produce each occurrence profile.
pub fn profile_histogram(
    instance: &ProblemInstance,
    guard: u64,
) -> Result<std::collections::HashMap<OccurrenceProfile, BigUint>> {
    let q = instance.alphabet_size();
    let t = instance.word_length();
    let words = word_count(q, t);
    if words > BigUint::from(guard) {
        return Err(Error::GuardExceeded {
            words: words.to_string(),
            guard,
        });
    }
    let patterns: Vec<&Pattern> = instance.patterns().collect();
    let mut hist = std::collections::HashMap::new();
    for_each_word(q, t, |word| {
        *hist
            .entry(OccurrenceProfile::of(word, &patterns))
            .or_insert_with(BigUint::zero) += BigUint::one();
    });
    Ok(hist)
}
