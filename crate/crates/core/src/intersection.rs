//! Border detection and pairwise overlap checks for patterns.

use std::collections::BTreeSet;

use crate::instance::{Pattern, Symbol};

/// Proper nonempty border lengths of a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderProfile {
    pub pattern_length: usize,
    pub border_lengths: BTreeSet<usize>,
}

/// KMP failure function: `fail[i]` is the length of the longest proper
/// border of `word[..=i]`.
pub(crate) fn failure_function(word: &[Symbol]) -> Vec<usize> {
    let mut fail = vec![0; word.len()];
    let mut k = 0;
    for i in 1..word.len() {
        while k > 0 && word[i] != word[k] {
            k = fail[k - 1];
        }
        if word[i] == word[k] {
            k += 1;
        }
        fail[i] = k;
    }
    fail
}

pub fn border_profile(pattern: &Pattern) -> BorderProfile {
    let symbols = pattern.symbols();
    let fail = failure_function(symbols);
    let mut border_lengths = BTreeSet::new();
    let mut k = fail.last().copied().unwrap_or(0);
    while k > 0 {
        border_lengths.insert(k);
        k = fail[k - 1];
    }
    BorderProfile {
        pattern_length: symbols.len(),
        border_lengths,
    }
}

pub fn is_self_intersecting(pattern: &Pattern) -> bool {
    let fail = failure_function(pattern.symbols());
    fail.last().is_some_and(|&k| k > 0)
}

fn contains(haystack: &[Symbol], needle: &[Symbol]) -> bool {
    needle.len() <= haystack.len() && haystack.windows(needle.len()).any(|w| w == needle)
}

/// True when some nonempty proper suffix of `left` is a prefix of `right`.
fn suffix_meets_prefix(left: &[Symbol], right: &[Symbol]) -> bool {
    let longest = (left.len() - 1).min(right.len());
    (1..=longest).any(|k| left[left.len() - k..] == right[..k])
}

/// Whether occurrences of the two patterns can share a position in some
/// word: one contains the other, or they chain through a suffix/prefix.
pub fn can_overlap(p1: &Pattern, p2: &Pattern) -> bool {
    let (a, b) = (p1.symbols(), p2.symbols());
    contains(a, b) || contains(b, a) || suffix_meets_prefix(a, b) || suffix_meets_prefix(b, a)
}
