//! Aho-Corasick automaton over the pattern set and a forward counting DP
//! over (automaton state, capped occurrence counts).
//!
//! The DP works for any pattern set, including self-intersecting and
//! overlapping ones, so it serves as an oracle that scales to word lengths
//! far beyond exhaustive enumeration.

use std::collections::VecDeque;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::instance::{Pattern, ProblemInstance};

/// Default step budget for [`dp_count`].
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

const ROOT: usize = 0;

/// Trie of the patterns with failure links and a dense, failure-closed
/// transition table.
#[derive(Debug, Clone)]
pub struct MatchAutomaton {
    alphabet_size: usize,
    goto: Vec<Vec<usize>>,
    fail: Vec<usize>,
    emits: Vec<Vec<usize>>,
    depth: Vec<usize>,
}

impl MatchAutomaton {
    pub fn state_count(&self) -> usize {
        self.goto.len()
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }

    pub fn root(&self) -> usize {
        ROOT
    }

    pub fn next_state(&self, state: usize, symbol: usize) -> usize {
        self.goto[state][symbol]
    }

    pub fn fail(&self, state: usize) -> usize {
        self.fail[state]
    }

    /// Indices of the patterns that end on entering `state`.
    pub fn emits(&self, state: usize) -> &[usize] {
        &self.emits[state]
    }

    /// Length of the string spelled from the root to `state`.
    pub fn depth(&self, state: usize) -> usize {
        self.depth[state]
    }

    /// Follows `word` from the root and returns the visited end state.
    pub fn walk(&self, word: &[usize]) -> usize {
        word.iter().fold(ROOT, |s, &c| self.goto[s][c])
    }
}

pub fn build_automaton(alphabet_size: usize, patterns: &[Pattern]) -> MatchAutomaton {
    const NONE: usize = usize::MAX;
    let mut goto: Vec<Vec<usize>> = vec![vec![NONE; alphabet_size]];
    let mut emits: Vec<Vec<usize>> = vec![Vec::new()];
    let mut depth = vec![0];

    for (index, pattern) in patterns.iter().enumerate() {
        let mut state = ROOT;
        for sym in pattern.symbols() {
            let c = sym.index();
            if goto[state][c] == NONE {
                goto.push(vec![NONE; alphabet_size]);
                emits.push(Vec::new());
                depth.push(depth[state] + 1);
                goto[state][c] = goto.len() - 1;
            }
            state = goto[state][c];
        }
        emits[state].push(index);
    }

    let mut fail = vec![ROOT; goto.len()];
    let mut queue = VecDeque::new();
    for slot in goto[ROOT].iter_mut() {
        match *slot {
            NONE => *slot = ROOT,
            child => queue.push_back(child),
        }
    }
    // BFS order guarantees fail targets are finished before their users
    while let Some(state) = queue.pop_front() {
        let inherited = emits[fail[state]].clone();
        emits[state].extend(inherited);
        let fallback = goto[fail[state]].clone();
        for (slot, &via_fail) in goto[state].iter_mut().zip(&fallback) {
            if *slot == NONE {
                *slot = via_fail;
            } else {
                fail[*slot] = via_fail;
                queue.push_back(*slot);
            }
        }
    }
    for e in &mut emits {
        e.sort_unstable();
        e.dedup();
    }

    MatchAutomaton {
        alphabet_size,
        goto,
        fail,
        emits,
        depth,
    }
}

/// Capped per-pattern tallies packed into one mixed-radix index; each
/// component lives in `0..=x_p + 1`, the top value meaning "exceeded".
#[derive(Debug, Clone)]
struct CountSpace {
    caps: Vec<usize>,
    strides: Vec<usize>,
    size: usize,
}

impl CountSpace {
    fn new(required: &[usize]) -> Self {
        let caps: Vec<usize> = required.iter().map(|x| x + 1).collect();
        let mut strides = Vec::with_capacity(caps.len());
        let mut size = 1;
        for cap in &caps {
            strides.push(size);
            size *= cap + 1;
        }
        CountSpace {
            caps,
            strides,
            size,
        }
    }

    fn component(&self, code: usize, p: usize) -> usize {
        (code / self.strides[p]) % (self.caps[p] + 1)
    }

    fn bump(&self, code: usize, patterns: &[usize]) -> usize {
        let mut code = code;
        for &p in patterns {
            if self.component(code, p) < self.caps[p] {
                code += self.strides[p];
            }
        }
        code
    }

    fn encode(&self, counts: &[usize]) -> usize {
        counts.iter().zip(&self.strides).map(|(c, s)| c * s).sum()
    }
}

/// Forward counting DP, advanced one symbol at a time.
pub struct CountingDp {
    automaton: MatchAutomaton,
    counts: CountSpace,
    // (target state, number of symbols leading there) per source state
    moves: Vec<Vec<(usize, u64)>>,
    // bumped count code per (target state, count code)
    bumped: Vec<Vec<usize>>,
    mass: Vec<BigUint>,
    steps_taken: usize,
}

impl CountingDp {
    pub fn new(instance: &ProblemInstance) -> Self {
        let patterns: Vec<Pattern> = instance.patterns().cloned().collect();
        let automaton = build_automaton(instance.alphabet_size(), &patterns);
        let required: Vec<usize> = instance.specs().iter().map(|s| s.required_count).collect();
        let counts = CountSpace::new(&required);

        let moves = (0..automaton.state_count())
            .map(|s| {
                let mut grouped: Vec<(usize, u64)> = Vec::new();
                for c in 0..automaton.alphabet_size() {
                    let target = automaton.next_state(s, c);
                    match grouped.iter_mut().find(|(t, _)| *t == target) {
                        Some((_, n)) => *n += 1,
                        None => grouped.push((target, 1)),
                    }
                }
                grouped
            })
            .collect();
        let bumped = (0..automaton.state_count())
            .map(|s| {
                (0..counts.size)
                    .map(|code| counts.bump(code, automaton.emits(s)))
                    .collect()
            })
            .collect();

        let mut mass = vec![BigUint::zero(); automaton.state_count() * counts.size];
        mass[ROOT * counts.size] = BigUint::from(1u32);
        CountingDp {
            automaton,
            counts,
            moves,
            bumped,
            mass,
            steps_taken: 0,
        }
    }

    pub fn step(&mut self) {
        let width = self.counts.size;
        let mut next = vec![BigUint::zero(); self.mass.len()];
        for (source, moves) in self.moves.iter().enumerate() {
            for code in 0..width {
                let m = &self.mass[source * width + code];
                if m.is_zero() {
                    continue;
                }
                for &(target, mult) in moves {
                    let to = target * width + self.bumped[target][code];
                    next[to] += m * mult;
                }
            }
        }
        self.mass = next;
        self.steps_taken += 1;
    }

    pub fn steps_taken(&self) -> usize {
        self.steps_taken
    }

    pub fn total_mass(&self) -> BigUint {
        self.mass.iter().sum()
    }

    /// Mass summed over all states at exactly the given count vector.
    pub fn mass_at(&self, counts: &[usize]) -> BigUint {
        let code = self.counts.encode(counts);
        (0..self.automaton.state_count())
            .map(|s| &self.mass[s * self.counts.size + code])
            .sum()
    }
}

/// Work estimate used against the step budget:
/// `Π (x_p + 2) · states · t`.
pub fn dp_steps(instance: &ProblemInstance) -> u128 {
    let states = 1 + instance.patterns().map(Pattern::len).sum::<usize>() as u128;
    instance
        .specs()
        .iter()
        .fold(states, |acc, s| {
            acc.saturating_mul(s.required_count as u128 + 2)
        })
        .saturating_mul(instance.word_length() as u128)
}

pub fn dp_count(instance: &ProblemInstance) -> Result<BigUint> {
    dp_count_with_budget(instance, DEFAULT_BUDGET)
}

pub fn dp_count_with_budget(instance: &ProblemInstance, budget: u64) -> Result<BigUint> {
    let steps = dp_steps(instance);
    if steps > budget as u128 {
        return Err(Error::BudgetExceeded {
            steps: steps.to_string(),
            budget,
        });
    }
    let mut dp = CountingDp::new(instance);
    for _ in 0..instance.word_length() {
        dp.step();
    }
    let required: Vec<usize> = instance.specs().iter().map(|s| s.required_count).collect();
    Ok(dp.mass_at(&required))
}
