use serde::{Deserialize, Serialize};

use super::problem::InterpolationProblem;
use crate::words::SymbolWord;
use crate::Result;

/// Marker for positions a partial filling has not assigned yet.
pub const UNFILLED: u8 = u8::MAX;

/// A word over the alphabet plus [`UNFILLED`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartialWord {
    pub alphabet: usize,
    pub cells: Vec<u8>,
}

impl PartialWord {
    pub fn unfilled(alphabet: usize, len: usize) -> Self {
        PartialWord { alphabet, cells: vec![UNFILLED; len] }
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn filled_count(&self) -> usize {
        self.cells.iter().filter(|&&c| c != UNFILLED).count()
    }

    pub fn is_complete(&self) -> bool {
        self.cells.iter().all(|&c| c != UNFILLED)
    }

    /// Whether `self` agrees with `earlier` wherever `earlier` is filled.
    pub fn extends(&self, earlier: &PartialWord) -> bool {
        self.len() == earlier.len()
            && earlier.cells.iter().zip(&self.cells).all(|(&a, &b)| a == UNFILLED || a == b)
    }

    /// Whether any cell of the 0-based range `[start, end)` is filled.
    pub(crate) fn any_filled(&self, start: usize, end: usize) -> bool {
        self.cells[start..end].iter().any(|&c| c != UNFILLED)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConstructionKind {
    TotallyMinimal,
    StrictlyErgodic,
}

/// One level of an iterative construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Level {
    pub m: u64,
    /// Anchor word `w_k` of length `m`.
    pub anchor: SymbolWord,
    /// Sample family `T_k`; empty at the final level.
    pub samples: Vec<SymbolWord>,
    pub samples_capped: bool,
    /// Anchor `w'_k` of length `m + 1`, for constructions that use one.
    pub primed_anchor: Option<SymbolWord>,
    /// Sample family `T'_k` of words of length `m + 1`.
    pub primed_samples: Vec<SymbolWord>,
    /// The distinguished element `v` of `T'_k`.
    pub v: Option<SymbolWord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionTrace {
    pub kind: ConstructionKind,
    pub alphabet: usize,
    pub levels: Vec<Level>,
    /// `x^{(0)}, …, x^{(K)}` over `[1, coverage]`.
    pub filling_history: Vec<PartialWord>,
    /// `x^{(K)}` with every untouched level-`K` block set to `w_K`.
    pub result: SymbolWord,
}

impl ConstructionTrace {
    pub fn final_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn coverage(&self) -> u64 {
        self.result.len() as u64
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoherenceReport {
    pub prefix_chain: bool,
    pub divisibility: bool,
    /// `k! | m_k` for every level; only required of the totally minimal construction.
    pub factorial_divisibility: bool,
    pub monotone_filling: bool,
    pub result_extends_filling: bool,
    pub result_complete_to_final_m: bool,
}

impl CoherenceReport {
    pub fn holds(&self, kind: ConstructionKind) -> bool {
        self.prefix_chain
            && self.divisibility
            && (kind != ConstructionKind::TotallyMinimal || self.factorial_divisibility)
            && self.monotone_filling
            && self.result_extends_filling
            && self.result_complete_to_final_m
    }
}

pub fn check_coherence(trace: &ConstructionTrace) -> CoherenceReport {
    let lv = &trace.levels;
    let prefix_chain = lv.windows(2).all(|w| w[1].anchor.symbols().starts_with(w[0].anchor.symbols()));
    let divisibility = lv.windows(2).all(|w| w[1].m % w[0].m == 0);
    let mut fact = 1u64;
    let factorial_divisibility = lv.iter().enumerate().all(|(k, l)| {
        if k > 0 {
            fact = fact.saturating_mul(k as u64);
        }
        l.m % fact == 0
    });
    let monotone_filling = trace.filling_history.windows(2).all(|w| w[1].extends(&w[0]));
    let result = PartialWord { alphabet: trace.alphabet, cells: trace.result.symbols().to_vec() };
    let result_extends_filling = trace.filling_history.last().is_none_or(|x| result.extends(x));
    let m_final = lv.last().map_or(0, |l| l.m) as usize;
    let result_complete_to_final_m = trace.result.len() >= m_final
        && trace.filling_history.last().is_some_and(|x| !x.cells[..m_final].contains(&UNFILLED));
    CoherenceReport {
        prefix_chain,
        divisibility,
        factorial_divisibility,
        monotone_filling,
        result_extends_filling,
        result_complete_to_final_m,
    }
}

/// Elements `s ≤ |x|` of the problem's domain with `x(s) ≠ f(s)`.
pub fn restriction_mismatches(x: &SymbolWord, problem: &InterpolationProblem) -> Result<Vec<u64>> {
    let bound = (x.len() as u64).min(problem.bound());
    Ok(problem
        .pairs()
        .iter()
        .take_while(|(s, _)| *s <= bound)
        .filter(|&&(s, v)| x.at(s) != Some(v))
        .map(|&(s, _)| s)
        .collect())
}
