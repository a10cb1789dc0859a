use serde::{Deserialize, Serialize};

use super::problem::InterpolationProblem;
use crate::intsets::{longest_gap, syndetic_certificate, Certificate};
use crate::words::{count_factors, universal_word, SymbolWord};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MixingExtension {
    pub word: SymbolWord,
    /// The universal word `y` whose prefixes are copied into the gaps.
    pub universal: SymbolWord,
    /// `(n, start)`: the interval `[start, start + n)` carries `y_1 … y_n`.
    pub intervals: Vec<(u64, u64)>,
    /// Largest `L` with every word of length `L` present, up to twice the order asked for.
    pub cover_order: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "kebab-case")]
pub enum MixingOutcome {
    Extended(MixingExtension),
    /// `S` is syndetic at the scale needed, so no gap can hold the universal word.
    Refused { certificate: Certificate },
}

/// Extends `f` by copying prefixes of a word containing all words of length
/// `≤ order` into disjoint gaps of `S`, and by `0` elsewhere.
pub fn mixing_extend(problem: &InterpolationProblem, order: usize) -> Result<MixingOutcome> {
    let bound = problem.bound();
    let y = universal_word(problem.k(), order)?;
    let need = y.len() as u64;
    let set = problem.set();
    let longest = longest_gap(set, bound)?.map_or(0, |g| g.len());
    if longest < need {
        if set.elements(bound)?.is_empty() {
            return Err(Error::EmptyWindow { bound });
        }
        let certificate = syndetic_certificate(set, bound, longest + 1)?;
        return Ok(MixingOutcome::Refused { certificate });
    }
    let elements = set.elements(bound)?;
    // Free stretches between members, as (next free, end) pairs.
    let mut free: Vec<(u64, u64)> = Vec::new();
    let mut next = 1;
    for &e in elements.iter().chain(std::iter::once(&(bound + 1))) {
        if e > next {
            free.push((next, e - 1));
        }
        next = e + 1;
    }
    let mut cells = problem.seed_cells(bound as usize, 0);
    let mut intervals = Vec::with_capacity(y.len());
    for n in 1..=need {
        let slot = free.iter_mut().find(|(a, b)| b + 1 - *a >= n).ok_or_else(|| Error::Refused {
            reason: format!("gaps in [1, {bound}] cannot hold disjoint intervals of lengths 1..={need}"),
        })?;
        let start = slot.0;
        slot.0 += n;
        cells[(start - 1) as usize..(start - 1 + n) as usize].copy_from_slice(&y.symbols()[..n as usize]);
        intervals.push((n, start));
    }
    let word = SymbolWord::new(problem.k(), cells)?;
    let mut cover_order = 0;
    for n in 1..=(2 * order).min(word.len()) {
        let full = (problem.k() as u128).checked_pow(n as u32);
        if full != Some(count_factors(&word, n)? as u128) {
            break;
        }
        cover_order = n;
    }
    Ok(MixingOutcome::Extended(MixingExtension { word, universal: y, intervals, cover_order }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::intsets::IntegerSetModel;

    #[test]
    fn progression_is_refused() {
        let s = IntegerSetModel::arithmetic(2, 0).unwrap();
        let p = InterpolationProblem::constant(s, 2, 100, 1).unwrap();
        match mixing_extend(&p, 4).unwrap() {
            MixingOutcome::Refused { certificate } => {
                assert!(certificate.holds());
                assert_eq!(certificate.scale["g"], 2);
            }
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn powers_cover_all_four_letter_words() {
        let s = IntegerSetModel::powers(2).unwrap();
        let p = InterpolationProblem::cyclic(s, 2, 1 << 12).unwrap();
        let MixingOutcome::Extended(ext) = mixing_extend(&p, 4).unwrap() else {
            panic!("expected an extension");
        };
        assert!(ext.cover_order >= 4);
        assert_eq!(count_factors(&ext.word, 4).unwrap(), 16);
        for (j, &(s, v)) in p.pairs().iter().enumerate() {
            assert_eq!(ext.word.at(s), Some(v));
            assert_eq!(v as usize, j % 2);
        }
    }
}
