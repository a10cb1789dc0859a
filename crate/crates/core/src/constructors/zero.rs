use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::problem::InterpolationProblem;
use crate::entropy_count::count_low_weight;
use crate::intsets::max_window_count;
use crate::rational::Rational;
use crate::words::{complexity_profile, count_factors, ComplexityProfile, SymbolWord};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroExtension {
    pub word: SymbolWord,
    pub profile: ComplexityProfile,
}

/// `x = f` on `S`, `0` elsewhere, on `[1, N]`, with complexity up to `n_max`.
pub fn extend_zero(problem: &InterpolationProblem, n_max: usize) -> Result<ZeroExtension> {
    let cells = problem.seed_cells(problem.bound() as usize, 0);
    let word = SymbolWord::new(problem.k(), cells)?;
    let profile = complexity_profile(&word, n_max)?;
    Ok(ZeroExtension { word, profile })
}

/// `p(m)` of the zero extension together with `|S(m, η, k)|`, where `η·m` is the
/// largest number of elements of `S` in a length-`m` window of `[1, N]`.
///
/// Every length-`m` factor has at most `η·m` nonzero symbols, so the first
/// number never exceeds the second.
pub fn zero_extension_bound(problem: &InterpolationProblem, word: &SymbolWord, m: usize) -> Result<(u64, BigUint)> {
    if problem.k() < 2 {
        return Err(Error::param("entropy bound needs k ≥ 2"));
    }
    let elements = problem.set().elements(problem.bound())?;
    let (count, _) = max_window_count(&elements, problem.bound(), m as u64);
    let eta = Rational::new(count, m as u64);
    if eta > Rational::new(1, 2) {
        return Err(Error::param(format!("window density {eta} at scale {m} exceeds 1/2")));
    }
    let p = count_factors(word, m)?;
    Ok((p, count_low_weight(m as u64, eta, problem.k() as u32)?.count))
}
