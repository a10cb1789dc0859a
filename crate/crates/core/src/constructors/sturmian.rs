use num_bigint::BigUint;

use super::problem::InterpolationProblem;
use crate::intsets::IntegerSetModel;
use crate::rational::{ceil_mul, ContinuedFraction, Rational};
use crate::words::SymbolWord;
use crate::{Error, Result};

/// Replaces the `1`s of the mechanical word of `δ` by the values of `f`.
///
/// `f` must be given on exactly `{⌊j/δ⌋ : j ≥ 1} ∩ [1, N]`.
pub fn sturmian_interpolate(cf: &ContinuedFraction, pairs: &[(u64, u8)], k: usize, bound: u64) -> Result<SymbolWord> {
    let delta = cf.value();
    if *delta.numer() == 0 || delta > Rational::new(1, 2) {
        return Err(Error::param(format!("rotation number {delta} outside (0, 1/2]")));
    }
    let set = IntegerSetModel::sturmian(cf.clone())?;
    let problem = InterpolationProblem::new(set, k, bound, pairs.to_vec())?;
    SymbolWord::new(k, problem.seed_cells(bound as usize, 0))
}

/// `(m+1)·k^{⌈mδ⌉}`.
pub fn sturmian_factor_bound(m: u64, delta: Rational, k: u32) -> BigUint {
    let ones = ceil_mul(delta, m);
    BigUint::from(m + 1) * num_traits::pow(BigUint::from(k), ones as usize)
}
