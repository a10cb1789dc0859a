//! Upper Banach density `d*(S) = lim_n max_m |S ∩ [m, m+n)| / n` on a window.

use serde::{Deserialize, Serialize};

use super::IntegerSetModel;
use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DensityPoint {
    /// Window length.
    pub n: u64,
    /// Largest number of elements in a length-`n` window inside `[1, N]`.
    pub count: u64,
    /// Start of the first window attaining `count`.
    pub start: u64,
}

impl DensityPoint {
    pub fn value(&self) -> f64 {
        self.count as f64 / self.n as f64
    }

    pub fn exact(&self) -> Rational {
        Rational::new(self.count, self.n)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensityProfile {
    pub bound: u64,
    pub points: Vec<DensityPoint>,
    /// Closed-form density of the generator, when known.
    pub exact: Option<Rational>,
}

/// `max_{1 ≤ s ≤ N-n+1} |S ∩ [s, s+n-1]|` over ascending `elements ⊂ [1, N]`,
/// with the first maximizing start.
pub fn max_window_count(elements: &[u64], bound: u64, n: u64) -> (u64, u64) {
    let last_start = bound + 1 - n;
    let (mut best, mut best_start) = (0u64, 1u64);
    let mut hi = 0usize;
    let mut lo = 0usize;
    for &e in elements {
        let s = e.min(last_start);
        while lo < elements.len() && elements[lo] < s {
            lo += 1;
        }
        if hi < lo {
            hi = lo;
        }
        while hi < elements.len() && elements[hi] < s + n {
            hi += 1;
        }
        let c = (hi - lo) as u64;
        if c > best {
            best = c;
            best_start = s;
        }
    }
    (best, best_start)
}

pub fn banach_density_at(set: &IntegerSetModel, bound: u64, n: u64) -> Result<DensityPoint> {
    if n == 0 || n > bound {
        return Err(Error::param(format!("window length must satisfy 1 ≤ n ≤ N (n = {n}, N = {bound})")));
    }
    let e = set.elements(bound)?;
    let (count, start) = max_window_count(&e, bound, n);
    Ok(DensityPoint { n, count, start })
}

/// `d_n` on the dyadic grid `1, 2, 4, …` up to `n_max`, plus `n_max` itself.
pub fn banach_density_profile(set: &IntegerSetModel, bound: u64, n_max: u64) -> Result<DensityProfile> {
    if n_max == 0 || n_max > bound / 2 {
        return Err(Error::param(format!("profile needs 1 ≤ n_max ≤ N/2 (n_max = {n_max}, N = {bound})")));
    }
    let e = set.elements(bound)?;
    let mut grid: Vec<u64> = std::iter::successors(Some(1u64), |&n| n.checked_mul(2))
        .take_while(|&n| n <= n_max)
        .collect();
    if grid.last() != Some(&n_max) {
        grid.push(n_max);
    }
    let points = grid
        .into_iter()
        .map(|n| {
            let (count, start) = max_window_count(&e, bound, n);
            DensityPoint { n, count, start }
        })
        .collect();
    Ok(DensityProfile { bound, points, exact: set.exact_density() })
}
