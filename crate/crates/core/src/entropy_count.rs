//! Exact counts of low-weight words and their exponential growth rates.
//!
//! `S(m, δ, k)` is the set of words of length `m` over `{0, …, k−1}` with at
//! least `(1−δ)m` zeros, i.e. at most `⌊δm⌋` nonzero symbols.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{floor_mul, to_f64, Rational};
use crate::{Error, Result};

/// Default cap on the number of words the brute-force oracle enumerates.
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 100_000_000;

/// `H(δ) = −δ log δ − (1−δ) log(1−δ)` in nats.
pub fn entropy_h(delta: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&delta) {
        return Err(Error::param(format!("δ = {delta} outside [0, 1]")));
    }
    let term = |p: f64| if p == 0.0 { 0.0 } else { -p * p.ln() };
    Ok(term(delta) + term(1.0 - delta))
}

pub fn entropy_h_exact(delta: Rational) -> Result<f64> {
    entropy_h(to_f64(delta))
}

/// `H(δ) + δ log(k−1)`.
pub fn analytic_limit(delta: Rational, k: u32) -> Result<f64> {
    check_params(1, delta, k)?;
    let d = to_f64(delta);
    let extra = if d == 0.0 { 0.0 } else { d * ((k - 1) as f64).ln() };
    Ok(entropy_h(d)? + extra)
}

fn check_params(m: u64, delta: Rational, k: u32) -> Result<()> {
    if delta > Rational::new(1, 2) {
        return Err(Error::param(format!("δ = {delta} exceeds 1/2")));
    }
    if k < 2 {
        return Err(Error::param(format!("alphabet size k = {k} must be at least 2")));
    }
    if m == 0 {
        return Err(Error::param("word length m must be at least 1"));
    }
    Ok(())
}

/// Natural logarithm of a big integer, accurate to double precision.
pub fn ln_big(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 1000 {
        return x.to_f64().expect("finite below 2^1000").ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_f64().expect("64-bit value");
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CountResult {
    pub m: u64,
    pub k: u32,
    pub delta: Rational,
    pub count: BigUint,
    pub log_rate: f64,
    pub analytic_limit: f64,
}

/// Binomial coefficients `C(m, i)` for `i = 0..=top`.
fn binomials(m: u64, top: u64) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(top as usize + 1);
    let mut c = BigUint::one();
    row.push(c.clone());
    for i in 1..=top {
        c = c * (m - i + 1) / i;
        row.push(c.clone());
    }
    row
}

/// `|S(m, δ, k)| = Σ_{i ≤ ⌊δm⌋} (k−1)^i C(m, i)`.
pub fn count_low_weight(m: u64, delta: Rational, k: u32) -> Result<CountResult> {
    check_params(m, delta, k)?;
    let top = floor_mul(delta, m);
    let mut count = BigUint::zero();
    let mut power = BigUint::one();
    for c in binomials(m, top) {
        count += &power * c;
        power *= k - 1;
    }
    let log_rate = ln_big(&count) / m as f64;
    Ok(CountResult { m, k, delta, count, log_rate, analytic_limit: analytic_limit(delta, k)? })
}

/// `(k−1)^{⌊δm⌋} C(m, ⌊δm⌋)` and `(⌊δm⌋ + 1)` times that.
pub fn sandwich_bounds(m: u64, delta: Rational, k: u32) -> Result<(BigUint, BigUint)> {
    check_params(m, delta, k)?;
    let top = floor_mul(delta, m);
    let c = binomials(m, top).pop().expect("nonempty");
    let lower = num_traits::pow(BigUint::from(k - 1), top as usize) * c;
    let upper = &lower * (top + 1);
    Ok((lower, upper))
}

/// Histograms `h[m][z]` of words of length `m ≤ m_max` with exactly `z` zeros,
/// found by visiting every word of every length up to `m_max`.
pub fn brute_force_histograms(m_max: u32, k: u32, limit: u128) -> Result<Vec<Vec<u64>>> {
    if k < 2 {
        return Err(Error::param(format!("alphabet size k = {k} must be at least 2")));
    }
    let words: u128 = (1..=m_max).map(|m| (k as u128).saturating_pow(m)).sum();
    if words > limit {
        return Err(Error::EnumerationLimit { words, limit });
    }
    let mut hist: Vec<Vec<u64>> = (0..=m_max).map(|m| vec![0; m as usize + 1]).collect();
    hist[0][0] = 1;
    if m_max > 0 {
        visit(0, 0, m_max as usize, k as u8, &mut hist);
    }
    Ok(hist)
}

// Extends a word of length `depth` carrying `zeros` zeros by every symbol.
fn visit(depth: usize, zeros: usize, m_max: usize, k: u8, hist: &mut [Vec<u64>]) {
    let next = depth + 1;
    if next == m_max {
        let row = &mut hist[next];
        for s in 0..k {
            row[zeros + usize::from(s == 0)] += 1;
        }
        return;
    }
    for s in 0..k {
        let z = zeros + usize::from(s == 0);
        hist[next][z] += 1;
        visit(next, z, m_max, k, hist);
    }
}

/// Words of length `m` with at least `m − ⌊δm⌋` zeros, read off a histogram row.
pub fn count_from_histogram(row: &[u64], delta: Rational) -> u64 {
    let m = (row.len() - 1) as u64;
    let min_zeros = (m - floor_mul(delta, m)) as usize;
    row[min_zeros..].iter().sum()
}

/// Enumerates all `k^m` words and counts those with at least `(1−δ)m` zeros.
pub fn brute_force_count(m: u32, delta: Rational, k: u32) -> Result<u64> {
    brute_force_count_with_limit(m, delta, k, DEFAULT_ENUMERATION_LIMIT)
}

pub fn brute_force_count_with_limit(m: u32, delta: Rational, k: u32, limit: u128) -> Result<u64> {
    check_params(m as u64, delta, k)?;
    let words = (k as u128).saturating_pow(m);
    if words > limit {
        return Err(Error::EnumerationLimit { words, limit });
    }
    let mut word = vec![0u8; m as usize];
    let mut zeros = m as usize;
    let min_zeros = (m as u64 - floor_mul(delta, m as u64)) as usize;
    let mut count = 0u64;
    loop {
        count += u64::from(zeros >= min_zeros);
        let mut i = 0;
        loop {
            if i == word.len() {
                return Ok(count);
            }
            if word[i] == 0 {
                zeros -= 1;
            }
            word[i] += 1;
            if word[i] as u32 == k {
                word[i] = 0;
                zeros += 1;
                i += 1;
            } else {
                break;
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthPoint {
    pub result: CountResult,
    pub inf_so_far: f64,
    /// `log_rate − analytic_limit`.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GrowthProfile {
    pub delta: Rational,
    pub k: u32,
    pub analytic_limit: f64,
    pub points: Vec<GrowthPoint>,
}

impl GrowthProfile {
    pub fn final_rate(&self) -> Option<f64> {
        self.points.last().map(|p| p.result.log_rate)
    }

    /// Whether the running infimum never increases.
    pub fn infimum_nonincreasing(&self) -> bool {
        self.points.windows(2).all(|w| w[1].inf_so_far <= w[0].inf_so_far)
    }

    /// Whether `|gap|` never increases along the profile.
    pub fn gap_shrinks(&self) -> bool {
        self.points.windows(2).all(|w| w[1].gap.abs() <= w[0].gap.abs())
    }
}

pub fn growth_rate_profile(delta: Rational, k: u32, ms: &[u64]) -> Result<GrowthProfile> {
    if ms.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::param("m values must be strictly ascending"));
    }
    let limit = analytic_limit(delta, k)?;
    let mut inf = f64::INFINITY;
    let points = ms
        .iter()
        .map(|&m| {
            let result = count_low_weight(m, delta, k)?;
            inf = inf.min(result.log_rate);
            let gap = result.log_rate - limit;
            Ok(GrowthPoint { result, inf_so_far: inf, gap })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(GrowthProfile { delta, k, analytic_limit: limit, points })
}
