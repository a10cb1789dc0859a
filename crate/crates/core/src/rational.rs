//! Exact rationals and continued-fraction truncations.

use num_integer::Integer;
use num_rational::Ratio;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Non-negative exact rational with `u64` parts, always reduced.
pub type Rational = Ratio<u64>;

/// `⌊r·m⌋` computed exactly.
pub fn floor_mul(r: Rational, m: u64) -> u64 {
    ((*r.numer() as u128 * m as u128) / *r.denom() as u128) as u64
}

/// `⌈r·m⌉` computed exactly.
pub fn ceil_mul(r: Rational, m: u64) -> u64 {
    let num = *r.numer() as u128 * m as u128;
    num.div_ceil(*r.denom() as u128) as u64
}

pub fn to_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

/// Parses `p/q`, a bare integer, or a finite decimal such as `0.25`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    if let Some((p, q)) = s.split_once('/') {
        let p: u64 = p.trim().parse().map_err(|_| bad())?;
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(Ratio::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 18 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
        let den = 10u64.pow(frac.len() as u32);
        let f: u64 = frac.parse().map_err(|_| bad())?;
        let num = int.checked_mul(den).and_then(|v| v.checked_add(f)).ok_or_else(bad)?;
        return Ok(Ratio::new(num, den));
    }
    let n: u64 = s.parse().map_err(|_| bad())?;
    Ok(Ratio::from_integer(n))
}

/// A finite continued fraction `[a0; a1, a2, …]` together with its value.
///
/// Truncations of an irrational expansion give the exact rational convergents
/// used wherever a rotation number is needed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ContinuedFraction {
    terms: Vec<u64>,
}

impl ContinuedFraction {
    pub fn new(terms: Vec<u64>) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::param("continued fraction needs at least one term"));
        }
        if terms[1..].contains(&0) {
            return Err(Error::param("continued fraction partial quotients after the first must be positive"));
        }
        let cf = ContinuedFraction { terms };
        cf.checked_value()?;
        Ok(cf)
    }

    /// Expansion of an exact rational.
    pub fn of_rational(r: Rational) -> Self {
        let (mut p, mut q) = (*r.numer(), *r.denom());
        let mut terms = Vec::new();
        while q != 0 {
            let (a, rem) = p.div_rem(&q);
            terms.push(a);
            p = q;
            q = rem;
        }
        ContinuedFraction { terms }
    }

    /// First `len` terms of `√2 − 1 = [0; 2, 2, 2, …]`.
    pub fn sqrt2_minus_one(len: usize) -> Self {
        let mut terms = vec![0];
        terms.extend(std::iter::repeat_n(2, len.saturating_sub(1)));
        ContinuedFraction { terms }
    }

    pub fn terms(&self) -> &[u64] {
        &self.terms
    }

    fn checked_value(&self) -> Result<Rational> {
        self.convergents()?
            .last()
            .copied()
            .ok_or_else(|| Error::param("empty continued fraction"))
    }

    /// The value of the truncation, i.e. its last convergent.
    pub fn value(&self) -> Rational {
        self.checked_value().expect("validated at construction")
    }

    /// All convergents `p_i/q_i`, in order.
    pub fn convergents(&self) -> Result<Vec<Rational>> {
        let overflow = || Error::param("continued fraction convergent overflows u64");
        let (mut p_prev, mut q_prev, mut p, mut q) = (1u64, 0u64, self.terms[0], 1u64);
        let mut out = vec![Ratio::new(p, q)];
        for &a in &self.terms[1..] {
            let pn = a.checked_mul(p).and_then(|v| v.checked_add(p_prev)).ok_or_else(overflow)?;
            let qn = a.checked_mul(q).and_then(|v| v.checked_add(q_prev)).ok_or_else(overflow)?;
            (p_prev, q_prev, p, q) = (p, q, pn, qn);
            out.push(Ratio::new(p, q));
        }
        Ok(out)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(u64::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let terms = s
            .split(',')
            .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad continued fraction term {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        ContinuedFraction::new(terms)
    }
}
