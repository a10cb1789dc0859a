//! IP-sets and a sum-free set whose shifts all contain IP-sets.
//!
//! With index sets `I_n = {2^{n−1}(2i−1) : i ≥ 1}`, `J_n` is the IP-set generated
//! by `{10^j : j ∈ I_n}` and `F = ⋃_n (J_n + n)`. Elements of `J_n` are carry-free
//! sums of powers of ten, so they are stored alongside the positions of their
//! decimal `1` digits.

use serde::{Deserialize, Serialize};

use crate::intsets::IntegerSetModel;
use crate::{Error, Result};

/// Label recorded with every export of `F`.
pub const INDEX_FAMILY: &str = "dyadic: I_n = {2^(n-1)(2i-1) : i >= 1}";

/// Ascending finite sums of at most `depth` distinct generators, up to `bound`.
///
/// Generators must be positive and strictly ascending.
pub fn ip_closure(generators: &[u64], depth: usize, bound: u64) -> Vec<u64> {
    let mut out = Vec::new();
    fn extend(gens: &[u64], from: usize, left: usize, sum: u64, bound: u64, out: &mut Vec<u64>) {
        if left == 0 {
            return;
        }
        for i in from..gens.len() {
            let Some(s) = sum.checked_add(gens[i]).filter(|&s| s <= bound) else {
                break;
            };
            out.push(s);
            extend(gens, i + 1, left - 1, s, bound, out);
        }
    }
    extend(generators, 0, depth, 0, bound, &mut out);
    out.sort_unstable();
    out.dedup();
    out
}

/// Generators and truncation depth of an IP-set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IpSetSpec {
    pub generators: Vec<u64>,
    pub depth: usize,
}

impl IpSetSpec {
    pub fn new(generators: Vec<u64>, depth: usize) -> Result<Self> {
        if generators.first() == Some(&0) || generators.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::param("generators must be positive and strictly ascending"));
        }
        Ok(IpSetSpec { generators, depth })
    }

    pub fn elements(&self, bound: u64) -> Vec<u64> {
        ip_closure(&self.generators, self.depth, bound)
    }
}

/// 2-adic valuation of a positive integer.
pub fn dyadic_valuation(j: u64) -> u32 {
    j.trailing_zeros()
}

/// The index `n` with `j ∈ I_n`, i.e. `v₂(j) + 1`.
pub fn index_of(j: u64) -> Result<u32> {
    if j == 0 {
        return Err(Error::param("index sets contain only positive integers"));
    }
    Ok(dyadic_valuation(j) + 1)
}

/// Elements of `I_n` that are at most `limit`.
pub fn index_set(n: u32, limit: u64) -> Result<Vec<u64>> {
    if n == 0 || n > 64 {
        return Err(Error::param(format!("index n = {n} outside 1..=64")));
    }
    let Some(step) = 1u64.checked_shl(n) else {
        return Ok(Vec::new());
    };
    let first = step / 2;
    Ok((first..=limit).step_by(step as usize).collect())
}

/// Exponents `j ∈ I_n` with `10^j ≤ bound`.
fn digit_positions(n: u32, bound: u64) -> Result<Vec<u64>> {
    let max_exp = bound.checked_ilog10().unwrap_or(0) as u64;
    index_set(n, max_exp)
}

/// Generators `10^j`, `j ∈ I_n`, up to `bound`.
pub fn j_generators(n: u32, bound: u64) -> Result<Vec<u64>> {
    Ok(digit_positions(n, bound)?.into_iter().map(|j| 10u64.pow(j as u32)).collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FElement {
    pub value: u64,
    /// The shift `n` with `value − n ∈ J_n`.
    pub index: u32,
    /// Decimal positions of the `1` digits of `value − n`, ascending.
    pub digits: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FSetModel {
    pub bound: u64,
    pub index_family: String,
    pub elements: Vec<FElement>,
}

/// Materializes `F ∩ [1, bound]`.
pub fn build_f(bound: u64) -> Result<FSetModel> {
    let mut elements = Vec::new();
    for n in 1u32.. {
        let first_exp = 1u64 << (n - 1).min(63);
        let smallest = u32::try_from(first_exp)
            .ok()
            .and_then(|e| 10u64.checked_pow(e))
            .and_then(|p| p.checked_add(n as u64));
        match smallest {
            Some(s) if s <= bound => {}
            _ => break,
        }
        let positions = digit_positions(n, bound - n as u64)?;
        let gens: Vec<u64> = positions.iter().map(|&j| 10u64.pow(j as u32)).collect();
        for sum in ip_closure(&gens, gens.len(), bound - n as u64) {
            let digits = ones_positions(sum).expect("carry-free sum of powers of ten");
            elements.push(FElement { value: sum + n as u64, index: n, digits });
        }
    }
    elements.sort_by_key(|e| e.value);
    elements.dedup_by_key(|e| e.value);
    Ok(FSetModel { bound, index_family: INDEX_FAMILY.to_string(), elements })
}

/// Positions of `1` digits when every decimal digit of `x` is `0` or `1`.
fn ones_positions(mut x: u64) -> Option<Vec<u64>> {
    let mut out = Vec::new();
    let mut pos = 0;
    while x > 0 {
        match x % 10 {
            0 => {}
            1 => out.push(pos),
            _ => return None,
        }
        x /= 10;
        pos += 1;
    }
    Some(out)
}

/// Membership in `F` decided from the decimal digits of `x − n` alone.
pub fn in_f_by_digits(x: u64) -> bool {
    (1..=64u32).take_while(|&n| (n as u64) < x).any(|n| match ones_positions(x - n as u64) {
        Some(pos) => !pos.is_empty() && pos.iter().all(|&j| j > 0 && dyadic_valuation(j) + 1 == n),
        None => false,
    })
}

impl FSetModel {
    pub fn values(&self) -> Vec<u64> {
        self.elements.iter().map(|e| e.value).collect()
    }

    /// Membership read off the materialized subset sums.
    pub fn contains(&self, x: u64) -> Result<bool> {
        if x > self.bound {
            return Err(Error::WindowExceeded { requested: x, window: self.bound });
        }
        Ok(self.elements.binary_search_by_key(&x, |e| e.value).is_ok())
    }

    pub fn to_set_model(&self) -> Result<IntegerSetModel> {
        IntegerSetModel::explicit(self.values(), self.bound)
    }

    /// Every materialized digit position lies in `I_index`, and every `J_n`
    /// part is divisible by `10^n`.
    pub fn check_structure(&self) -> bool {
        self.elements.iter().all(|e| {
            let base = e.value - e.index as u64;
            let divisible = 10u64.checked_pow(e.index).is_none_or(|p| base.is_multiple_of(p));
            divisible && e.digits.iter().all(|&j| j > 0 && dyadic_valuation(j) + 1 == e.index)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SumFreeVerdict {
    pub bound: u64,
    pub pairs_checked: u64,
    pub holds: bool,
    /// `(x, y, x + y)` with all three in the set.
    pub counterexample: Option<(u64, u64, u64)>,
}

/// Checks every pair `x ≤ y` of the ascending `values` with `x + y ≤ bound`.
pub fn verify_sum_free(values: &[u64], bound: u64) -> SumFreeVerdict {
    let mut pairs_checked = 0;
    for (i, &x) in values.iter().enumerate() {
        for &y in &values[i..] {
            let Some(s) = x.checked_add(y).filter(|&s| s <= bound) else {
                break;
            };
            pairs_checked += 1;
            if values.binary_search(&s).is_ok() {
                return SumFreeVerdict { bound, pairs_checked, holds: false, counterexample: Some((x, y, s)) };
            }
        }
    }
    SumFreeVerdict { bound, pairs_checked, holds: true, counterexample: None }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftIpVerdict {
    pub n: u32,
    pub depth: usize,
    pub bound: u64,
    /// Elements of the truncated `J_n` that are at most `bound − n`.
    pub checked: Vec<u64>,
    pub missing: Vec<u64>,
    pub holds: bool,
}

/// Whether `F − n` contains every sum of at most `depth` generators of `J_n`.
pub fn verify_shift_ip(f: &FSetModel, n: u32, depth: usize, bound: u64) -> Result<ShiftIpVerdict> {
    if n == 0 {
        return Err(Error::param("shift n must be at least 1"));
    }
    if bound > f.bound {
        return Err(Error::WindowExceeded { requested: bound, window: f.bound });
    }
    let limit = bound.saturating_sub(n as u64);
    let checked = if limit == 0 { Vec::new() } else { ip_closure(&j_generators(n, limit)?, depth, limit) };
    let mut missing = Vec::new();
    for &j in &checked {
        if !f.contains(j + n as u64)? {
            missing.push(j);
        }
    }
    Ok(ShiftIpVerdict { n, depth, bound, holds: missing.is_empty(), checked, missing })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_examples() {
        assert_eq!(ip_closure(&[10, 1000], 2, u64::MAX), vec![10, 1000, 1010]);
        assert_eq!(ip_closure(&[1, 2, 4], 3, 100), (1..=7).collect::<Vec<_>>());
        assert_eq!(ip_closure(&[5], 1, 100), vec![5]);
        assert_eq!(ip_closure(&[1, 2, 4], 1, 100), vec![1, 2, 4]);
        assert_eq!(ip_closure(&[1, 2, 4], 3, 5), vec![1, 2, 3, 4, 5]);
        assert!(ip_closure(&[1, 2], 0, 100).is_empty());
    }

    #[test]
    fn dyadic_index_sets() {
        assert_eq!(index_set(1, 9).unwrap(), vec![1, 3, 5, 7, 9]);
        assert_eq!(index_set(2, 14).unwrap(), vec![2, 6, 10, 14]);
        assert_eq!(index_set(3, 30).unwrap(), vec![4, 12, 20, 28]);
        for j in 1..200 {
            let n = index_of(j).unwrap();
            assert!(index_set(n, 200).unwrap().contains(&j));
            assert!(j >= n as u64);
        }
    }

    #[test]
    fn small_windows() {
        assert_eq!(build_f(200).unwrap().values(), vec![11, 102]);
        let f = build_f(2000).unwrap();
        assert!(f.contains(1001).unwrap() && f.contains(1011).unwrap());
        assert_eq!(f.values(), vec![11, 102, 1001, 1011]);
        assert!(build_f(10).unwrap().elements.is_empty());
    }

    #[test]
    fn sum_free_and_fault() {
        let f = build_f(1_000_000).unwrap();
        assert!(f.check_structure());
        assert!(verify_sum_free(&f.values(), f.bound).holds);
        let v = verify_sum_free(&[11, 102, 113], 200);
        assert_eq!(v.counterexample, Some((11, 102, 113)));
        assert!(verify_sum_free(&[], 10).holds);
    }

    #[test]
    fn shifted_ip_sets() {
        let f = build_f(1_000_000).unwrap();
        let v = verify_shift_ip(&f, 1, 2, 1_000_000).unwrap();
        assert!(v.holds);
        assert_eq!(v.checked, vec![10, 1000, 1010, 100000, 100010, 101000]);
        let v = verify_shift_ip(&f, 1, 3, 1_000_000).unwrap();
        assert!(v.checked.contains(&101010) && v.holds);
        let v = verify_shift_ip(&f, 3, 3, 9_999).unwrap();
        assert!(v.holds && v.checked.is_empty());
    }

    #[test]
    fn oracles_agree_below_two_million() {
        let f = build_f(2_000_000).unwrap();
        for x in 1..=2_000_000 {
            assert_eq!(f.contains(x).unwrap(), in_f_by_digits(x), "x = {x}");
        }
    }
}
