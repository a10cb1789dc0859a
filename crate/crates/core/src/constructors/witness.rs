//! Colorings that defeat interpolation for syndetic sets and for sets of
//! positive upper Banach density.

use serde::{Deserialize, Serialize};

use crate::intsets::{syndetic_certificate, IntegerSetModel};
use crate::words::check_alphabet;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringReport {
    pub piece: usize,
    /// Points `t ∈ (h²ℕ + ih) ∩ [1, N − h²]` checked.
    pub checked: usize,
    /// Points with no `j < g` such that `t + j ∈ S_i`.
    pub uncovered: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionWitness {
    pub g: u64,
    pub h: u64,
    pub bound: u64,
    /// `S_i = {s ∈ S : s mod h² ∈ [ih, (i+1)h)}` for `i < h`.
    pub pieces: Vec<Vec<u64>>,
    pub coverings: Vec<CoveringReport>,
    /// `(s, i)` for `s ∈ S_i`.
    pub coloring: Vec<(u64, u64)>,
}

impl PartitionWitness {
    pub fn holds(&self) -> bool {
        self.pieces.iter().all(|p| !p.is_empty()) && self.coverings.iter().all(|c| c.uncovered.is_empty())
    }
}

/// Splits a set that is syndetic with gap bound `g` into `h > g` pieces, each
/// of which still meets every translate of a fixed window in `h²ℕ + ih`.
pub fn syndetic_partition_witness(set: &IntegerSetModel, bound: u64, g: u64, h: u64) -> Result<PartitionWitness> {
    if h <= g {
        return Err(Error::param(format!("h = {h} must exceed the gap bound g = {g}")));
    }
    if g == 0 {
        return Err(Error::param("gap bound must be positive"));
    }
    let cert = syndetic_certificate(set, bound, g)?;
    if !cert.holds() {
        return Err(Error::Refused { reason: format!("set is not syndetic with gap bound {g} on [1, {bound}]") });
    }
    let hh = h.checked_mul(h).ok_or_else(|| Error::param("h² overflows"))?;
    let elements = set.elements(bound)?;
    let piece_of = |s: u64| (s % hh) / h;
    let mut pieces = vec![Vec::new(); h as usize];
    for &s in &elements {
        pieces[piece_of(s) as usize].push(s);
    }
    let coverings = (0..h)
        .map(|i| {
            let piece = &pieces[i as usize];
            let mut checked = 0;
            let mut uncovered = Vec::new();
            let mut t = hh + i * h;
            while t + hh <= bound {
                checked += 1;
                let lo = piece.partition_point(|&s| s < t);
                if !piece.get(lo).is_some_and(|&s| s < t + g) {
                    uncovered.push(t);
                }
                t += hh;
            }
            CoveringReport { piece: i as usize, checked, uncovered }
        })
        .collect();
    let coloring = elements.iter().map(|&s| (s, piece_of(s))).collect();
    Ok(PartitionWitness { g, h, bound, pieces, coverings, coloring })
}

/// `f(n) = i mod k` on `S ∩ [a_i, b_i)` for the `i`-th interval (from 1), and `0`
/// on the rest of `S ∩ [1, N]`.
pub fn density_coloring_witness(
    set: &IntegerSetModel,
    intervals: &[(u64, u64)],
    k: usize,
    bound: u64,
) -> Result<Vec<(u64, u8)>> {
    check_alphabet(k)?;
    if intervals.iter().any(|&(a, b)| a == 0 || a >= b) {
        return Err(Error::param("intervals must be nonempty half-open [a, b) with a ≥ 1"));
    }
    if intervals.windows(2).any(|w| w[0].1 > w[1].0) {
        return Err(Error::param("intervals must be pairwise disjoint and ascending"));
    }
    Ok(set
        .elements(bound)?
        .into_iter()
        .map(|s| {
            let i = intervals.partition_point(|&(_, b)| b <= s);
            let color = match intervals.get(i) {
                Some(&(a, _)) if a <= s => ((i + 1) % k) as u8,
                _ => 0,
            };
            (s, color)
        })
        .collect())
}
