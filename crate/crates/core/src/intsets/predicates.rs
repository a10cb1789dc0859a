//! Finite-scale stand-ins for syndeticity, thickness and piecewise
//! syndeticity. Every predicate works on the ascending element list of
//! `S ∩ [1, N]` and the runs of non-members between them.

use serde::{Deserialize, Serialize};

use super::certificate::{Certificate, Predicate, Witness};
use super::IntegerSetModel;
use crate::{Error, Result};

/// A maximal run `[start, end]` of consecutive non-members inside `[1, N]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gap {
    pub start: u64,
    pub end: u64,
}

impl Gap {
    pub fn len(&self) -> u64 {
        self.end + 1 - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.end < self.start
    }
}

fn nonempty_elements(set: &IntegerSetModel, bound: u64) -> Result<Vec<u64>> {
    let e = set.elements(bound)?;
    if e.is_empty() {
        return Err(Error::EmptyWindow { bound });
    }
    Ok(e)
}

/// Maximal non-member runs in `[1, bound]`, ascending.
pub(crate) fn nonmember_runs(elements: &[u64], bound: u64) -> Vec<Gap> {
    let mut runs = Vec::new();
    let mut next = 1u64;
    for &e in elements {
        if e > next {
            runs.push(Gap { start: next, end: e - 1 });
        }
        next = e + 1;
    }
    if next <= bound {
        runs.push(Gap { start: next, end: bound });
    }
    runs
}

/// Differences between consecutive elements of `S ∩ [1, N]`.
pub fn gap_sequence(set: &IntegerSetModel, bound: u64) -> Result<Vec<u64>> {
    let e = nonempty_elements(set, bound)?;
    Ok(e.windows(2).map(|w| w[1] - w[0]).collect())
}

/// The longest run of non-members inside `[1, N]`, the first one on ties.
pub fn longest_gap(set: &IntegerSetModel, bound: u64) -> Result<Option<Gap>> {
    let e = set.elements(bound)?;
    Ok(nonmember_runs(&e, bound)
        .into_iter()
        .fold(None, |best: Option<Gap>, g| match best {
            Some(b) if b.len() >= g.len() => Some(b),
            _ => Some(g),
        }))
}

/// Syndetic with gap bound `g` on `[1, N]`: the first element is at most `g`
/// and consecutive elements differ by at most `g`, so every `g` consecutive
/// integers up to the last element meet `S`. The stretch after the last
/// element is not judged, since the set continues past the window.
pub fn syndetic_certificate(set: &IntegerSetModel, bound: u64, g: u64) -> Result<Certificate> {
    if g == 0 || bound < g {
        return Err(Error::param(format!("syndetic certificate needs 1 ≤ g ≤ N (g = {g}, N = {bound})")));
    }
    let e = nonempty_elements(set, bound)?;
    let mut best = (0u64, e[0]);
    for w in e.windows(2) {
        if w[1] - w[0] > best.1 - best.0 {
            best = (w[0], w[1]);
        }
    }
    Ok(Certificate::new(
        Predicate::Syndetic,
        &[("N", bound), ("g", g)],
        best.1 - best.0 <= g,
        Witness::Gap { start: best.0, end: best.1 },
    ))
}

/// Thick at run length `L`: `[1, N]` contains `L` consecutive members.
/// The witness is the first such run, or the longest run when none exists.
pub fn thick_certificate(set: &IntegerSetModel, bound: u64, run: u64) -> Result<Certificate> {
    if run == 0 || run > bound {
        return Err(Error::param(format!("thick certificate needs 1 ≤ L ≤ N (L = {run}, N = {bound})")));
    }
    let e = set.elements(bound)?;
    let mut longest = Witness::Run { start: 1, len: 0 };
    let mut longest_len = 0;
    let mut i = 0;
    while i < e.len() {
        let mut j = i;
        while j + 1 < e.len() && e[j + 1] == e[j] + 1 {
            j += 1;
        }
        let len = (j - i + 1) as u64;
        if len >= run {
            return Ok(Certificate::new(
                Predicate::Thick,
                &[("N", bound), ("L", run)],
                true,
                Witness::Run { start: e[i], len: run },
            ));
        }
        if len > longest_len {
            longest_len = len;
            longest = Witness::Run { start: e[i], len };
        }
        i = j + 1;
    }
    Ok(Certificate::new(Predicate::Thick, &[("N", bound), ("L", run)], false, longest))
}

/// Piecewise syndetic at scale `(g, L)`: some window of length `L` inside
/// `[1, N]` meets `S` in every `g` consecutive integers. The witness is the
/// first such window, or the longest window with that property when none
/// reaches length `L`.
pub fn piecewise_syndetic_certificate(set: &IntegerSetModel, bound: u64, g: u64, run: u64) -> Result<Certificate> {
    if g == 0 || run < g || run > bound {
        return Err(Error::param(format!(
            "piecewise-syndetic certificate needs 1 ≤ g ≤ L ≤ N (g = {g}, L = {run}, N = {bound})"
        )));
    }
    let e = set.elements(bound)?;
    // A start t is bad when [t, t+g-1] misses S; a window [a, a+L-1] is good
    // iff no bad start lies in [a, a+L-g]. Collect the maximal free segments
    // of starts in [1, N-g+1].
    let last_start = bound - g + 1;
    let mut free = Vec::new();
    let mut free_from = 1u64;
    for gap in nonmember_runs(&e, bound).into_iter().filter(|r| r.len() >= g) {
        if gap.start > free_from {
            free.push((free_from, gap.start - 1));
        }
        free_from = gap.end - g + 2;
    }
    if free_from <= last_start {
        free.push((free_from, last_start));
    }
    let scale = [("N", bound), ("g", g), ("L", run)];
    if let Some(&(a, _)) = free.iter().find(|(u, v)| v - u + 1 > run - g) {
        return Ok(Certificate::new(Predicate::PiecewiseSyndetic, &scale, true, Witness::Interval {
            start: a,
            end: a + run - 1,
        }));
    }
    let witness = free
        .iter()
        .fold(None, |best: Option<(u64, u64)>, &(u, v)| match best {
            Some((bu, bv)) if bv - bu >= v - u => best,
            _ => Some((u, v)),
        })
        .map(|(u, v)| Witness::Interval { start: u, end: v + g - 1 })
        .unwrap_or(Witness::Interval { start: 1, end: 0 });
    Ok(Certificate::new(Predicate::PiecewiseSyndetic, &scale, false, witness))
}

/// Whether gaps of length `n` occur syndetically in `S` at scale `N`.
///
/// Computes the least `M` such that every interval of length `M` inside
/// `[1, N]` contains `n` consecutive non-members. The verdict holds when such
/// gaps exist and `2M ≤ N`, i.e. the window holds at least two disjoint
/// intervals of the certified length; the witness then carries `M`. Otherwise
/// the witness is the longest stretch containing no gap of length `n`.
pub fn gap_syndeticity_table(set: &IntegerSetModel, bound: u64, n: u64) -> Result<Certificate> {
    if n == 0 || n > bound {
        return Err(Error::param(format!("gap table needs 1 ≤ n ≤ N (n = {n}, N = {bound})")));
    }
    let e = set.elements(bound)?;
    let scale = [("N", bound), ("n", n)];
    // Intervals of admissible gap starts.
    let starts: Vec<(u64, u64)> = nonmember_runs(&e, bound)
        .into_iter()
        .filter(|r| r.len() >= n)
        .map(|r| (r.start, r.end - n + 1))
        .collect();
    if starts.is_empty() {
        return Ok(Certificate::new(Predicate::GapSyndeticity, &scale, false, Witness::Stretch {
            start: 1,
            end: bound,
        }));
    }
    // Largest distance between consecutive starts, with sentinels 0 and N-n+2.
    let mut prev = 0u64;
    let mut widest = (0u64, starts[0].0);
    for &(lo, hi) in &starts {
        if lo - prev > widest.1 - widest.0 {
            widest = (prev, lo);
        }
        prev = hi;
    }
    let sentinel = bound - n + 2;
    if sentinel - prev > widest.1 - widest.0 {
        widest = (prev, sentinel);
    }
    let spacing = widest.1 - widest.0;
    let m = spacing + n - 1;
    if 2 * m <= bound {
        Ok(Certificate::new(Predicate::GapSyndeticity, &scale, true, Witness::Spacing {
            bound: m,
            first_start: starts[0].0,
        }))
    } else {
        Ok(Certificate::new(Predicate::GapSyndeticity, &scale, false, Witness::Stretch {
            start: widest.0 + 1,
            end: (widest.1 + n - 2).min(bound),
        }))
    }
}
