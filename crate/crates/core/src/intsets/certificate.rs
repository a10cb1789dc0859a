use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{gap_syndeticity_table, piecewise_syndetic_certificate, syndetic_certificate, thick_certificate};
use super::IntegerSetModel;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Predicate {
    Syndetic,
    Thick,
    PiecewiseSyndetic,
    GapSyndeticity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    HoldsAtScale,
    FailsAtScale,
}

impl Verdict {
    pub fn holds(self) -> bool {
        self == Verdict::HoldsAtScale
    }

    pub(crate) fn from_bool(b: bool) -> Self {
        if b {
            Verdict::HoldsAtScale
        } else {
            Verdict::FailsAtScale
        }
    }
}

/// Positions supporting a verdict. All bounds are inclusive integers of `ℕ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    /// Consecutive members `start < end` with nothing in between; `start = 0`
    /// marks the stretch before the first member.
    Gap { start: u64, end: u64 },
    /// `len` consecutive members beginning at `start`.
    Run { start: u64, len: u64 },
    /// A window `[start, end]`.
    Interval { start: u64, end: u64 },
    /// Every interval of length `bound` inside the window contains a gap.
    Spacing { bound: u64, first_start: u64 },
    /// A stretch `[start, end]` containing no gap of the required length.
    Stretch { start: u64, end: u64 },
}

/// A scale-tagged verdict for one of the set predicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub predicate: Predicate,
    pub scale: BTreeMap<String, u64>,
    pub verdict: Verdict,
    pub witness: Witness,
}

impl Certificate {
    pub(crate) fn new(predicate: Predicate, scale: &[(&str, u64)], holds: bool, witness: Witness) -> Self {
        Certificate {
            predicate,
            scale: scale.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            verdict: Verdict::from_bool(holds),
            witness,
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict.holds()
    }

    fn scale_value(&self, key: &str) -> Result<u64> {
        self.scale
            .get(key)
            .copied()
            .ok_or_else(|| Error::param(format!("certificate scale lacks {key}")))
    }

    /// Re-derives the verdict against `set`: local witnesses are checked
    /// directly, and the full certificate is recomputed from its scale.
    /// Returns whether both reproduce this certificate.
    pub fn replay(&self, set: &IntegerSetModel) -> Result<bool> {
        let n_bound = self.scale_value("N")?;
        let local = match (self.predicate, self.verdict, self.witness) {
            (Predicate::Syndetic, Verdict::FailsAtScale, Witness::Gap { start, end }) => {
                let g = self.scale_value("g")?;
                end <= n_bound
                    && end - start > g
                    && (start == 0 || set.contains(start)?)
                    && set.contains(end)?
                    && (start + 1..end).try_fold(true, |ok, n| Ok::<_, Error>(ok && !set.contains(n)?))?
            }
            (Predicate::Thick, Verdict::HoldsAtScale, Witness::Run { start, len }) => {
                len >= self.scale_value("L")?
                    && start + len - 1 <= n_bound
                    && (start..start + len).try_fold(true, |ok, n| Ok::<_, Error>(ok && set.contains(n)?))?
            }
            (Predicate::PiecewiseSyndetic, Verdict::HoldsAtScale, Witness::Interval { start, end }) => {
                let g = self.scale_value("g")?;
                let inside: Vec<u64> = set.elements(end)?.into_iter().filter(|&e| e >= start).collect();
                let mut prev = start - 1;
                let mut ok = end - start + 1 >= self.scale_value("L")?;
                for &e in &inside {
                    ok &= e - prev <= g;
                    prev = e;
                }
                ok && end + 1 - prev <= g
            }
            _ => true,
        };
        let recomputed = match self.predicate {
            Predicate::Syndetic => syndetic_certificate(set, n_bound, self.scale_value("g")?)?,
            Predicate::Thick => thick_certificate(set, n_bound, self.scale_value("L")?)?,
            Predicate::PiecewiseSyndetic => {
                piecewise_syndetic_certificate(set, n_bound, self.scale_value("g")?, self.scale_value("L")?)?
            }
            Predicate::GapSyndeticity => gap_syndeticity_table(set, n_bound, self.scale_value("n")?)?,
        };
        Ok(local && recomputed == *self)
    }
}
