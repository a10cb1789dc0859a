//! Strictly ergodic interpolation for sets of zero upper Banach density.

use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::problem::InterpolationProblem;
use super::trace::{ConstructionKind, ConstructionTrace, Level, PartialWord, UNFILLED};
use crate::intsets::max_window_count;
use crate::words::SymbolWord;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErgodicConfig {
    pub levels: usize,
    pub level_cap: usize,
    pub sample_cap: usize,
    pub seed: u64,
}

impl Default for ErgodicConfig {
    fn default() -> Self {
        ErgodicConfig { levels: 2, level_cap: 3, sample_cap: 64, seed: 0 }
    }
}

fn schedule(problem: &InterpolationProblem, config: &ErgodicConfig) -> Result<Vec<Level>> {
    let k = problem.k();
    let bound = problem.bound();
    let elements = problem.set().elements(bound)?;
    let mut levels = vec![Level {
        m: 1,
        anchor: SymbolWord::from_trusted(k, vec![0]),
        samples: (0..k as u8).map(|s| SymbolWord::from_trusted(k, vec![s])).collect(),
        samples_capped: false,
        primed_anchor: None,
        primed_samples: Vec::new(),
        v: None,
    }];
    for lvl in 0..config.levels {
        let cur = &levels[lvl];
        let base = (2 * lvl as u64 + 2) * cur.m;
        let nt = cur.samples.len() as u64;
        let mut j = nt + 1;
        let m_next = loop {
            let m = base * j;
            if m > bound {
                return Err(Error::Construction {
                    level: lvl + 1,
                    reason: format!(
                        "no multiple of {base} up to {bound} has every window with density below 1/{base}"
                    ),
                });
            }
            let (count, _) = max_window_count(&elements, bound, m);
            if count * base < m {
                break m;
            }
            j += 1;
        };
        let r = (m_next / cur.m) as usize;
        let mut blocks: Vec<&SymbolWord> = vec![&cur.anchor];
        blocks.extend(&cur.samples);
        blocks.resize(r, &cur.anchor);
        let join = |bs: &[&SymbolWord]| {
            SymbolWord::from_trusted(k, bs.iter().flat_map(|b| b.symbols().iter().copied()).collect())
        };
        let anchor = join(&blocks);
        let mut next = Level {
            m: m_next,
            anchor,
            samples: Vec::new(),
            samples_capped: false,
            primed_anchor: None,
            primed_samples: Vec::new(),
            v: None,
        };
        if lvl + 1 < config.levels {
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ ((lvl as u64 + 1) << 32));
            let mut seen = HashSet::new();
            seen.insert(next.anchor.clone());
            let mut samples = vec![next.anchor.clone()];
            let mut order = blocks.clone();
            for _ in 0..config.sample_cap * 4 {
                if samples.len() >= config.sample_cap {
                    break;
                }
                order.shuffle(&mut rng);
                let w = join(&order);
                if seen.insert(w.clone()) {
                    samples.push(w);
                }
            }
            next.samples_capped = samples.len() >= config.sample_cap;
            next.samples = samples;
        }
        levels.push(next);
    }
    Ok(levels)
}

/// Builds `w_k` and a filling `x_u` agreeing with `f` on `S` in which every
/// level-`(k+1)` block holding part of `S` consists mostly of copies of `w_k`
/// and contains every sample of `T_k`.
pub fn strictly_ergodic_construct(problem: &InterpolationProblem, config: &ErgodicConfig) -> Result<ConstructionTrace> {
    if config.levels == 0 || config.levels > config.level_cap {
        return Err(Error::param(format!("levels must be in 1..={}", config.level_cap)));
    }
    if config.sample_cap == 0 {
        return Err(Error::param("sample cap must be positive"));
    }
    let levels = schedule(problem, config)?;
    let k = problem.k();
    let m_final = levels.last().expect("nonempty").m as usize;
    let coverage = problem.bound() as usize / m_final * m_final;
    let elements = problem.set().elements(coverage as u64)?;
    let mut history = vec![PartialWord { alphabet: k, cells: problem.seed_cells(coverage, UNFILLED) }];
    for lvl in 0..levels.len() - 1 {
        let cur = &levels[lvl];
        let m = cur.m as usize;
        let m_next = levels[lvl + 1].m as usize;
        let r = m_next / m;
        let keep = r - r / (lvl + 1);
        let mut block_hit = vec![false; coverage / m_next];
        for &e in &elements {
            block_hit[(e as usize - 1) / m_next] = true;
        }
        let mut x = history[lvl].clone();
        for (block, _) in block_hit.iter().enumerate().filter(|(_, &h)| h) {
            let base = block * m_next;
            let free: Vec<usize> = (0..r).filter(|&j| !x.any_filled(base + j * m, base + (j + 1) * m)).collect();
            if free.len() < keep + cur.samples.len() {
                return Err(Error::Construction {
                    level: lvl + 1,
                    reason: format!(
                        "block {} has {} free sub-blocks, needs {}",
                        block + 1,
                        free.len(),
                        keep + cur.samples.len()
                    ),
                });
            }
            for (i, &j) in free.iter().enumerate() {
                let w = if i < keep { &cur.anchor } else { &cur.samples[(i - keep) % cur.samples.len()] };
                x.cells[base + j * m..base + (j + 1) * m].copy_from_slice(w.symbols());
            }
        }
        history.push(x);
    }
    let mut result = history.last().expect("nonempty").cells.clone();
    let anchor = levels.last().expect("nonempty").anchor.symbols();
    for block in result.chunks_mut(m_final) {
        if block.contains(&UNFILLED) {
            block.copy_from_slice(anchor);
        }
    }
    Ok(ConstructionTrace {
        kind: ConstructionKind::StrictlyErgodic,
        alphabet: k,
        levels,
        filling_history: history,
        result: SymbolWord::new(k, result)?,
    })
}

/// Block statistics of a word read as level-`(level+1)` blocks of
/// level-`level` sub-blocks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BlockReport {
    pub level: usize,
    pub blocks: usize,
    /// Largest fraction of sub-blocks differing from `w_level` in one block.
    pub max_non_anchor_fraction: f64,
    /// Blocks where some sample of `T_level` is not an aligned sub-block.
    pub blocks_missing_samples: Vec<usize>,
}

impl BlockReport {
    pub fn holds(&self) -> bool {
        self.max_non_anchor_fraction <= 1.0 / (self.level as f64 + 1.0) && self.blocks_missing_samples.is_empty()
    }
}

pub fn block_report(word: &[u8], level: usize, trace: &ConstructionTrace) -> Result<BlockReport> {
    if level + 1 >= trace.levels.len() {
        return Err(Error::param(format!("block report needs level < {}", trace.levels.len() - 1)));
    }
    let lv = &trace.levels[level];
    let m = lv.m as usize;
    let m_next = trace.levels[level + 1].m as usize;
    let samples: HashSet<&[u8]> = lv.samples.iter().map(SymbolWord::symbols).collect();
    let mut report =
        BlockReport { level, blocks: word.len() / m_next, max_non_anchor_fraction: 0.0, blocks_missing_samples: Vec::new() };
    for (b, block) in word.chunks_exact(m_next).enumerate() {
        let subs: Vec<&[u8]> = block.chunks_exact(m).collect();
        let off = subs.iter().filter(|s| **s != lv.anchor.symbols()).count();
        report.max_non_anchor_fraction = report.max_non_anchor_fraction.max(off as f64 / subs.len() as f64);
        let present: HashSet<&[u8]> = subs.into_iter().collect();
        if !samples.is_subset(&present) {
            report.blocks_missing_samples.push(b);
        }
    }
    Ok(report)
}
