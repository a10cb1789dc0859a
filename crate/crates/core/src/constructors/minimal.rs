//! Totally minimal interpolation for sets that are not piecewise syndetic.

use std::collections::{HashMap, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::problem::InterpolationProblem;
use super::trace::{ConstructionKind, ConstructionTrace, Level, PartialWord, UNFILLED};
use crate::intsets::{gap_syndeticity_table, Witness};
use crate::words::SymbolWord;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalConfig {
    pub levels: usize,
    pub level_cap: usize,
    pub sample_cap: usize,
    pub seed: u64,
}

impl Default for MinimalConfig {
    fn default() -> Self {
        MinimalConfig { levels: 2, level_cap: 3, sample_cap: 64, seed: 0 }
    }
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn concat<'a>(alphabet: usize, parts: impl IntoIterator<Item = &'a [u8]>) -> SymbolWord {
    SymbolWord::from_trusted(alphabet, parts.into_iter().flatten().copied().collect())
}

/// Samples `T_{k+1}` or `T'_{k+1}`: the anchor followed by seeded variants in
/// which the `w_k` filler blocks are replaced by elements of `T_k`.
#[allow(clippy::too_many_arguments)]
fn sample_family(
    alphabet: usize,
    head: &[u8],
    filler_blocks: usize,
    tail: &[u8],
    prev: &Level,
    cap: usize,
    modulus: usize,
    rng: &mut ChaCha8Rng,
) -> (Vec<SymbolWord>, bool) {
    let anchor = prev.anchor.symbols();
    let build = |blocks: &[&[u8]]| concat(alphabet, std::iter::once(head).chain(blocks.iter().copied()).chain([tail]));
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let first = build(&vec![anchor; filler_blocks]);
    seen.insert(first.clone());
    out.push(first);
    for _ in 0..cap * 4 {
        if out.len() >= cap {
            break;
        }
        let blocks: Vec<&[u8]> = (0..filler_blocks)
            .map(|_| prev.samples[rng.gen_range(0..prev.samples.len())].symbols())
            .collect();
        let w = build(&blocks);
        if seen.insert(w.clone()) {
            out.push(w);
        }
    }
    let capped = out.len() >= cap;
    out.truncate(out.len() / modulus * modulus);
    (out, capped)
}

struct Schedule {
    levels: Vec<Level>,
    /// `(pattern, sub-block count P)` used to fill each level above 0.
    terminals: Vec<(Vec<u8>, usize)>,
}

fn schedule(problem: &InterpolationProblem, config: &MinimalConfig) -> Result<Schedule> {
    let k = problem.k();
    let bound = problem.bound();
    let word = |s: Vec<u8>| SymbolWord::from_trusted(k, s);
    let t0: Vec<SymbolWord> = (0..k as u8).map(|s| word(vec![s])).collect();
    let tp0: Vec<SymbolWord> = (0..k as u8).flat_map(|a| (0..k as u8).map(move |b| vec![a, b])).map(word).collect();
    let mut levels = vec![Level {
        m: 1,
        anchor: word(vec![0]),
        samples: t0,
        samples_capped: false,
        primed_anchor: None,
        v: Some(tp0[0].clone()),
        primed_samples: tp0,
    }];
    let mut terminals = Vec::new();
    for lvl in 0..config.levels {
        let cur = &levels[lvl];
        let m = cur.m;
        let (nt, ntp) = (cur.samples.len() as u64, cur.primed_samples.len() as u64);
        let v = cur.v.clone().expect("every non-final level has v");
        let pattern: Vec<u8> = cur
            .samples
            .iter()
            .chain(&cur.primed_samples)
            .chain(std::iter::once(&v))
            .flat_map(|w| w.symbols().iter().copied())
            .collect();
        let p = m * nt + (m + 1) * (ntp + 1);
        debug_assert_eq!(pattern.len() as u64, p);
        let gap = 4 * m * m * (nt + ntp);
        let fail = |reason: String| Error::Construction { level: lvl + 1, reason };
        if gap > bound {
            return Err(fail(format!("needs gaps of length {gap}, longer than the window [1, {bound}]")));
        }
        let cert = gap_syndeticity_table(problem.set(), bound, gap)?;
        let spacing = match (cert.holds(), cert.witness) {
            (true, Witness::Spacing { bound: s, .. }) => s,
            _ => {
                return Err(fail(format!("gaps of length {gap} do not occur syndetically in [1, {bound}]")));
            }
        };
        let step = m * factorial(lvl + 1);
        let lower = spacing.max(m * p + m);
        let m_next = lower.div_ceil(step) * step;
        if m_next > bound {
            return Err(fail(format!("block length {m_next} exceeds the window [1, {bound}]")));
        }
        let fillers = ((m_next - m * p) / m) as usize;
        let terminal: Vec<u8> = pattern.iter().copied().cycle().take((m * p) as usize).collect();
        let anchor = cur.anchor.symbols();
        let w_next = concat(k, std::iter::repeat_n(anchor, fillers).chain([terminal.as_slice()]));
        let wp_next = concat(
            k,
            std::iter::once(v.symbols()).chain(std::iter::repeat_n(anchor, fillers - 1)).chain([terminal.as_slice()]),
        );
        let mut next = Level {
            m: m_next,
            anchor: w_next,
            samples: Vec::new(),
            samples_capped: false,
            primed_anchor: Some(wp_next),
            primed_samples: Vec::new(),
            v: None,
        };
        if lvl + 1 < config.levels {
            let modulus = factorial(lvl + 1) as usize;
            let mut rng = ChaCha8Rng::seed_from_u64(config.seed ^ ((lvl as u64 + 1) << 32));
            let (t, capped) = sample_family(k, &[], fillers, &terminal, cur, config.sample_cap, modulus, &mut rng);
            let (tp, capped_p) =
                sample_family(k, v.symbols(), fillers - 1, &terminal, cur, config.sample_cap, modulus, &mut rng);
            if t.is_empty() || tp.is_empty() {
                return Err(fail("sample families are empty after divisibility truncation".into()));
            }
            next.samples = t;
            next.samples_capped = capped || capped_p;
            next.v = tp.iter().min().cloned();
            next.primed_samples = tp;
        }
        terminals.push((pattern.iter().copied().cycle().take((m * p) as usize).collect(), p as usize));
        levels.push(next);
    }
    Ok(Schedule { levels, terminals })
}

/// Builds the level words `w_k` and a filling `x_u` agreeing with `f` on `S`.
///
/// Every level needs gaps of a prescribed length to occur syndetically in the
/// window; when they do not, the error names the level that failed.
pub fn totally_minimal_construct(problem: &InterpolationProblem, config: &MinimalConfig) -> Result<ConstructionTrace> {
    if config.levels == 0 || config.levels > config.level_cap {
        return Err(Error::param(format!("levels must be in 1..={}", config.level_cap)));
    }
    if config.sample_cap == 0 {
        return Err(Error::param("sample cap must be positive"));
    }
    let Schedule { levels, terminals } = schedule(problem, config)?;
    let k = problem.k();
    let m_final = levels.last().expect("nonempty").m as usize;
    let coverage = problem.bound() as usize / m_final * m_final;
    let elements = problem.set().elements(coverage as u64)?;
    let mut history = vec![PartialWord { alphabet: k, cells: problem.seed_cells(coverage, UNFILLED) }];
    for lvl in 0..levels.len() - 1 {
        let m = levels[lvl].m as usize;
        let m_next = levels[lvl + 1].m as usize;
        let r = m_next / m;
        let (terminal, p) = &terminals[lvl];
        let mut sub_hit = vec![false; coverage / m];
        for &e in &elements {
            sub_hit[(e as usize - 1) / m] = true;
        }
        let mut x = history[lvl].clone();
        for block in 0..coverage / m_next {
            let subs = &sub_hit[block * r..(block + 1) * r];
            if !subs.contains(&true) {
                continue;
            }
            let mut run = 0;
            let start = subs.iter().position(|&h| {
                run = if h { 0 } else { run + 1 };
                run == *p
            });
            let Some(end) = start else {
                return Err(Error::Construction {
                    level: lvl + 1,
                    reason: format!("block {} has no {p} consecutive free sub-blocks of length {m}", block + 1),
                });
            };
            let j0 = end + 1 - p;
            let base = block * m_next;
            x.cells[base + j0 * m..base + (j0 + p) * m].copy_from_slice(terminal);
            for (j, &h) in subs.iter().enumerate() {
                if !h && !(j0..j0 + p).contains(&j) {
                    x.cells[base + j * m..base + (j + 1) * m].copy_from_slice(levels[lvl].anchor.symbols());
                }
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
        kind: ConstructionKind::TotallyMinimal,
        alphabet: k,
        levels,
        filling_history: history,
        result: SymbolWord::new(k, result)?,
    })
}

/// Fixed-width set of (sample, residue) pairs.
type Cover = Vec<u64>;

fn insert_maximal(antichain: &mut Vec<Cover>, c: Cover) {
    let subset = |a: &Cover, b: &Cover| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    if antichain.iter().any(|old| subset(&c, old)) {
        return;
    }
    antichain.retain(|old| !subset(old, &c));
    antichain.push(c);
}

/// Decides membership in the level sets of a totally minimal construction.
///
/// A word of length `m_L` or `m_L + 1` is a member at level `L ≥ 1` when it
/// splits into level-`(L−1)` members of lengths `m_{L−1}` and `m_{L−1} + 1`
/// such that, for every residue `i mod (L−1)!`, every sampled element of
/// `T_{L−1}` and `T'_{L−1}` occurs as a piece starting at a position `≡ i`.
/// At level 0 every word of length 1 or 2 is a member. Results below the
/// final level are cached by content.
pub struct MembershipOracle<'a> {
    trace: &'a ConstructionTrace,
    index: Vec<HashMap<&'a [u8], usize>>,
    cache: Vec<HashMap<Vec<u8>, bool>>,
}

impl<'a> MembershipOracle<'a> {
    pub fn new(trace: &'a ConstructionTrace) -> Self {
        let mut index = vec![HashMap::new()];
        for lv in &trace.levels[..trace.levels.len() - 1] {
            let map = lv.samples.iter().chain(&lv.primed_samples).enumerate().map(|(i, w)| (w.symbols(), i)).collect();
            index.push(map);
        }
        MembershipOracle { trace, index, cache: vec![HashMap::new(); trace.levels.len()] }
    }

    pub fn is_member(&mut self, w: &[u8], level: usize) -> Result<bool> {
        let levels = &self.trace.levels;
        let Some(lv) = levels.get(level) else {
            return Err(Error::param(format!("level {level} exceeds the trace's final level {}", levels.len() - 1)));
        };
        let m = lv.m as usize;
        if w.len() != m && w.len() != m + 1 {
            return Err(Error::param(format!("word length {} is neither m_{level} = {m} nor {}", w.len(), m + 1)));
        }
        if w.iter().any(|&s| s as usize >= self.trace.alphabet) {
            return Ok(false);
        }
        if level == 0 {
            return Ok(true);
        }
        let cached = level < levels.len() - 1;
        if cached {
            if let Some(&hit) = self.cache[level].get(w) {
                return Ok(hit);
            }
        }
        let verdict = self.decompose(w, level)?;
        if cached {
            self.cache[level].insert(w.to_vec(), verdict);
        }
        Ok(verdict)
    }

    fn decompose(&mut self, w: &[u8], level: usize) -> Result<bool> {
        let sub = &self.trace.levels[level - 1];
        let a = sub.m as usize;
        let b = a + 1;
        let residues = factorial(level - 1) as usize;
        let elems = sub.samples.len() + sub.primed_samples.len();
        let bits = elems * residues;
        let width = bits.div_ceil(64);
        let mut full: Cover = vec![u64::MAX; width];
        if !bits.is_multiple_of(64) {
            full[width - 1] = (1u64 << (bits % 64)) - 1;
        }
        let ring = b + 1;
        let mut states: Vec<Vec<Cover>> = vec![Vec::new(); ring];
        states[0].push(vec![0; width]);
        for p in 1..=w.len() {
            let mut cur: Vec<Cover> = Vec::new();
            for len in [a, b] {
                if p < len || states[(p - len) % ring].is_empty() {
                    continue;
                }
                let s = p - len;
                let piece = &w[s..p];
                let elem = self.index[level].get(piece).copied();
                if elem.is_none() && !self.is_member(piece, level - 1)? {
                    continue;
                }
                for c in &states[s % ring] {
                    let mut c2 = c.clone();
                    if let Some(e) = elem {
                        let bit = e * residues + s % residues;
                        c2[bit / 64] |= 1 << (bit % 64);
                    }
                    insert_maximal(&mut cur, c2);
                }
            }
            states[p % ring] = cur;
        }
        Ok(states[w.len() % ring].contains(&full))
    }
}

/// Membership of `w` at `level` with a fresh oracle.
pub fn is_member_level(w: &SymbolWord, level: usize, trace: &ConstructionTrace) -> Result<bool> {
    MembershipOracle::new(trace).is_member(w.symbols(), level)
}

/// Removes every occurrence of one seeded sample of `T_{level−1} ∪ T'_{level−1}`
/// from `w`, advancing the first symbol of each occurrence modulo `k` until
/// none is left. Each change lowers the count of that symbol, so this ends.
///
/// Returns the mutated word and the removed sample.
pub fn mutation_fault(
    w: &SymbolWord,
    level: usize,
    trace: &ConstructionTrace,
    seed: u64,
) -> Result<(SymbolWord, SymbolWord)> {
    if level == 0 || level >= trace.levels.len() {
        return Err(Error::param(format!("mutation level must be in 1..={}", trace.levels.len() - 1)));
    }
    let sub = &trace.levels[level - 1];
    let pool: Vec<&SymbolWord> = sub.samples.iter().chain(&sub.primed_samples).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = pool[rng.gen_range(0..pool.len())].clone();
    let e = target.symbols();
    if trace.alphabet < 2 {
        return Err(Error::param("mutation needs at least two symbols"));
    }
    let k = trace.alphabet as u8;
    let mut cells = w.symbols().to_vec();
    let mut i = 0;
    while i + e.len() <= cells.len() {
        if cells[i..i + e.len()] == *e {
            cells[i] = (cells[i] + 1) % k;
            // An occurrence can only reappear starting at or before i.
            i = i.saturating_sub(e.len());
        } else {
            i += 1;
        }
    }
    Ok((SymbolWord::new(trace.alphabet, cells)?, target))
}
