//! Finite words, factor languages and word complexity.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::rational::{ceil_mul, Rational};
use crate::{Error, Result};

/// Symbols are stored as bytes; one byte value is reserved for unfilled cells
/// of partial words.
pub const MAX_ALPHABET: usize = 255;

/// A finite word over `{0, …, k−1}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymbolWord {
    alphabet: usize,
    symbols: Vec<u8>,
}

impl SymbolWord {
    pub fn new(alphabet: usize, symbols: Vec<u8>) -> Result<Self> {
        check_alphabet(alphabet)?;
        if let Some(bad) = symbols.iter().find(|&&s| s as usize >= alphabet) {
            return Err(Error::param(format!("symbol {bad} outside alphabet of size {alphabet}")));
        }
        Ok(SymbolWord { alphabet, symbols })
    }

    pub(crate) fn from_trusted(alphabet: usize, symbols: Vec<u8>) -> Self {
        debug_assert!(symbols.iter().all(|&s| (s as usize) < alphabet));
        SymbolWord { alphabet, symbols }
    }

    pub fn zeros(alphabet: usize, len: usize) -> Result<Self> {
        check_alphabet(alphabet)?;
        Ok(SymbolWord { alphabet, symbols: vec![0; len] })
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<u8> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Value at integer `n ≥ 1` when the word is read as a sequence prefix.
    pub fn at(&self, n: u64) -> Option<u8> {
        n.checked_sub(1).and_then(|i| self.symbols.get(i as usize).copied())
    }

    pub fn prefix(&self, len: usize) -> SymbolWord {
        SymbolWord { alphabet: self.alphabet, symbols: self.symbols[..len.min(self.len())].to_vec() }
    }
}

impl fmt::Debug for SymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SymbolWord(k={}, ", self.alphabet)?;
        if self.len() <= 64 {
            write!(f, "{})", render(&self.symbols, self.alphabet))
        } else {
            write!(f, "{}… len={})", render(&self.symbols[..64], self.alphabet), self.len())
        }
    }
}

impl fmt::Display for SymbolWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.symbols, self.alphabet))
    }
}

/// Decimal digits for alphabets up to 10, comma-separated integers above.
pub(crate) fn render(symbols: &[u8], alphabet: usize) -> String {
    if alphabet <= 10 {
        symbols.iter().map(|&s| char::from(b'0' + s)).collect()
    } else {
        symbols.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
    }
}

pub(crate) fn check_alphabet(alphabet: usize) -> Result<()> {
    if alphabet == 0 || alphabet > MAX_ALPHABET {
        return Err(Error::param(format!("alphabet size must be in 1..={MAX_ALPHABET}, got {alphabet}")));
    }
    Ok(())
}

fn check_len(w: &SymbolWord, n: usize) -> Result<()> {
    if n > w.len() {
        return Err(Error::OutOfRange { n, len: w.len() });
    }
    Ok(())
}

/// Distinct length-`n` factors in lexicographic order.
pub fn factors(w: &SymbolWord, n: usize) -> Result<Vec<SymbolWord>> {
    check_len(w, n)?;
    let mut set: Vec<&[u8]> = w.symbols.windows(n.max(1)).collect();
    if n == 0 {
        return Ok(vec![SymbolWord::from_trusted(w.alphabet, Vec::new())]);
    }
    set.sort_unstable();
    set.dedup();
    Ok(set.into_iter().map(|s| SymbolWord::from_trusted(w.alphabet, s.to_vec())).collect())
}

/// Number of distinct length-`n` factors, `p(n)`.
///
/// Factors are packed into machine words with a rolling key when they fit in
/// 128 bits and hashed as slices otherwise.
pub fn count_factors(w: &SymbolWord, n: usize) -> Result<u64> {
    check_len(w, n)?;
    if n == 0 {
        return Ok(1);
    }
    let bits = (usize::BITS - (w.alphabet.max(2) - 1).leading_zeros()) as usize;
    let syms = &w.symbols;
    if n * bits <= 64 {
        let mask = if n * bits == 64 { u64::MAX } else { (1u64 << (n * bits)) - 1 };
        let mut key = 0u64;
        let mut seen = HashSet::with_capacity(syms.len());
        for (i, &s) in syms.iter().enumerate() {
            key = ((key << bits) | s as u64) & mask;
            if i + 1 >= n {
                seen.insert(key);
            }
        }
        Ok(seen.len() as u64)
    } else if n * bits <= 128 {
        let mask = if n * bits == 128 { u128::MAX } else { (1u128 << (n * bits)) - 1 };
        let mut key = 0u128;
        let mut seen = HashSet::with_capacity(syms.len());
        for (i, &s) in syms.iter().enumerate() {
            key = ((key << bits) | s as u128) & mask;
            if i + 1 >= n {
                seen.insert(key);
            }
        }
        Ok(seen.len() as u64)
    } else {
        Ok(syms.windows(n).collect::<HashSet<_>>().len() as u64)
    }
}

/// Word complexity `p(n)` for `n = 1..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexityProfile {
    pub alphabet: usize,
    pub word_len: usize,
    /// `counts[n-1] = p(n)`.
    pub counts: Vec<u64>,
}

impl ComplexityProfile {
    pub fn n_max(&self) -> usize {
        self.counts.len()
    }

    pub fn p(&self, n: usize) -> Option<u64> {
        n.checked_sub(1).and_then(|i| self.counts.get(i).copied())
    }

    /// `log p(n) / n`.
    pub fn h_est(&self, n: usize) -> Option<f64> {
        self.p(n).map(|p| (p as f64).ln() / n as f64)
    }
}

/// Complexity profile with the default cap `n_max ≤ |w|/2`, which keeps the
/// counts representative of the infinite sequence rather than the prefix.
pub fn complexity_profile(w: &SymbolWord, n_max: usize) -> Result<ComplexityProfile> {
    if n_max > w.len() / 2 {
        return Err(Error::param(format!("n_max = {n_max} exceeds half the word length {}", w.len())));
    }
    complexity_profile_uncapped(w, n_max)
}

pub fn complexity_profile_uncapped(w: &SymbolWord, n_max: usize) -> Result<ComplexityProfile> {
    check_len(w, n_max)?;
    let counts = (1..=n_max).map(|n| count_factors(w, n)).collect::<Result<Vec<_>>>()?;
    Ok(ComplexityProfile { alphabet: w.alphabet, word_len: w.len(), counts })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EntropyEstimate {
    /// `log p(n_max) / n_max`.
    pub at_max: f64,
    /// `min_n log p(n) / n` over the computed range.
    pub infimum: f64,
    pub argmin: usize,
}

pub fn entropy_estimate(profile: &ComplexityProfile) -> Result<EntropyEstimate> {
    if profile.counts.is_empty() {
        return Err(Error::param("entropy estimate needs a nonempty profile"));
    }
    let n_max = profile.n_max();
    let at_max = profile.h_est(n_max).expect("nonempty");
    let (argmin, infimum) = (1..=n_max)
        .map(|n| (n, profile.h_est(n).expect("in range")))
        .fold((n_max, at_max), |best, cur| if cur.1 < best.1 { cur } else { best });
    Ok(EntropyEstimate { at_max, infimum, argmin })
}

/// Indicator of `{⌊j/δ⌋ : j ≥ 1}` on `1..=len`, for `0 < δ ≤ 1/2`:
/// `w(n) = ⌈(n+1)δ⌉ − ⌈nδ⌉`.
pub fn mechanical_word(delta: Rational, len: usize) -> Result<SymbolWord> {
    if *delta.numer() == 0 || delta > Rational::new(1, 2) {
        return Err(Error::param(format!("rotation number {delta} outside (0, 1/2]")));
    }
    let symbols = (1..=len as u64)
        .map(|n| (ceil_mul(delta, n + 1) - ceil_mul(delta, n)) as u8)
        .collect();
    Ok(SymbolWord::from_trusted(2, symbols))
}

/// A word containing every word of length `≤ L` over `{0, …, k−1}`: the
/// linearized de Bruijn sequence of order `L`, of length `k^L + L − 1`.
pub fn universal_word(k: usize, order: usize) -> Result<SymbolWord> {
    check_alphabet(k)?;
    if order == 0 {
        return Err(Error::param("universal word order must be at least 1"));
    }
    let total = (k as u128).checked_pow(order as u32).filter(|&t| t <= 1 << 28);
    if total.is_none() {
        return Err(Error::param(format!("k^L too large for k = {k}, L = {order}")));
    }
    let mut seq = Vec::new();
    if k == 1 {
        seq.push(0);
    } else {
        // Lyndon words of length dividing `order`, in lexicographic order.
        let mut a = vec![0u8; order + 1];
        de_bruijn(1, 1, k as u8, order, &mut a, &mut seq);
    }
    let wrap: Vec<u8> = seq.iter().cycle().take(order - 1).copied().collect();
    seq.extend(wrap);
    Ok(SymbolWord::from_trusted(k, seq))
}

fn de_bruijn(t: usize, p: usize, k: u8, n: usize, a: &mut [u8], out: &mut Vec<u8>) {
    if t > n {
        if n.is_multiple_of(p) {
            out.extend_from_slice(&a[1..=p]);
        }
        return;
    }
    a[t] = a[t - p];
    de_bruijn(t + 1, p, k, n, a, out);
    for j in a[t - p] + 1..k {
        a[t] = j;
        de_bruijn(t + 1, t, k, n, a, out);
    }
}

/// Whether any two length-`n` factors have symbol sums differing by at most one.
pub fn is_balanced(w: &SymbolWord, n: usize) -> Result<bool> {
    check_len(w, n)?;
    if n == 0 {
        return Ok(true);
    }
    let mut sum: u64 = w.symbols[..n].iter().map(|&s| s as u64).sum();
    let (mut lo, mut hi) = (sum, sum);
    for i in n..w.len() {
        sum = sum + w.symbols[i] as u64 - w.symbols[i - n] as u64;
        lo = lo.min(sum);
        hi = hi.max(sum);
    }
    Ok(hi - lo <= 1)
}

/// Maximum number of nonzero symbols in a length-`n` factor.
pub fn max_weight(w: &SymbolWord, n: usize) -> Result<usize> {
    check_len(w, n)?;
    if n == 0 {
        return Ok(0);
    }
    let nz = |s: u8| usize::from(s != 0);
    let mut cur: usize = w.symbols[..n].iter().map(|&s| nz(s)).sum();
    let mut best = cur;
    for i in n..w.len() {
        cur = cur + nz(w.symbols[i]) - nz(w.symbols[i - n]);
        best = best.max(cur);
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ContinuedFraction;

    fn word(k: usize, s: &str) -> SymbolWord {
        SymbolWord::new(k, s.bytes().map(|b| b - b'0').collect()).unwrap()
    }

    #[test]
    fn periodic_factors() {
        let w = word(2, &"01".repeat(10));
        let f = factors(&w, 3).unwrap();
        assert_eq!(f, vec![word(2, "010"), word(2, "101")]);
        assert_eq!(count_factors(&w, 3).unwrap(), 2);
    }

    #[test]
    fn all_triples_concatenated() {
        let mut s = String::new();
        for v in 0..8u8 {
            s.push_str(&format!("{:03b}", v));
        }
        let w = word(2, &s);
        assert_eq!(w.len(), 24);
        assert_eq!(count_factors(&w, 3).unwrap(), 8);
    }

    #[test]
    fn constant_word() {
        let w = SymbolWord::zeros(3, 40).unwrap();
        for m in 1..=40 {
            assert_eq!(count_factors(&w, m).unwrap(), 1);
        }
    }

    #[test]
    fn factor_length_out_of_range() {
        let w = word(2, "0101");
        assert_eq!(factors(&w, 5), Err(Error::OutOfRange { n: 5, len: 4 }));
        assert!(count_factors(&w, 5).is_err());
    }

    #[test]
    fn counting_paths_agree() {
        // k = 200 forces the slice-hash path for n ≥ 17.
        let syms: Vec<u8> = (0..3000u32).map(|i| ((i * 7919 + i / 13) % 200) as u8).collect();
        let w = SymbolWord::new(200, syms).unwrap();
        for n in [1, 5, 8, 16, 17, 30] {
            assert_eq!(count_factors(&w, n).unwrap(), factors(&w, n).unwrap().len() as u64, "n = {n}");
        }
    }

    #[test]
    fn mechanical_examples() {
        assert_eq!(mechanical_word(Rational::new(1, 2), 8).unwrap(), word(2, "01010101"));
        // {⌊5j/2⌋} = {2, 5, 7, 10, …}
        assert_eq!(mechanical_word(Rational::new(2, 5), 10).unwrap(), word(2, "0100101001"));
        assert!(mechanical_word(Rational::new(3, 5), 10).is_err());
        assert!(mechanical_word(Rational::new(0, 1), 10).is_err());
    }

    #[test]
    fn sturmian_weight_bound() {
        let d = ContinuedFraction::sqrt2_minus_one(12).value();
        let w = mechanical_word(d, 5000).unwrap();
        assert!(max_weight(&w, 20).unwrap() <= 9);
        assert!(is_balanced(&w, 20).unwrap());
    }

    #[test]
    fn universal_words() {
        let w = universal_word(2, 1).unwrap();
        assert_eq!(count_factors(&w, 1).unwrap(), 2);
        let w = universal_word(2, 3).unwrap();
        assert_eq!(w.len(), 10);
        assert_eq!(count_factors(&w, 3).unwrap(), 8);
        let w = universal_word(3, 2).unwrap();
        assert_eq!(count_factors(&w, 2).unwrap(), 9);
        assert_eq!(universal_word(1, 4).unwrap(), SymbolWord::zeros(1, 4).unwrap());
    }

    #[test]
    fn entropy_of_periodic_and_universal() {
        let w = word(2, &"0011".repeat(50));
        let e = entropy_estimate(&complexity_profile(&w, 40).unwrap()).unwrap();
        assert!((e.at_max - (4f64).ln() / 40.0).abs() < 1e-12);
        let u = universal_word(2, 12).unwrap();
        let prof = complexity_profile(&u, 12).unwrap();
        for n in 1..=12 {
            assert_eq!(prof.p(n), Some(1 << n));
        }
        let e = entropy_estimate(&prof).unwrap();
        assert!((e.at_max - 2f64.ln()).abs() < 1e-12);
        assert!(e.infimum <= e.at_max);
    }

    #[test]
    fn profile_cap() {
        let w = word(2, "0101");
        assert!(complexity_profile(&w, 3).is_err());
        assert!(complexity_profile_uncapped(&w, 3).is_ok());
    }
}
