use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::intsets::IntegerSetModel;
use crate::words::check_alphabet;
use crate::{Error, Result};

/// How the values of `f` on `S ∩ [1, N]` are given.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FunctionSpec {
    Pairs { pairs: Vec<(u64, u8)> },
    Random { seed: u64, distribution: Distribution },
    Constant { constant: u8 },
    /// The `i`-th element of `S` (from `0`) gets `i mod k`.
    Cyclic { cyclic: bool },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Distribution {
    Uniform,
}

/// A set `S`, an alphabet `{0, …, k−1}`, a window `[1, N]` and values of `f`
/// on exactly `S ∩ [1, N]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InterpolationProblem {
    set: IntegerSetModel,
    k: usize,
    bound: u64,
    pairs: Vec<(u64, u8)>,
}

impl InterpolationProblem {
    pub fn new(set: IntegerSetModel, k: usize, bound: u64, mut pairs: Vec<(u64, u8)>) -> Result<Self> {
        check_alphabet(k)?;
        let elements = set.elements(bound)?;
        pairs.sort_unstable_by_key(|p| p.0);
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::Domain("f assigns two values to one point".into()));
        }
        if let Some(&(_, v)) = pairs.iter().find(|p| p.1 as usize >= k) {
            return Err(Error::param(format!("value {v} outside alphabet of size {k}")));
        }
        let mut it = elements.iter().peekable();
        for &(s, _) in &pairs {
            while it.next_if(|&&e| e < s).is_some() {}
            if it.next_if(|&&e| e == s).is_none() {
                return Err(Error::Domain(format!("{s} is not in S ∩ [1, {bound}]")));
            }
        }
        if pairs.len() != elements.len() {
            let missing = elements.iter().find(|&&e| pairs.binary_search_by_key(&e, |p| p.0).is_err());
            return Err(Error::Domain(format!("f is undefined at {}", missing.expect("some element is missing"))));
        }
        Ok(InterpolationProblem { set, k, bound, pairs })
    }

    pub fn from_spec(set: IntegerSetModel, k: usize, bound: u64, f: &FunctionSpec) -> Result<Self> {
        match f {
            FunctionSpec::Pairs { pairs } => Self::new(set, k, bound, pairs.clone()),
            FunctionSpec::Random { seed, distribution: Distribution::Uniform } => Self::uniform(set, k, bound, *seed),
            FunctionSpec::Constant { constant } => Self::constant(set, k, bound, *constant),
            FunctionSpec::Cyclic { .. } => Self::cyclic(set, k, bound),
        }
    }

    pub fn uniform(set: IntegerSetModel, k: usize, bound: u64, seed: u64) -> Result<Self> {
        check_alphabet(k)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pairs = set.elements(bound)?.into_iter().map(|s| (s, rng.gen_range(0..k) as u8)).collect();
        Self::new(set, k, bound, pairs)
    }

    pub fn constant(set: IntegerSetModel, k: usize, bound: u64, value: u8) -> Result<Self> {
        let pairs = set.elements(bound)?.into_iter().map(|s| (s, value)).collect();
        Self::new(set, k, bound, pairs)
    }

    pub fn cyclic(set: IntegerSetModel, k: usize, bound: u64) -> Result<Self> {
        check_alphabet(k)?;
        let pairs = set.elements(bound)?.into_iter().enumerate().map(|(i, s)| (s, (i % k) as u8)).collect();
        Self::new(set, k, bound, pairs)
    }

    pub fn set(&self) -> &IntegerSetModel {
        &self.set
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn bound(&self) -> u64 {
        self.bound
    }

    /// `(s, f(s))` for `s ∈ S ∩ [1, N]`, ascending in `s`.
    pub fn pairs(&self) -> &[(u64, u8)] {
        &self.pairs
    }

    pub fn value_at(&self, s: u64) -> Option<u8> {
        self.pairs.binary_search_by_key(&s, |p| p.0).ok().map(|i| self.pairs[i].1)
    }

    /// `f` on `[1, len]` with every other cell unfilled, indexed by `n − 1`.
    pub(crate) fn seed_cells(&self, len: usize, unfilled: u8) -> Vec<u8> {
        let mut cells = vec![unfilled; len];
        for &(s, v) in self.pairs.iter().take_while(|p| p.0 <= len as u64) {
            cells[(s - 1) as usize] = v;
        }
        cells
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn domain_is_exactly_the_set() {
        let s = IntegerSetModel::powers(2).unwrap();
        assert!(InterpolationProblem::new(s.clone(), 2, 10, vec![(2, 1), (4, 0), (8, 1)]).is_ok());
        assert!(matches!(InterpolationProblem::new(s.clone(), 2, 10, vec![(2, 1), (4, 0)]), Err(Error::Domain(_))));
        assert!(matches!(
            InterpolationProblem::new(s.clone(), 2, 10, vec![(2, 1), (3, 0), (4, 0), (8, 1)]),
            Err(Error::Domain(_))
        ));
        assert!(InterpolationProblem::new(s, 2, 10, vec![(2, 2), (4, 0), (8, 1)]).is_err());
    }

    #[test]
    fn seeded_values_are_reproducible() {
        let s = IntegerSetModel::monomial(2).unwrap();
        let a = InterpolationProblem::uniform(s.clone(), 3, 10_000, 7).unwrap();
        let b = InterpolationProblem::uniform(s, 3, 10_000, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.pairs().len(), 100);
        assert!(a.pairs().iter().any(|p| p.1 == 2));
    }

    #[test]
    fn function_spec_json() {
        let f: FunctionSpec = serde_json::from_str(r#"{"seed": 7, "distribution": "uniform"}"#).unwrap();
        assert_eq!(f, FunctionSpec::Random { seed: 7, distribution: Distribution::Uniform });
        let f: FunctionSpec = serde_json::from_str(r#"{"pairs": [[2, 1]]}"#).unwrap();
        assert_eq!(f, FunctionSpec::Pairs { pairs: vec![(2, 1)] });
        let f: FunctionSpec = serde_json::from_str(r#"{"constant": 1}"#).unwrap();
        assert_eq!(f, FunctionSpec::Constant { constant: 1 });
    }
}
