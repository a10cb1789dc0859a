//! Subsets of `ℕ = {1, 2, …}`, their combinatorial certificates and upper
//! Banach density profiles.

mod certificate;
mod density;
mod predicates;
mod spec;

pub use certificate::{Certificate, Predicate, Verdict, Witness};
pub use density::{banach_density_at, banach_density_profile, max_window_count, DensityPoint, DensityProfile};
pub use predicates::{
    gap_sequence, gap_syndeticity_table, longest_gap, piecewise_syndetic_certificate, syndetic_certificate,
    thick_certificate, Gap,
};

use serde::{Deserialize, Serialize};

use crate::rational::{ceil_mul, ContinuedFraction, Rational};
use crate::{Error, Result};

/// Window bound reported for closed-form generators, whose membership is
/// decidable everywhere that fits comfortably in `u64` arithmetic.
pub const GENERATOR_WINDOW: u64 = 1 << 40;

/// How a set is generated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SetKind {
    /// Explicit ascending elements, known only up to the model's window.
    ExplicitWindow { elements: Vec<u64> },
    /// `{n ≥ 1 : n ≡ residue (mod modulus)}`.
    ArithmeticProgression { modulus: u64, residue: u64 },
    /// `{base^j : j ≥ 1}`.
    LacunaryPowers { base: u64 },
    /// `{j^exponent : j ≥ 1}`.
    Monomial { exponent: u32 },
    /// `{⌊j/δ⌋ : j ≥ 1}` for the exact value of a continued-fraction truncation.
    SturmianFloor { cf: ContinuedFraction },
    Union { parts: Vec<SetKind> },
    /// `{s + offset : s ∈ inner} ∩ ℕ`.
    Shift { inner: Box<SetKind>, offset: i64 },
    /// Sums of at most `depth` distinct generators.
    FiniteSums { generators: Vec<u64>, depth: usize },
}

/// A subset of `ℕ` together with the largest integer up to which its
/// membership is materialized.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntegerSetModel {
    kind: SetKind,
    window_bound: u64,
}

impl IntegerSetModel {
    pub fn new(kind: SetKind) -> Result<Self> {
        kind.validate()?;
        let window_bound = kind.natural_window();
        Ok(IntegerSetModel { kind, window_bound })
    }

    /// Explicit set materialized on `[1, window]`; elements above the window are rejected.
    pub fn explicit(elements: impl IntoIterator<Item = u64>, window: u64) -> Result<Self> {
        let mut elements: Vec<u64> = elements.into_iter().collect();
        elements.sort_unstable();
        elements.dedup();
        if elements.first() == Some(&0) {
            return Err(Error::param("0 is not an element of ℕ"));
        }
        if let Some(&last) = elements.last() {
            if last > window {
                return Err(Error::param(format!("element {last} lies above the window {window}")));
            }
        }
        Ok(IntegerSetModel { kind: SetKind::ExplicitWindow { elements }, window_bound: window })
    }

    pub fn arithmetic(modulus: u64, residue: u64) -> Result<Self> {
        Self::new(SetKind::ArithmeticProgression { modulus, residue })
    }

    pub fn powers(base: u64) -> Result<Self> {
        Self::new(SetKind::LacunaryPowers { base })
    }

    pub fn monomial(exponent: u32) -> Result<Self> {
        Self::new(SetKind::Monomial { exponent })
    }

    pub fn sturmian(cf: ContinuedFraction) -> Result<Self> {
        Self::new(SetKind::SturmianFloor { cf })
    }

    pub fn naturals() -> Self {
        Self::arithmetic(1, 0).expect("valid progression")
    }

    pub fn union(parts: Vec<IntegerSetModel>) -> Result<Self> {
        let window_bound = parts.iter().map(|p| p.window_bound).min().unwrap_or(GENERATOR_WINDOW);
        let kind = SetKind::Union { parts: parts.into_iter().map(|p| p.kind).collect() };
        kind.validate()?;
        Ok(IntegerSetModel { kind, window_bound })
    }

    pub fn shift(self, offset: i64) -> Result<Self> {
        let window_bound = if offset >= 0 {
            self.window_bound.saturating_add(offset as u64)
        } else {
            self.window_bound.saturating_sub(offset.unsigned_abs())
        };
        Ok(IntegerSetModel { kind: SetKind::Shift { inner: Box::new(self.kind), offset }, window_bound })
    }

    pub fn finite_sums(generators: Vec<u64>, depth: usize) -> Result<Self> {
        Self::new(SetKind::FiniteSums { generators, depth })
    }

    /// The complement in `ℕ`, materialized on `[1, bound]`.
    pub fn complement(&self, bound: u64) -> Result<Self> {
        let members = self.elements(bound)?;
        let mut it = members.iter().peekable();
        let mut out = Vec::new();
        for n in 1..=bound {
            if it.peek() == Some(&&n) {
                it.next();
            } else {
                out.push(n);
            }
        }
        Self::explicit(out, bound)
    }

    pub fn kind(&self) -> &SetKind {
        &self.kind
    }

    pub fn window_bound(&self) -> u64 {
        self.window_bound
    }

    pub(crate) fn check_bound(&self, bound: u64) -> Result<()> {
        if bound > self.window_bound {
            return Err(Error::WindowExceeded { requested: bound, window: self.window_bound });
        }
        Ok(())
    }

    /// Membership of `n`; `0` is never a member.
    pub fn contains(&self, n: u64) -> Result<bool> {
        self.check_bound(n)?;
        Ok(n >= 1 && self.kind.contains(n))
    }

    /// Ascending elements of `S ∩ [1, bound]`.
    pub fn elements(&self, bound: u64) -> Result<Vec<u64>> {
        self.check_bound(bound)?;
        Ok(self.kind.elements(bound))
    }

    /// `S ∩ [1, bound]` as an indicator indexed by `n − 1`.
    pub fn indicator(&self, bound: u64) -> Result<Vec<bool>> {
        let mut ind = vec![false; bound as usize];
        for e in self.elements(bound)? {
            ind[(e - 1) as usize] = true;
        }
        Ok(ind)
    }

    /// Upper Banach density, where the generator admits a closed form.
    pub fn exact_density(&self) -> Option<Rational> {
        self.kind.exact_density()
    }

    /// Canonical text form in the generator grammar.
    pub fn to_spec_string(&self) -> String {
        let mut s = self.kind.to_spec_string();
        if matches!(self.kind, SetKind::ExplicitWindow { .. }) {
            s.push_str(&format!(" window={}", self.window_bound));
        }
        s
    }
}

impl SetKind {
    fn validate(&self) -> Result<()> {
        match self {
            SetKind::ExplicitWindow { elements } => {
                if elements.windows(2).any(|w| w[0] >= w[1]) || elements.first() == Some(&0) {
                    return Err(Error::param("explicit elements must be positive and strictly ascending"));
                }
            }
            SetKind::ArithmeticProgression { modulus, .. } => {
                if *modulus == 0 {
                    return Err(Error::param("progression modulus must be positive"));
                }
            }
            SetKind::LacunaryPowers { base } => {
                if *base < 2 {
                    return Err(Error::param("power base must be at least 2"));
                }
            }
            SetKind::Monomial { exponent } => {
                if *exponent == 0 {
                    return Err(Error::param("monomial exponent must be positive"));
                }
            }
            SetKind::SturmianFloor { cf } => {
                let d = cf.value();
                if *d.numer() == 0 || d > Rational::from_integer(1) {
                    return Err(Error::param("rotation number must lie in (0, 1]"));
                }
            }
            SetKind::Union { parts } => {
                for p in parts {
                    p.validate()?;
                }
            }
            SetKind::Shift { inner, .. } => inner.validate()?,
            SetKind::FiniteSums { generators, .. } => {
                if generators.windows(2).any(|w| w[0] >= w[1]) || generators.first() == Some(&0) {
                    return Err(Error::param("generators must be positive and strictly ascending"));
                }
            }
        }
        Ok(())
    }

    fn natural_window(&self) -> u64 {
        match self {
            SetKind::ExplicitWindow { elements } => elements.last().copied().unwrap_or(0),
            SetKind::Union { parts } => parts.iter().map(SetKind::natural_window).min().unwrap_or(GENERATOR_WINDOW),
            SetKind::Shift { inner, offset } => {
                let w = inner.natural_window();
                if *offset >= 0 {
                    w.saturating_add(*offset as u64)
                } else {
                    w.saturating_sub(offset.unsigned_abs())
                }
            }
            _ => GENERATOR_WINDOW,
        }
    }

    fn contains(&self, n: u64) -> bool {
        match self {
            SetKind::ExplicitWindow { elements } => elements.binary_search(&n).is_ok(),
            SetKind::ArithmeticProgression { modulus, residue } => n % modulus == residue % modulus,
            SetKind::LacunaryPowers { base } => {
                let mut p = *base;
                while p < n {
                    match p.checked_mul(*base) {
                        Some(next) => p = next,
                        None => return false,
                    }
                }
                p == n
            }
            SetKind::Monomial { exponent } => {
                let r = integer_root(n, *exponent);
                r.checked_pow(*exponent) == Some(n)
            }
            SetKind::SturmianFloor { cf } => {
                // n = ⌊j/δ⌋ for some j ⇔ [nδ, (n+1)δ) contains an integer.
                let d = cf.value();
                ceil_mul(d, n + 1) > ceil_mul(d, n)
            }
            SetKind::Union { parts } => parts.iter().any(|p| p.contains(n)),
            SetKind::Shift { inner, offset } => {
                let m = n as i128 - *offset as i128;
                m >= 1 && inner.contains(m as u64)
            }
            SetKind::FiniteSums { .. } => self.elements(n).last() == Some(&n),
        }
    }

    fn elements(&self, bound: u64) -> Vec<u64> {
        match self {
            SetKind::ExplicitWindow { elements } => {
                let end = elements.partition_point(|&e| e <= bound);
                elements[..end].to_vec()
            }
            SetKind::ArithmeticProgression { modulus, residue } => {
                let r = residue % modulus;
                let first = if r == 0 { *modulus } else { r };
                (first..=bound).step_by(*modulus as usize).collect()
            }
            SetKind::LacunaryPowers { base } => {
                let mut out = Vec::new();
                let mut p = *base;
                while p <= bound {
                    out.push(p);
                    match p.checked_mul(*base) {
                        Some(next) => p = next,
                        None => break,
                    }
                }
                out
            }
            SetKind::Monomial { exponent } => {
                let mut out = Vec::new();
                for j in 1u64.. {
                    match j.checked_pow(*exponent) {
                        Some(v) if v <= bound => out.push(v),
                        _ => break,
                    }
                }
                out
            }
            SetKind::SturmianFloor { cf } => {
                let d = cf.value();
                let (p, q) = (*d.numer() as u128, *d.denom() as u128);
                let mut out = Vec::new();
                for j in 1u128.. {
                    let v = j * q / p;
                    if v > bound as u128 {
                        break;
                    }
                    out.push(v as u64);
                }
                out
            }
            SetKind::Union { parts } => {
                let mut out: Vec<u64> = parts.iter().flat_map(|p| p.elements(bound)).collect();
                out.sort_unstable();
                out.dedup();
                out
            }
            SetKind::Shift { inner, offset } => {
                let inner_bound = if *offset >= 0 {
                    bound.saturating_sub(*offset as u64)
                } else {
                    bound.saturating_add(offset.unsigned_abs())
                };
                inner
                    .elements(inner_bound)
                    .into_iter()
                    .filter_map(|e| {
                        let v = e as i128 + *offset as i128;
                        (v >= 1 && v <= bound as i128).then_some(v as u64)
                    })
                    .collect()
            }
            SetKind::FiniteSums { generators, depth } => crate::recurrence::ip_closure(generators, *depth, bound),
        }
    }

    fn exact_density(&self) -> Option<Rational> {
        match self {
            SetKind::ExplicitWindow { .. } => None,
            SetKind::ArithmeticProgression { modulus, .. } => Some(Rational::new(1, *modulus)),
            SetKind::LacunaryPowers { .. } => Some(Rational::from_integer(0)),
            SetKind::Monomial { exponent } => Some(Rational::from_integer(u64::from(*exponent == 1))),
            SetKind::SturmianFloor { cf } => Some(cf.value()),
            SetKind::Union { parts } => {
                let ds: Option<Vec<Rational>> = parts.iter().map(SetKind::exact_density).collect();
                let ds = ds?;
                if ds.iter().all(|d| *d.numer() == 0) {
                    Some(Rational::from_integer(0))
                } else if ds.len() == 1 {
                    Some(ds[0])
                } else {
                    None
                }
            }
            SetKind::Shift { inner, .. } => inner.exact_density(),
            SetKind::FiniteSums { .. } => Some(Rational::from_integer(0)),
        }
    }

    fn to_spec_string(&self) -> String {
        let join = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
        match self {
            SetKind::ExplicitWindow { elements } => format!("kind=explicit values={}", join(elements)),
            SetKind::ArithmeticProgression { modulus, residue } => format!("kind=ap a={modulus} b={residue}"),
            SetKind::LacunaryPowers { base } => format!("kind=powers base={base}"),
            SetKind::Monomial { exponent } => format!("kind=monomial exp={exponent}"),
            SetKind::SturmianFloor { cf } => format!("kind=sturmian cf={cf}"),
            SetKind::Union { parts } => parts.iter().map(SetKind::to_spec_string).collect::<Vec<_>>().join(" | "),
            SetKind::Shift { inner, offset } => match &**inner {
                SetKind::Union { parts } => parts
                    .iter()
                    .map(|p| SetKind::Shift { inner: Box::new(p.clone()), offset: *offset }.to_spec_string())
                    .collect::<Vec<_>>()
                    .join(" | "),
                SetKind::Shift { inner: deeper, offset: o2 } => {
                    SetKind::Shift { inner: deeper.clone(), offset: offset + o2 }.to_spec_string()
                }
                _ => format!("{} shift={offset}", inner.to_spec_string()),
            },
            SetKind::FiniteSums { generators, depth } => format!("kind=sums gens={} depth={depth}", join(generators)),
        }
    }
}

/// Largest `r` with `r^e ≤ n`.
fn integer_root(n: u64, e: u32) -> u64 {
    if e == 1 || n < 2 {
        return n;
    }
    let mut r = (n as f64).powf(1.0 / e as f64).round() as u64;
    while r > 0 && r.checked_pow(e).is_none_or(|v| v > n) {
        r -= 1;
    }
    while (r + 1).checked_pow(e).is_some_and(|v| v <= n) {
        r += 1;
    }
    r
}
