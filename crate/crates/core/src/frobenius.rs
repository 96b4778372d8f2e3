//! Frobenius functions `f: W → Z` with `f + ιf = d` and `0 ≤ f ≤ d`.
//!
//! These classify the isogeny classes of simple abelian varieties over `F`
//! split by `K`: `f(w)` is the normalized `w`-adic valuation of a Frobenius
//! endomorphism times the local degree.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::datum::CmGaloisDatum;
use crate::group::{Element, Subgroup};
use crate::{Error, Result};

/// Default cap on `(d+1)^t` for enumeration.
pub const DEFAULT_ENUMERATION_CAP: u128 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FrobeniusFunction {
    values: Vec<u32>,
}

impl FrobeniusFunction {
    pub fn new(datum: &CmGaloisDatum, values: Vec<u32>) -> Result<Self> {
        let n = datum.prime_count();
        if values.len() != n {
            return Err(Error::InvalidFunction(format!("expected {n} values, got {}", values.len())));
        }
        let d = datum.local_degree() as u32;
        for (w, &v) in values.iter().enumerate() {
            if v > d {
                return Err(Error::InvalidFunction(format!("f({w}) = {v} exceeds d = {d}")));
            }
            let iw = datum.iota_pairing()[w];
            if v + values[iw] != d {
                return Err(Error::InvalidFunction(format!("f({w}) + f({iw}) = {} but d = {d}", v + values[iw])));
            }
        }
        Ok(FrobeniusFunction { values })
    }

    /// Rebuilds `f` from its values on the canonical `ι`-orbit representatives.
    pub fn from_top_values(datum: &CmGaloisDatum, top: &[u32]) -> Result<Self> {
        let reps = datum.representatives();
        if top.len() != reps.len() {
            return Err(Error::InvalidFunction(format!("expected {} top values, got {}", reps.len(), top.len())));
        }
        let d = datum.local_degree() as u32;
        let mut values = vec![0; datum.prime_count()];
        for (&w, &v) in reps.iter().zip(top) {
            if v > d {
                return Err(Error::InvalidFunction(format!("top value {v} exceeds d = {d}")));
            }
            values[w] = v;
            values[datum.iota_pairing()[w]] = d - v;
        }
        Self::new(datum, values)
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn value(&self, w: usize) -> u32 {
        self.values[w]
    }

    pub fn top_values(&self, datum: &CmGaloisDatum) -> Vec<u32> {
        datum.representatives().iter().map(|&w| self.values[w]).collect()
    }

    /// `w ↦ f(g·w)`.
    pub fn translate(&self, datum: &CmGaloisDatum, g: Element) -> Self {
        let values = (0..self.values.len()).map(|w| self.values[datum.act(g, w)]).collect();
        FrobeniusFunction { values }
    }

    /// `w ↦ f(g⁻¹·w)`, the left action on functions.
    pub fn translate_left(&self, datum: &CmGaloisDatum, g: Element) -> Self {
        self.translate(datum, datum.group().inv(g))
    }

    /// `w ↦ d − f(w)`, which equals `w ↦ f(ιw)`.
    pub fn dual(&self, datum: &CmGaloisDatum) -> Self {
        let d = datum.local_degree() as u32;
        FrobeniusFunction { values: self.values.iter().map(|&v| d - v).collect() }
    }

    /// True iff `f = ιf`, which forces `f ≡ d/2`.
    pub fn is_iota_invariant(&self, datum: &CmGaloisDatum) -> bool {
        (0..self.values.len()).all(|w| self.values[w] == self.values[datum.iota_pairing()[w]])
    }

    fn check_len(&self, datum: &CmGaloisDatum) -> Result<()> {
        if self.values.len() == datum.prime_count() {
            Ok(())
        } else {
            Err(Error::InvalidFunction(format!(
                "function has {} values but |W| = {}",
                self.values.len(),
                datum.prime_count()
            )))
        }
    }
}

/// `(d+1)^t`, or `None` on overflow.
fn class_count(datum: &CmGaloisDatum) -> Option<u128> {
    let base = datum.local_degree() as u128 + 1;
    u32::try_from(datum.half_count()).ok().and_then(|t| base.checked_pow(t))
}

pub fn enumerate_frobenius_functions(datum: &CmGaloisDatum) -> Result<Vec<FrobeniusFunction>> {
    enumerate_frobenius_functions_bounded(datum, DEFAULT_ENUMERATION_CAP)
}

/// All solutions of `f + ιf = d`, `0 ≤ f ≤ d`, in lexicographic order of
/// their values over `W`.
///
/// Values are free on the `ι`-orbit representatives and forced on their
/// images, so lexicographic order on top values is lexicographic order on
/// full vectors.
pub fn enumerate_frobenius_functions_bounded(datum: &CmGaloisDatum, cap: u128) -> Result<Vec<FrobeniusFunction>> {
    let count = class_count(datum).unwrap_or(u128::MAX);
    if count > cap {
        return Err(Error::EnumerationBoundExceeded { count, cap });
    }
    let d = datum.local_degree() as u32;
    let t = datum.half_count();
    let mut out = Vec::with_capacity(count as usize);
    let mut top = vec![0u32; t];
    loop {
        out.push(FrobeniusFunction::from_top_values(datum, &top)?);
        // Odometer with the last representative varying fastest.
        let mut i = t;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if top[i] < d {
                top[i] += 1;
                top[i + 1..].iter_mut().for_each(|v| *v = 0);
                break;
            }
        }
    }
}

/// The stabilizer `H = {g | f(g·w) = f(w) ∀w}` of a Frobenius function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassStabilizer {
    subgroup: Subgroup,
    contains_iota: bool,
}

impl ClassStabilizer {
    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    /// `(G:H)`
    pub fn index(&self) -> usize {
        self.subgroup.index()
    }

    /// `s = (G:H)/2`; an odd index is reported, never rounded.
    pub fn half_index(&self) -> Result<usize> {
        let index = self.index();
        if index.is_multiple_of(2) {
            Ok(index / 2)
        } else {
            Err(Error::OddIndex(index))
        }
    }

    /// `ι ∈ H` happens exactly when `f ≡ d/2`; then `(G:H) = 1`.
    pub fn contains_iota(&self) -> bool {
        self.contains_iota
    }
}

pub fn stabilizer_h(datum: &CmGaloisDatum, f: &FrobeniusFunction) -> Result<ClassStabilizer> {
    f.check_len(datum)?;
    let group = datum.group();
    let n = datum.prime_count();
    let members: Vec<Element> =
        group.elements().filter(|&g| (0..n).all(|w| f.value(datum.act(g, w)) == f.value(w))).collect();
    let subgroup = Subgroup::from_members(group, &members)
        .map_err(|_| Error::InternalInconsistency("stabilizer of f is not a subgroup".into()))?;
    let contains_iota = subgroup.contains(datum.iota());
    Ok(ClassStabilizer { subgroup, contains_iota })
}

/// `f(w) ≠ f(w′)` and neither value occurs on `W ∖ {w, w′}`.
pub fn satisfies_isolated_pair(datum: &CmGaloisDatum, f: &FrobeniusFunction, w: usize, w2: usize) -> Result<bool> {
    f.check_len(datum)?;
    let n = datum.prime_count();
    for p in [w, w2] {
        if p >= n {
            return Err(Error::InvalidPoint(p));
        }
    }
    if w == w2 {
        return Err(Error::InvalidPoint(w2));
    }
    let (a, b) = (f.value(w), f.value(w2));
    if a == b {
        return Ok(false);
    }
    Ok((0..n).filter(|&x| x != w && x != w2).all(|x| f.value(x) != a && f.value(x) != b))
}

fn has_isolated_pair(datum: &CmGaloisDatum, f: &FrobeniusFunction) -> bool {
    let n = datum.prime_count();
    (0..n).any(|w| (w + 1..n).any(|w2| satisfies_isolated_pair(datum, f, w, w2).expect("points in range")))
}

/// An exact rational value of a closed-form count, or `Undefined` when the
/// expression divides by zero or overflows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    Integer(i128),
    Ratio { numer: i128, denom: i128 },
    Undefined,
}

impl ClosedForm {
    fn ratio(numer: i128, denom: i128) -> Self {
        if denom == 0 {
            return ClosedForm::Undefined;
        }
        let g = numer.gcd(&denom);
        let (mut n, mut d) = (numer / g, denom / g);
        if d < 0 {
            n = -n;
            d = -d;
        }
        if d == 1 {
            ClosedForm::Integer(n)
        } else {
            ClosedForm::Ratio { numer: n, denom: d }
        }
    }
}

/// `t(t−1)(t−2)^(d−2)`, exact even for `d < 2`.
fn isolated_pair_formula(t: i128, d: i128) -> ClosedForm {
    let lead = t * (t - 1);
    let base = t - 2;
    let exp = d - 2;
    let power = |e: i128| u32::try_from(e).ok().and_then(|e| base.checked_pow(e));
    if exp >= 0 {
        match power(exp).and_then(|p| lead.checked_mul(p)) {
            Some(v) => ClosedForm::Integer(v),
            None => ClosedForm::Undefined,
        }
    } else {
        match power(-exp) {
            Some(p) => ClosedForm::ratio(lead, p),
            None => ClosedForm::Undefined,
        }
    }
}

/// Enumerated ground truth next to the two closed-form counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub group_order: usize,
    pub local_degree: usize,
    pub half_count: usize,
    pub enumerated_count: usize,
    /// `(d+1)^t`
    pub formula_dplus1_pow_t: u128,
    /// `t^d`; `None` on overflow.
    pub formula_t_pow_d: Option<u128>,
    /// Enumerated functions admitting at least one isolated pair `(w, w′)`.
    pub isolated_pair_count: usize,
    /// `t(t−1)(t−2)^(d−2)`
    pub formula_isolated_pair: ClosedForm,
}

pub fn census(datum: &CmGaloisDatum) -> Result<CensusReport> {
    census_bounded(datum, DEFAULT_ENUMERATION_CAP)
}

pub fn census_bounded(datum: &CmGaloisDatum, cap: u128) -> Result<CensusReport> {
    let functions = enumerate_frobenius_functions_bounded(datum, cap)?;
    let t = datum.half_count();
    let d = datum.local_degree();
    let t_pow_d = u32::try_from(d).ok().and_then(|d| (t as u128).checked_pow(d));
    Ok(CensusReport {
        group_order: datum.group().order(),
        local_degree: d,
        half_count: t,
        enumerated_count: functions.len(),
        formula_dplus1_pow_t: class_count(datum).expect("bounded by the cap"),
        formula_t_pow_d: t_pow_d,
        isolated_pair_count: functions.iter().filter(|f| has_isolated_pair(datum, f)).count(),
        formula_isolated_pair: isolated_pair_formula(t as i128, d as i128),
    })
}
