//! Bulk-deformed disk potentials of the GZ torus fibers `L_n(t)` as Laurent
//! polynomials with Novikov coefficients, their logarithmic derivatives, and
//! exact substitution.

mod critical;
mod split;

pub use critical::{
    certify, default_truncation, extend_to_critical_point, verify_certificate, CertifyReport, CriticalCertificate,
};
pub use split::{solve_split_leading, split_decompose, SplitPotentials, SplitSolution};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::novikov::{NovikovElement, NovikovError};
use crate::scalar::{cint, int, short_string, ComplexRational, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PotentialError {
    #[error("potential needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error("t = {0} outside (0, 1]")]
    ParameterOutOfRange(String),
    #[error("bulk parameter {0} is not a unit (valuation must be 0)")]
    NonUnitBulk(&'static str),
    #[error("auxiliary weight {0} must be nonzero")]
    ZeroAuxiliary(&'static str),
    #[error("truncation order {trunc} too small: must exceed n-1+t = {bound}")]
    TruncationTooSmall { trunc: String, bound: String },
    #[error("variable {0} is not a coordinate for n = {1}")]
    UnknownVariable(String, usize),
    #[error("no value assigned to {0}")]
    MissingVariable(String),
    #[error("value of {0} is not a unit")]
    NonUnitValue(String),
    #[error("intermediate value {0} is not a unit; no critical point on this branch")]
    NonUnitIntermediate(String),
    #[error("split leading term verification failed: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    Novikov(#[from] NovikovError),
}

/// `Row(j)` is `y_{1,j}` (`1 ≤ j ≤ n`), `Col(j)` is `y_{j,1}` (`2 ≤ j ≤ n`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarId {
    Row(usize),
    Col(usize),
}

impl VarId {
    /// The `2n − 1` coordinates `y_{1,1}, …, y_{1,n}, y_{2,1}, …, y_{n,1}`.
    pub fn all(n: usize) -> Vec<VarId> {
        (1..=n).map(VarId::Row).chain((2..=n).map(VarId::Col)).collect()
    }

    pub fn is_valid(&self, n: usize) -> bool {
        match *self {
            VarId::Row(j) => (1..=n).contains(&j),
            VarId::Col(j) => (2..=n).contains(&j),
        }
    }

    /// The entry `(i, j)` of `y_{i,j}`.
    pub fn position(&self) -> (usize, usize) {
        match *self {
            VarId::Row(j) => (1, j),
            VarId::Col(j) => (j, 1),
        }
    }

    /// `y_{i,j}` with `i = 1` or `j = 1`.
    pub fn at(i: usize, j: usize) -> Option<VarId> {
        match (i, j) {
            (1, j) if j >= 1 => Some(VarId::Row(j)),
            (i, 1) if i >= 2 => Some(VarId::Col(i)),
            _ => None,
        }
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j) = self.position();
        write!(f, "y_{{{i},{j}}}")
    }
}

impl FromStr for VarId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix("y_{")
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| format!("invalid variable `{s}` (expected y_{{i,j}})"))?;
        let (i, j) = inner.split_once(',').ok_or_else(|| format!("invalid variable `{s}`"))?;
        let parse = |x: &str| x.trim().parse::<usize>().map_err(|_| format!("invalid variable `{s}`"));
        VarId::at(parse(i)?, parse(j)?).ok_or_else(|| format!("invalid variable `{s}`"))
    }
}

impl Serialize for VarId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for VarId {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMonomial {
    pub exponents: BTreeMap<VarId, i64>,
    pub coeff: NovikovElement,
}

impl LaurentMonomial {
    pub fn new(coeff: NovikovElement, exponents: impl IntoIterator<Item = (VarId, i64)>) -> Self {
        let mut map = BTreeMap::new();
        for (v, e) in exponents {
            *map.entry(v).or_insert(0) += e;
        }
        map.retain(|_, e| *e != 0);
        LaurentMonomial { exponents: map, coeff }
    }

    pub fn exponent(&self, v: VarId) -> i64 {
        self.exponents.get(&v).copied().unwrap_or(0)
    }

    fn support_string(&self) -> String {
        let mut num = Vec::new();
        let mut den = Vec::new();
        for (v, &e) in &self.exponents {
            let base = if e.abs() == 1 { v.to_string() } else { format!("{v}^{}", e.abs()) };
            if e > 0 {
                num.push(base);
            } else {
                den.push(base);
            }
        }
        let top = if num.is_empty() { "1".to_string() } else { num.join("*") };
        if den.is_empty() {
            top
        } else {
            format!("{top}/{}", den.join("*"))
        }
    }
}

impl fmt::Display for LaurentMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) {}", self.coeff, self.support_string())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPotential {
    pub n: usize,
    /// Segment parameter for potentials of `L_n(t)`; `None` for split systems.
    pub t: Option<Rational>,
    pub trunc: Rational,
    pub monomials: Vec<LaurentMonomial>,
}

impl LaurentPotential {
    pub fn zero(n: usize, trunc: Rational) -> Self {
        LaurentPotential { n, t: None, trunc, monomials: Vec::new() }
    }

    pub fn constant(n: usize, k: NovikovElement) -> Self {
        let trunc = k.truncation().clone();
        let monomials = if k.is_zero() { vec![] } else { vec![LaurentMonomial::new(k, [])] };
        LaurentPotential { n, t: None, trunc, monomials }
    }

    fn push(&mut self, m: LaurentMonomial) -> Result<(), PotentialError> {
        if let Some(existing) = self.monomials.iter_mut().find(|x| x.exponents == m.exponents) {
            existing.coeff = existing.coeff.try_add(&m.coeff)?;
        } else {
            self.monomials.push(m);
        }
        self.monomials.retain(|x| !x.coeff.is_zero());
        Ok(())
    }

    /// Sum, merging monomials with equal support.
    pub fn add(&self, other: &LaurentPotential) -> Result<LaurentPotential, PotentialError> {
        let mut out = self.clone();
        if self.t != other.t {
            out.t = None;
        }
        for m in &other.monomials {
            out.push(m.clone())?;
        }
        Ok(out)
    }

    /// Distinct `T`-valuations of the coefficients, ascending.
    pub fn exponent_levels(&self) -> Vec<Rational> {
        let mut levels: Vec<Rational> = self
            .monomials
            .iter()
            .filter_map(|m| m.coeff.valuation().finite().cloned())
            .collect();
        levels.sort();
        levels.dedup();
        levels
    }

    /// Substitutes `assignment`, reducing modulo `T^trunc`.
    pub fn evaluate(&self, assignment: &BTreeMap<VarId, NovikovElement>) -> Result<NovikovElement, PotentialError> {
        let mut total = NovikovElement::zero(self.trunc.clone());
        let mut powers: BTreeMap<(VarId, i64), NovikovElement> = BTreeMap::new();
        for m in &self.monomials {
            let mut term = m.coeff.clone();
            for (&v, &e) in &m.exponents {
                let value = assignment.get(&v).ok_or_else(|| PotentialError::MissingVariable(v.to_string()))?;
                if e < 0 && !value.is_unit() {
                    return Err(PotentialError::NonUnitValue(v.to_string()));
                }
                let power = match powers.get(&(v, e)) {
                    Some(p) => p.clone(),
                    None => {
                        let p = value.pow(e)?;
                        powers.insert((v, e), p.clone());
                        p
                    }
                };
                term = term.try_mul(&power)?;
            }
            total = total.try_add(&term)?;
        }
        Ok(total)
    }
}

impl fmt::Display for LaurentPotential {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.monomials.iter().map(|m| m.to_string()).collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `∂_v = y_v ∂/∂y_v`: each monomial times its exponent in `v`.
pub fn log_derivative(w: &LaurentPotential, v: VarId) -> Result<LaurentPotential, PotentialError> {
    if !v.is_valid(w.n) {
        return Err(PotentialError::UnknownVariable(v.to_string(), w.n));
    }
    let monomials = w
        .monomials
        .iter()
        .filter(|m| m.exponent(v) != 0)
        .map(|m| LaurentMonomial {
            exponents: m.exponents.clone(),
            coeff: m.coeff.scale(&cint(m.exponent(v))),
        })
        .collect();
    Ok(LaurentPotential { n: w.n, t: w.t.clone(), trunc: w.trunc.clone(), monomials })
}

/// Bulk units `c = exp(𝔠)`, `c̲` and the auxiliary split weights `a`, `a̲`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BulkParams {
    pub c: NovikovElement,
    pub c_under: NovikovElement,
    pub a: ComplexRational,
    pub a_under: ComplexRational,
}

impl BulkParams {
    pub fn new(
        c: NovikovElement,
        c_under: NovikovElement,
        a: ComplexRational,
        a_under: ComplexRational,
    ) -> Result<Self, PotentialError> {
        if !c.is_unit() {
            return Err(PotentialError::NonUnitBulk("c"));
        }
        if !c_under.is_unit() {
            return Err(PotentialError::NonUnitBulk("c_under"));
        }
        if a.is_zero() {
            return Err(PotentialError::ZeroAuxiliary("a"));
        }
        if a_under.is_zero() {
            return Err(PotentialError::ZeroAuxiliary("a_under"));
        }
        Ok(BulkParams { c, c_under, a, a_under })
    }

    /// `c = c̲ = 1` (no bulk), `a = 1`, `a̲ = −1`.
    pub fn trivial(trunc: Rational) -> Self {
        BulkParams {
            c: NovikovElement::one(trunc.clone()),
            c_under: NovikovElement::one(trunc),
            a: cint(1),
            a_under: cint(-1),
        }
    }
}

pub(crate) fn check_params(n: usize, t: &Rational) -> Result<(), PotentialError> {
    if n < 3 {
        return Err(PotentialError::TooSmall(n));
    }
    if *t <= Rational::zero() || *t > Rational::one() {
        return Err(PotentialError::ParameterOutOfRange(short_string(t)));
    }
    Ok(())
}

/// `T`-exponents `((n−1)(1−t), n−1+t)` of the two monomial groups.
pub fn exponent_levels(n: usize, t: &Rational) -> (Rational, Rational) {
    let m = int(n as i64 - 1);
    (&m * (Rational::one() - t), &m + t)
}

/// Monomial supports of the low group (corner) and the high group (row, column).
pub(crate) fn corner_supports() -> Vec<Vec<(VarId, i64)>> {
    use VarId::*;
    vec![
        vec![(Row(2), 1), (Row(1), -1)],
        vec![(Row(2), 1)],
        vec![(Row(1), 1), (Col(2), -1)],
        vec![(Col(2), -1)],
    ]
}

pub(crate) fn row_quotients(n: usize) -> Vec<Vec<(VarId, i64)>> {
    (3..=n).map(|j| vec![(VarId::Row(j), 1), (VarId::Row(j - 1), -1)]).collect()
}

pub(crate) fn col_quotients(n: usize) -> Vec<Vec<(VarId, i64)>> {
    (3..=n).map(|j| vec![(VarId::Col(j - 1), 1), (VarId::Col(j), -1)]).collect()
}

/// `W_𝔟 = (y_{1,2}/y_{1,1} + y_{1,2} + y_{1,1}/y_{2,1} + 1/y_{2,1}) T^{(n−1)(1−t)}
///  + (c/y_{1,n} + Σ y_{1,j}/y_{1,j−1} + c̲ y_{n,1} + Σ y_{j−1,1}/y_{j,1}) T^{n−1+t}`.
pub fn build_potential(
    n: usize,
    t: &Rational,
    bulk: &BulkParams,
    trunc: &Rational,
) -> Result<LaurentPotential, PotentialError> {
    check_params(n, t)?;
    if !bulk.c.is_unit() {
        return Err(PotentialError::NonUnitBulk("c"));
    }
    if !bulk.c_under.is_unit() {
        return Err(PotentialError::NonUnitBulk("c_under"));
    }
    let (lo, hi) = exponent_levels(n, t);
    let t_lo = NovikovElement::monomial(cint(1), lo, trunc.clone());
    let t_hi = NovikovElement::monomial(cint(1), hi, trunc.clone());
    let c = bulk.c.truncate_to(trunc)?;
    let c_under = bulk.c_under.truncate_to(trunc)?;

    let mut monomials = Vec::with_capacity(2 * n + 2);
    for s in corner_supports() {
        monomials.push(LaurentMonomial::new(t_lo.clone(), s));
    }
    monomials.push(LaurentMonomial::new(c.try_mul(&t_hi)?, [(VarId::Row(n), -1)]));
    for s in row_quotients(n) {
        monomials.push(LaurentMonomial::new(t_hi.clone(), s));
    }
    monomials.push(LaurentMonomial::new(c_under.try_mul(&t_hi)?, [(VarId::Col(n), 1)]));
    for s in col_quotients(n) {
        monomials.push(LaurentMonomial::new(t_hi.clone(), s));
    }
    monomials.retain(|m| !m.coeff.is_zero());
    Ok(LaurentPotential { n, t: Some(t.clone()), trunc: trunc.clone(), monomials })
}
