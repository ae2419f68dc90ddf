//! Truncated Novikov field arithmetic.
//!
//! A [`NovikovElement`] is a finite sum `Σ aᵢ T^{μᵢ}` with exact complex-rational
//! coefficients and rational exponents, carried modulo `T^{trunc}`. Every
//! element records its truncation order; binary operations require equal
//! orders and drop every exponent `≥ trunc` from the result.

use std::cmp::Ordering;
use std::fmt;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::scalar::{
    complex_string, fraction_string, parse_rational, short_string, ComplexRational, Rational,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NovikovError {
    #[error("truncation orders differ: {left} vs {right}")]
    TruncationMismatch { left: Rational, right: Rational },
    #[error("element is not a unit (valuation {valuation})")]
    NonUnit { valuation: Valuation },
    #[error("cannot raise truncation order from {from} to {to}")]
    RaisedTruncation { from: Rational, to: Rational },
    #[error("truncation order must be positive, got {0}")]
    NonPositiveTruncation(Rational),
    #[error("malformed serialized element: {0}")]
    Malformed(String),
}

/// The T-adic valuation. `Infinite` is the valuation of zero and compares
/// greater than every finite value.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(Rational),
    Infinite,
}

impl Valuation {
    pub fn is_at_least(&self, threshold: &Rational) -> bool {
        match self {
            Valuation::Finite(v) => v >= threshold,
            Valuation::Infinite => true,
        }
    }

    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinite => None,
        }
    }

    /// `"p/q"` or `"inf"`.
    pub fn to_json_string(&self) -> String {
        match self {
            Valuation::Finite(v) => fraction_string(v),
            Valuation::Infinite => "inf".to_string(),
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        if s.trim() == "inf" {
            Some(Valuation::Infinite)
        } else {
            parse_rational(s).ok().map(Valuation::Finite)
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => write!(f, "{}", short_string(v)),
            Valuation::Infinite => write!(f, "inf"),
        }
    }
}

/// Truncation order used when nothing else is specified: ten times the
/// smallest positive exponent among `exponents` (10 if there is none).
pub fn default_truncation<'a>(exponents: impl IntoIterator<Item = &'a Rational>) -> Rational {
    let ten = Rational::from_integer(10.into());
    exponents
        .into_iter()
        .filter(|e| e.is_positive())
        .min()
        .map(|e| e * &ten)
        .unwrap_or(ten)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NovikovElement {
    // Strictly increasing exponents, nonzero coefficients, all exponents < trunc.
    terms: Vec<(Rational, ComplexRational)>,
    trunc: Rational,
}

impl NovikovElement {
    pub fn zero(trunc: Rational) -> Self {
        NovikovElement {
            terms: Vec::new(),
            trunc,
        }
    }

    pub fn one(trunc: Rational) -> Self {
        Self::constant(ComplexRational::one(), trunc)
    }

    pub fn constant(coeff: ComplexRational, trunc: Rational) -> Self {
        Self::monomial(coeff, Rational::zero(), trunc)
    }

    /// `coeff · T^{exp}`, or zero if `exp ≥ trunc`.
    pub fn monomial(coeff: ComplexRational, exp: Rational, trunc: Rational) -> Self {
        Self::from_terms([(exp, coeff)], trunc)
    }

    /// Builds an element from arbitrary terms: sorts, merges equal exponents,
    /// drops zero coefficients and exponents beyond the truncation order.
    pub fn from_terms(
        terms: impl IntoIterator<Item = (Rational, ComplexRational)>,
        trunc: Rational,
    ) -> Self {
        let mut raw: Vec<(Rational, ComplexRational)> =
            terms.into_iter().filter(|(e, _)| *e < trunc).collect();
        raw.sort_by(|a, b| a.0.cmp(&b.0));
        let mut merged: Vec<(Rational, ComplexRational)> = Vec::with_capacity(raw.len());
        for (e, c) in raw {
            match merged.last_mut() {
                Some((last_e, last_c)) if *last_e == e => *last_c += c,
                _ => merged.push((e, c)),
            }
        }
        merged.retain(|(_, c)| !c.is_zero());
        NovikovElement {
            terms: merged,
            trunc,
        }
    }

    pub fn terms(&self) -> &[(Rational, ComplexRational)] {
        &self.terms
    }

    pub fn truncation(&self) -> &Rational {
        &self.trunc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn valuation(&self) -> Valuation {
        match self.terms.first() {
            Some((e, _)) => Valuation::Finite(e.clone()),
            None => Valuation::Infinite,
        }
    }

    pub fn is_unit(&self) -> bool {
        matches!(self.terms.first(), Some((e, _)) if e.is_zero())
    }

    /// Coefficient of the lowest-order term (zero for the zero element).
    pub fn leading_coefficient(&self) -> ComplexRational {
        self.terms
            .first()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(ComplexRational::zero)
    }

    /// Coefficient of `T^0`.
    pub fn constant_term(&self) -> ComplexRational {
        self.coefficient(&Rational::zero())
    }

    pub fn coefficient(&self, exp: &Rational) -> ComplexRational {
        self.terms
            .binary_search_by(|(e, _)| e.cmp(exp))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| ComplexRational::zero())
    }

    fn check_same_order(&self, other: &Self) -> Result<(), NovikovError> {
        if self.trunc == other.trunc {
            Ok(())
        } else {
            Err(NovikovError::TruncationMismatch {
                left: self.trunc.clone(),
                right: other.trunc.clone(),
            })
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, NovikovError> {
        self.check_same_order(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ea, ca) = &self.terms[i];
            let (eb, cb) = &other.terms[j];
            match ea.cmp(eb) {
                Ordering::Less => {
                    out.push((ea.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((eb.clone(), cb.clone()));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ca + cb;
                    if !c.is_zero() {
                        out.push((ea.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(NovikovElement {
            terms: out,
            trunc: self.trunc.clone(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, NovikovError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, NovikovError> {
        self.check_same_order(other)?;
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea + eb;
                if e < self.trunc {
                    products.push((e, ca * cb));
                } else {
                    // exponents of `other` are increasing
                    break;
                }
            }
        }
        Ok(Self::from_terms(products, self.trunc.clone()))
    }

    pub fn neg(&self) -> Self {
        NovikovElement {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
            trunc: self.trunc.clone(),
        }
    }

    pub fn scale(&self, factor: &ComplexRational) -> Self {
        if factor.is_zero() {
            return Self::zero(self.trunc.clone());
        }
        NovikovElement {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c * factor))
                .collect(),
            trunc: self.trunc.clone(),
        }
    }

    /// Multiplies by `T^{shift}`. Negative shifts lower every exponent; the
    /// result is only meaningful modulo `T^{trunc + shift}`.
    pub fn shift(&self, shift: &Rational) -> Self {
        Self::from_terms(
            self.terms.iter().map(|(e, c)| (e + shift, c.clone())),
            self.trunc.clone(),
        )
    }

    /// Re-labels the element with a smaller (or equal) truncation order.
    pub fn truncate_to(&self, trunc: &Rational) -> Result<Self, NovikovError> {
        if *trunc > self.trunc {
            return Err(NovikovError::RaisedTruncation {
                from: self.trunc.clone(),
                to: trunc.clone(),
            });
        }
        Ok(Self::from_terms(self.terms.iter().cloned(), trunc.clone()))
    }

    /// Inverse of a unit `x = a₀ + Σ a_d T^d`, coefficient by coefficient:
    /// `b_0 = a₀⁻¹` and `b_e = −a₀⁻¹ Σ_d a_d b_{e−d}` over the exponents
    /// reachable as sums of tail exponents below the truncation order.
    pub fn invert_unit(&self) -> Result<Self, NovikovError> {
        if !self.is_unit() {
            return Err(NovikovError::NonUnit {
                valuation: self.valuation(),
            });
        }
        let a0_inv = self.terms[0].1.inv();
        let tail = &self.terms[1..];
        let mut support = BTreeSet::from([Rational::zero()]);
        let mut frontier = vec![Rational::zero()];
        while let Some(e) = frontier.pop() {
            for (d, _) in tail {
                let s = &e + d;
                if s < self.trunc && support.insert(s.clone()) {
                    frontier.push(s);
                }
            }
        }
        let mut coeffs: BTreeMap<Rational, ComplexRational> = BTreeMap::new();
        for e in support {
            if e.is_zero() {
                coeffs.insert(e, a0_inv.clone());
                continue;
            }
            let mut acc = ComplexRational::zero();
            for (d, a) in tail.iter().take_while(|(d, _)| *d <= e) {
                if let Some(b) = coeffs.get(&(&e - d)) {
                    acc += a * b;
                }
            }
            coeffs.insert(e, -(acc * &a0_inv));
        }
        Ok(Self::from_terms(coeffs, self.trunc.clone()))
    }

    pub fn pow(&self, k: i64) -> Result<Self, NovikovError> {
        if k < 0 {
            return self.invert_unit()?.pow(-k);
        }
        let mut result = Self::one(self.trunc.clone());
        let mut base = self.clone();
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                result = result.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn try_div_unit(&self, unit: &Self) -> Result<Self, NovikovError> {
        self.try_mul(&unit.invert_unit()?)
    }
}

impl fmt::Display for NovikovElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let coeff = complex_string(c);
            let needs_parens = !c.im.is_zero() && !c.re.is_zero();
            let (sign, body) = match coeff.strip_prefix('-') {
                Some(rest) if !needs_parens => ("-", rest.to_string()),
                _ => ("+", coeff.clone()),
            };
            if i == 0 {
                if sign == "-" {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let body = if needs_parens { format!("({body})") } else { body };
            if e.is_zero() {
                write!(f, "{body}")?;
            } else {
                let t = if e.is_one() {
                    "T".to_string()
                } else if e.is_integer() {
                    format!("T^{}", e.numer())
                } else {
                    format!("T^({})", short_string(e))
                };
                if body == "1" {
                    write!(f, "{t}")?;
                } else {
                    write!(f, "{body}{t}")?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: String,
    re: String,
    im: String,
}

#[derive(Serialize, Deserialize)]
struct ElementJson {
    terms: Vec<TermJson>,
    trunc: String,
}

impl Serialize for NovikovElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementJson {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exp: fraction_string(e),
                    re: fraction_string(&c.re),
                    im: fraction_string(&c.im),
                })
                .collect(),
            trunc: fraction_string(&self.trunc),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for NovikovElement {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = ElementJson::deserialize(deserializer)?;
        NovikovElement::try_from(raw).map_err(serde::de::Error::custom)
    }
}

impl TryFrom<ElementJson> for NovikovElement {
    type Error = NovikovError;

    fn try_from(raw: ElementJson) -> Result<Self, Self::Error> {
        let bad = |e: crate::scalar::ParseScalarError| NovikovError::Malformed(e.to_string());
        let trunc = parse_rational(&raw.trunc).map_err(bad)?;
        if !trunc.is_positive() {
            return Err(NovikovError::NonPositiveTruncation(trunc));
        }
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let exp = parse_rational(&t.exp).map_err(bad)?;
            let re = parse_rational(&t.re).map_err(bad)?;
            let im = parse_rational(&t.im).map_err(bad)?;
            terms.push((exp, ComplexRational::new(re, im)));
        }
        Ok(NovikovElement::from_terms(terms, trunc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{cint, int, rat};
    use proptest::prelude::*;

    fn el(terms: &[(i64, i64, i64)], trunc: i64) -> NovikovElement {
        // (exp numer, exp denom, integer coefficient)
        NovikovElement::from_terms(
            terms.iter().map(|&(p, q, c)| (rat(p, q), cint(c))),
            int(trunc),
        )
    }

    #[test]
    fn valuation_examples() {
        assert_eq!(
            el(&[(1, 2, 2), (1, 1, 3)], 10).valuation(),
            Valuation::Finite(rat(1, 2))
        );
        assert_eq!(NovikovElement::zero(int(10)).valuation(), Valuation::Infinite);
        assert_eq!(
            el(&[(0, 1, -1), (3, 2, -1)], 10).valuation(),
            Valuation::Finite(int(0))
        );
        assert!(Valuation::Infinite > Valuation::Finite(int(1000)));
    }

    #[test]
    fn add_examples() {
        let x = el(&[(0, 1, 1), (1, 1, 1)], 10);
        assert_eq!(x.try_add(&el(&[(0, 1, -1)], 10)).unwrap(), el(&[(1, 1, 1)], 10));
        assert_eq!(x.try_add(&NovikovElement::zero(int(10))).unwrap(), x);
        let third = el(&[(1, 3, 1)], 10);
        assert!(third.try_add(&third.neg()).unwrap().is_zero());
    }

    #[test]
    fn add_rejects_mismatched_truncation() {
        let err = el(&[(0, 1, 1)], 10).try_add(&el(&[(0, 1, 1)], 5)).unwrap_err();
        assert!(matches!(err, NovikovError::TruncationMismatch { .. }));
        assert!(el(&[(0, 1, 1)], 10).try_mul(&el(&[(0, 1, 1)], 5)).is_err());
    }

    #[test]
    fn mul_examples() {
        let a = el(&[(0, 1, 1), (1, 1, 1)], 10);
        let b = el(&[(0, 1, 1), (1, 1, -1)], 10);
        assert_eq!(a.try_mul(&b).unwrap(), el(&[(0, 1, 1), (2, 1, -1)], 10));
        assert_eq!(a.try_mul(&NovikovElement::one(int(10))).unwrap(), a);
        let half = el(&[(1, 2, 1)], 10);
        assert_eq!(half.try_mul(&half).unwrap(), el(&[(1, 1, 1)], 10));
    }

    #[test]
    fn mul_truncates() {
        let a = el(&[(3, 1, 1)], 5);
        assert!(a.try_mul(&a).unwrap().is_zero());
        assert_eq!(NovikovElement::monomial(cint(1), int(5), int(5)), NovikovElement::zero(int(5)));
    }

    #[test]
    fn invert_geometric_series() {
        let x = el(&[(0, 1, 1), (1, 1, 1)], 5);
        let expected = el(&[(0, 1, 1), (1, 1, -1), (2, 1, 1), (3, 1, -1), (4, 1, 1)], 5);
        assert_eq!(x.invert_unit().unwrap(), expected);
        let minus_one = el(&[(0, 1, -1)], 5);
        assert_eq!(minus_one.invert_unit().unwrap(), minus_one);
    }

    #[test]
    fn invert_minus_one_minus_t_three_halves() {
        let x = el(&[(0, 1, -1), (3, 2, -1)], 6);
        let inv = x.invert_unit().unwrap();
        // -1 + T^{3/2} - T^3 + T^{9/2}
        assert_eq!(inv, el(&[(0, 1, -1), (3, 2, 1), (3, 1, -1), (9, 2, 1)], 6));
        let residual = x.try_mul(&inv).unwrap().try_sub(&NovikovElement::one(int(6))).unwrap();
        assert!(residual.valuation().is_at_least(&int(6)));
    }

    #[test]
    fn invert_rejects_non_units() {
        let err = el(&[(1, 2, 1)], 5).invert_unit().unwrap_err();
        assert_eq!(err, NovikovError::NonUnit { valuation: Valuation::Finite(rat(1, 2)) });
        assert!(NovikovElement::zero(int(5)).invert_unit().is_err());
        assert!(el(&[(1, 1, 2)], 5).pow(-1).is_err());
    }

    #[test]
    fn powers() {
        let x = el(&[(0, 1, 1), (1, 1, 1)], 10);
        assert_eq!(x.pow(2).unwrap(), el(&[(0, 1, 1), (1, 1, 2), (2, 1, 1)], 10));
        assert_eq!(x.pow(0).unwrap(), NovikovElement::one(int(10)));
        let y = el(&[(0, 1, -1), (1, 1, -1)], 4);
        let inv_sq = y.pow(-2).unwrap();
        assert_eq!(inv_sq, el(&[(0, 1, 1), (1, 1, -2), (2, 1, 3), (3, 1, -4)], 4));
        let back = inv_sq.try_mul(&y).unwrap().try_mul(&y).unwrap();
        assert!(back.try_sub(&NovikovElement::one(int(4))).unwrap().is_zero());
    }

    #[test]
    fn shift_and_truncate() {
        let x = el(&[(1, 1, 2), (3, 1, 1)], 4);
        assert_eq!(x.shift(&int(-1)), el(&[(0, 1, 2), (2, 1, 1)], 4));
        assert_eq!(x.shift(&int(1)), el(&[(2, 1, 2)], 4));
        assert_eq!(x.truncate_to(&int(2)).unwrap(), el(&[(1, 1, 2)], 2));
        assert!(x.truncate_to(&int(5)).is_err());
    }

    #[test]
    fn default_truncation_uses_smallest_positive_exponent() {
        let exps = [int(0), rat(3, 2), rat(1, 4), int(-1)];
        assert_eq!(default_truncation(&exps), rat(5, 2));
        assert_eq!(default_truncation(&[int(0)]), int(10));
    }

    #[test]
    fn display() {
        assert_eq!(el(&[(0, 1, -1), (3, 2, -1)], 10).to_string(), "-1 - T^(3/2)");
        assert_eq!(el(&[(1, 1, 1), (2, 1, 3)], 10).to_string(), "T + 3T^2");
        assert_eq!(NovikovElement::zero(int(1)).to_string(), "0");
    }

    #[test]
    fn json_shape() {
        let x = el(&[(0, 1, -1), (3, 2, 2)], 6);
        let v = serde_json::to_value(&x).unwrap();
        assert_eq!(
            v,
            serde_json::json!({
                "terms": [
                    {"exp": "0/1", "re": "-1/1", "im": "0/1"},
                    {"exp": "3/2", "re": "2/1", "im": "0/1"}
                ],
                "trunc": "6/1"
            })
        );
        let back: NovikovElement = serde_json::from_value(v).unwrap();
        assert_eq!(back, x);
        let bad = serde_json::json!({"terms": [], "trunc": "0.5"});
        assert!(serde_json::from_value::<NovikovElement>(bad).is_err());
    }

    fn arb_element(trunc: i64) -> impl Strategy<Value = NovikovElement> {
        prop::collection::vec((0i64..24, -5i64..=5, -3i64..=3), 0..6).prop_map(move |ts| {
            NovikovElement::from_terms(
                ts.into_iter()
                    .map(|(e, re, im)| (rat(e, 4), ComplexRational::new(int(re), int(im)))),
                int(trunc),
            )
        })
    }

    fn arb_unit(trunc: i64) -> impl Strategy<Value = NovikovElement> {
        (arb_element(trunc), 1i64..=4, -4i64..=4).prop_map(move |(x, re, im)| {
            let tail = NovikovElement::from_terms(
                x.terms().iter().filter(|(e, _)| e.is_positive()).cloned(),
                int(trunc),
            );
            tail.try_add(&NovikovElement::constant(ComplexRational::new(int(re), int(im)), int(trunc)))
                .unwrap()
        })
    }

    /// `a₀⁻¹ Σ rᵏ` with `r = −a₀⁻¹ (x − a₀)`, summed until the powers vanish.
    fn geometric_inverse(x: &NovikovElement) -> NovikovElement {
        let a0_inv = x.terms()[0].1.inv();
        let trunc = x.truncation().clone();
        let r = NovikovElement::from_terms(x.terms()[1..].iter().map(|(e, c)| (e.clone(), -(c * &a0_inv))), trunc.clone());
        let mut sum = NovikovElement::one(trunc.clone());
        let mut power = NovikovElement::one(trunc);
        loop {
            power = power.try_mul(&r).unwrap();
            if power.is_zero() {
                break;
            }
            sum = sum.try_add(&power).unwrap();
        }
        sum.scale(&a0_inv)
    }

    proptest! {
        #[test]
        fn prop_inverse_matches_geometric_series(u in arb_unit(5)) {
            prop_assert_eq!(u.invert_unit().unwrap(), geometric_inverse(&u));
        }

        #[test]
        fn prop_negative_power_is_power_of_inverse(u in arb_unit(3), k in 1i64..4) {
            let inv = u.invert_unit().unwrap();
            prop_assert_eq!(u.pow(-k).unwrap(), inv.pow(k).unwrap());
            prop_assert_eq!(u.pow(k).unwrap().try_mul(&u.pow(-k).unwrap()).unwrap(), NovikovElement::one(int(3)));
        }

        #[test]
        fn prop_round_trip_json(x in arb_element(5)) {
            let s = serde_json::to_string(&x).unwrap();
            let back: NovikovElement = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(back, x);
        }

        #[test]
        fn prop_distributive(x in arb_element(5), y in arb_element(5), z in arb_element(5)) {
            let lhs = x.try_mul(&y.try_add(&z).unwrap()).unwrap();
            let rhs = x.try_mul(&y).unwrap().try_add(&x.try_mul(&z).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn prop_ultrametric(x in arb_element(5), y in arb_element(5)) {
            let s = x.try_add(&y).unwrap();
            let (vx, vy) = (x.valuation(), y.valuation());
            prop_assert!(s.valuation() >= vx.clone().min(vy.clone()));
            if vx != vy {
                prop_assert_eq!(s.valuation(), vx.min(vy));
            }
        }

        #[test]
        fn prop_inverse_two_sided(u in arb_unit(5)) {
            let inv = u.invert_unit().unwrap();
            let one = NovikovElement::one(int(5));
            prop_assert!(u.try_mul(&inv).unwrap().try_sub(&one).unwrap().is_zero());
            prop_assert!(inv.try_mul(&u).unwrap().try_sub(&one).unwrap().is_zero());
        }
    }
}
