//! Extension of the split solution to a critical point of `W_𝔟` over the
//! truncated Novikov field, and its independent certification.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::ser::SerializeMap;
use serde::{Deserialize, Serialize, Serializer};

use super::{build_potential, check_params, exponent_levels, log_derivative, solve_split_leading, BulkParams,
    LaurentPotential, PotentialError, VarId};
use crate::novikov::{NovikovElement, Valuation};
use crate::scalar::{cint, fraction_string, int, parse_rational, short_string, Rational};

/// `4·n·t`, raised to `2(n−1+t)` when `4·n·t` does not exceed the high
/// exponent `n−1+t`.
pub fn default_truncation(n: usize, t: &Rational) -> Rational {
    let base = int(4 * n as i64) * t;
    let (_, hi) = exponent_levels(n, t);
    if base > hi {
        base
    } else {
        int(2) * hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalCertificate {
    pub n: usize,
    pub t: Rational,
    pub trunc: Rational,
    pub assignment: BTreeMap<VarId, NovikovElement>,
    pub c: NovikovElement,
    pub c_under: NovikovElement,
    pub residual_valuations: BTreeMap<VarId, Valuation>,
    pub valid: bool,
}

impl CriticalCertificate {
    pub fn bulk(&self) -> BulkParams {
        BulkParams { c: self.c.clone(), c_under: self.c_under.clone(), a: cint(1), a_under: cint(-1) }
    }

    pub fn potential(&self) -> Result<LaurentPotential, PotentialError> {
        build_potential(self.n, &self.t, &self.bulk(), &self.trunc)
    }
}

impl Serialize for CriticalCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let assignment: BTreeMap<String, &NovikovElement> =
            self.assignment.iter().map(|(v, x)| (v.to_string(), x)).collect();
        let residuals: BTreeMap<String, String> =
            self.residual_valuations.iter().map(|(v, r)| (v.to_string(), r.to_json_string())).collect();
        let mut m = s.serialize_map(Some(8))?;
        m.serialize_entry("assignment", &assignment)?;
        m.serialize_entry("c", &self.c)?;
        m.serialize_entry("c_under", &self.c_under)?;
        m.serialize_entry("n", &self.n)?;
        m.serialize_entry("residual_valuations", &residuals)?;
        m.serialize_entry("t", &fraction_string(&self.t))?;
        m.serialize_entry("trunc", &fraction_string(&self.trunc))?;
        m.serialize_entry("valid", &self.valid)?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for CriticalCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            t: String,
            trunc: String,
            assignment: BTreeMap<VarId, NovikovElement>,
            c: NovikovElement,
            c_under: NovikovElement,
            #[serde(default)]
            residual_valuations: BTreeMap<VarId, String>,
            #[serde(default)]
            valid: bool,
        }
        let raw = Raw::deserialize(d)?;
        let residual_valuations = raw
            .residual_valuations
            .into_iter()
            .map(|(v, s)| Valuation::parse(&s).map(|r| (v, r)).ok_or_else(|| D::Error::custom(format!("bad valuation `{s}`"))))
            .collect::<Result<_, _>>()?;
        Ok(CriticalCertificate {
            n: raw.n,
            t: parse_rational(&raw.t).map_err(D::Error::custom)?,
            trunc: parse_rational(&raw.trunc).map_err(D::Error::custom)?,
            assignment: raw.assignment,
            c: raw.c,
            c_under: raw.c_under,
            residual_valuations,
            valid: raw.valid,
        })
    }
}

/// Outcome of re-evaluating every logarithmic derivative at an assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CertifyReport {
    pub threshold: String,
    pub residual_valuations: BTreeMap<String, String>,
    pub passed: BTreeMap<String, bool>,
    pub all_units: bool,
    pub leading_terms_match: Option<bool>,
    pub valid: bool,
    #[serde(skip)]
    pub residuals: BTreeMap<VarId, Valuation>,
}

/// Evaluates `∂_v W` at `assignment` for every coordinate `v`; valid iff each
/// residual has valuation at least `W.trunc` and every value is a unit.
pub fn certify(w: &LaurentPotential, assignment: &BTreeMap<VarId, NovikovElement>) -> Result<CertifyReport, PotentialError> {
    let mut residuals = BTreeMap::new();
    for v in VarId::all(w.n) {
        if !assignment.contains_key(&v) {
            return Err(PotentialError::MissingVariable(v.to_string()));
        }
    }
    let all_units = VarId::all(w.n).iter().all(|v| assignment[v].is_unit());
    // non-units cannot be inverted; their residuals are left unreported
    if all_units {
        for v in VarId::all(w.n) {
            let r = log_derivative(w, v)?.evaluate(assignment)?;
            residuals.insert(v, r.valuation());
        }
    }
    let passed: BTreeMap<String, bool> = VarId::all(w.n)
        .into_iter()
        .map(|v| (v.to_string(), residuals.get(&v).is_some_and(|r: &Valuation| r.is_at_least(&w.trunc))))
        .collect();
    let valid = all_units && passed.values().all(|&p| p);
    Ok(CertifyReport {
        threshold: fraction_string(&w.trunc),
        residual_valuations: residuals.iter().map(|(v, r)| (v.to_string(), r.to_json_string())).collect(),
        passed,
        all_units,
        leading_terms_match: None,
        valid,
        residuals,
    })
}

/// Rebuilds `W_𝔟` from the certificate's own data and certifies from scratch,
/// also requiring the constant terms to match the split solution.
pub fn verify_certificate(cert: &CriticalCertificate) -> Result<CertifyReport, PotentialError> {
    let w = cert.potential()?;
    let mut report = certify(&w, &cert.assignment)?;
    let split = solve_split_leading(cert.n)?;
    let matches = VarId::all(cert.n)
        .iter()
        .all(|v| cert.assignment[v].constant_term() == split.assignment[v])
        && cert.c.constant_term() == split.c
        && cert.c_under.constant_term() == split.c_under
        && cert.c.is_unit()
        && cert.c_under.is_unit();
    report.leading_terms_match = Some(matches);
    report.valid = report.valid && matches;
    Ok(report)
}

fn unit_inverse(x: &NovikovElement, what: &str) -> Result<NovikovElement, PotentialError> {
    x.invert_unit().map_err(|_| PotentialError::NonUnitIntermediate(what.to_string()))
}

/// Seeds `y_{1,1} = y_{1,2} = y_{2,1} = −1 − T^{nt}`, solves `∂_{(1,2)} = 0`
/// for `y_{1,3}` and `∂_{(2,1)} = 0` for `y_{3,1}`, runs the row and column
/// recurrences, closes with `c`, `c̲`, then certifies.
pub fn extend_to_critical_point(n: usize, t: &Rational, trunc: &Rational) -> Result<CriticalCertificate, PotentialError> {
    check_params(n, t)?;
    let (lo, hi) = exponent_levels(n, t);
    if *trunc <= hi {
        return Err(PotentialError::TruncationTooSmall { trunc: short_string(trunc), bound: short_string(&hi) });
    }
    let gap = int(n as i64) * t;
    debug_assert_eq!(&lo + &gap, hi);
    // dividing by T^{nt} costs nt of precision
    let work = trunc + &gap;
    let seed = NovikovElement::from_terms([(Rational::zero(), cint(-1)), (gap.clone(), cint(-1))], work.clone());
    let one = NovikovElement::one(work.clone());

    let mut y: BTreeMap<VarId, NovikovElement> = BTreeMap::new();
    for v in [VarId::Row(1), VarId::Row(2), VarId::Col(2)] {
        y.insert(v, seed.clone());
    }
    let (y11, y12, y21) = (seed.clone(), seed.clone(), seed.clone());

    // ∂_{(1,2)}: T^lo (y12/y11 + y12) = T^hi y13/y12
    let corner_row = y12.try_mul(&unit_inverse(&y11, "y_{1,1}")?)?.try_add(&y12)?;
    let y13 = y12.try_mul(&corner_row.shift(&-&gap))?;
    // ∂_{(2,1)}: T^lo (y11 + 1)/y21 = T^hi y21/y31
    let corner_col = y11.try_add(&one)?.try_mul(&unit_inverse(&y21, "y_{2,1}")?)?.shift(&-&gap);
    let y31 = y21.try_mul(&unit_inverse(&corner_col, "y_{2,1}/y_{3,1}")?)?;
    y.insert(VarId::Row(3), y13);
    y.insert(VarId::Col(3), y31);

    for j in 3..n {
        let (cur, prev) = (&y[&VarId::Row(j)], &y[&VarId::Row(j - 1)]);
        let next = cur.try_mul(cur)?.try_mul(&unit_inverse(prev, &VarId::Row(j - 1).to_string())?)?;
        y.insert(VarId::Row(j + 1), next);
        let (cur, prev) = (&y[&VarId::Col(j)], &y[&VarId::Col(j - 1)]);
        let next = cur.try_mul(cur)?.try_mul(&unit_inverse(prev, &VarId::Col(j - 1).to_string())?)?;
        y.insert(VarId::Col(j + 1), next);
    }
    let (last, before) = (&y[&VarId::Row(n)], &y[&VarId::Row(n - 1)]);
    let c = last.try_mul(last)?.try_mul(&unit_inverse(before, &VarId::Row(n - 1).to_string())?)?;
    let (last, before) = (&y[&VarId::Col(n)], &y[&VarId::Col(n - 1)]);
    let c_under = before.try_mul(&unit_inverse(&last.try_mul(last)?, &VarId::Col(n).to_string())?)?;

    let assignment: BTreeMap<VarId, NovikovElement> =
        y.into_iter().map(|(v, x)| x.truncate_to(trunc).map(|x| (v, x))).collect::<Result<_, _>>()?;
    for (v, x) in &assignment {
        if !x.is_unit() {
            return Err(PotentialError::NonUnitIntermediate(v.to_string()));
        }
    }
    let mut cert = CriticalCertificate {
        n,
        t: t.clone(),
        trunc: trunc.clone(),
        assignment,
        c: c.truncate_to(trunc)?,
        c_under: c_under.truncate_to(trunc)?,
        residual_valuations: BTreeMap::new(),
        valid: false,
    };
    if !cert.c.is_unit() || !cert.c_under.is_unit() {
        return Err(PotentialError::NonUnitIntermediate("c".into()));
    }
    let report = verify_certificate(&cert)?;
    cert.residual_valuations = report.residuals;
    cert.valid = report.valid;
    Ok(cert)
}
