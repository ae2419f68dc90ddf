//! The split leading term system: three complex Laurent polynomials whose
//! logarithmic derivatives vanish simultaneously at the seed of the Novikov
//! critical point.

use std::collections::BTreeMap;

use super::{col_quotients, corner_supports, log_derivative, row_quotients, BulkParams, LaurentMonomial,
    LaurentPotential, PotentialError, VarId};
use crate::novikov::NovikovElement;
use crate::scalar::{cint, complex_string, int, ComplexRational, Rational};

/// Coefficient truncation for pure complex systems: every coefficient sits at `T^0`.
fn complex_trunc() -> Rational {
    int(1)
}

fn constant(z: ComplexRational) -> NovikovElement {
    NovikovElement::constant(z, complex_trunc())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPotentials {
    pub corner: LaurentPotential,
    pub row: LaurentPotential,
    pub col: LaurentPotential,
}

impl SplitPotentials {
    /// The split equations: `∂_{(1,1)}, ∂_{(1,2)}, ∂_{(2,1)}` of the corner,
    /// `∂_{(1,j)}` of the row and `∂_{(j,1)}` of the column part, `j = 2..n`.
    pub fn equations(&self) -> Result<Vec<(String, LaurentPotential)>, PotentialError> {
        let n = self.corner.n;
        let mut out = Vec::new();
        for v in [VarId::Row(1), VarId::Row(2), VarId::Col(2)] {
            out.push((format!("corner d{v}"), log_derivative(&self.corner, v)?));
        }
        for j in 2..=n {
            out.push((format!("row d{}", VarId::Row(j)), log_derivative(&self.row, VarId::Row(j))?));
        }
        for j in 2..=n {
            out.push((format!("col d{}", VarId::Col(j)), log_derivative(&self.col, VarId::Col(j))?));
        }
        Ok(out)
    }
}

/// `W_corner = y_{1,2}/y_{1,1} + y_{1,2} + y_{1,1}/y_{2,1} + 1/y_{2,1}`,
/// `W_row = c/y_{1,n} + Σ y_{1,j}/y_{1,j−1} + a·y_{1,2}`,
/// `W_col = c̲·y_{n,1} + Σ y_{j−1,1}/y_{j,1} + a̲/y_{2,1}`,
/// with `c`, `c̲` replaced by their constant terms.
pub fn split_decompose(n: usize, bulk: &BulkParams) -> Result<SplitPotentials, PotentialError> {
    if n < 3 {
        return Err(PotentialError::TooSmall(n));
    }
    let one = || constant(cint(1));
    let build = |monomials: Vec<LaurentMonomial>| LaurentPotential {
        n,
        t: None,
        trunc: complex_trunc(),
        monomials: monomials.into_iter().filter(|m| !m.coeff.is_zero()).collect(),
    };
    let corner = build(corner_supports().into_iter().map(|s| LaurentMonomial::new(one(), s)).collect());

    let mut row = vec![LaurentMonomial::new(constant(bulk.c.constant_term()), [(VarId::Row(n), -1)])];
    row.extend(row_quotients(n).into_iter().map(|s| LaurentMonomial::new(one(), s)));
    row.push(LaurentMonomial::new(constant(bulk.a.clone()), [(VarId::Row(2), 1)]));

    let mut col = vec![LaurentMonomial::new(constant(bulk.c_under.constant_term()), [(VarId::Col(n), 1)])];
    col.extend(col_quotients(n).into_iter().map(|s| LaurentMonomial::new(one(), s)));
    col.push(LaurentMonomial::new(constant(bulk.a_under.clone()), [(VarId::Col(2), -1)]));

    Ok(SplitPotentials { corner, row: build(row), col: build(col) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSolution {
    pub n: usize,
    pub assignment: BTreeMap<VarId, ComplexRational>,
    pub c: ComplexRational,
    pub c_under: ComplexRational,
    pub a: ComplexRational,
    pub a_under: ComplexRational,
}

impl SplitSolution {
    pub fn value(&self, v: VarId) -> &ComplexRational {
        &self.assignment[&v]
    }
}

/// Solves the split system along the recurrences
/// `y_{1,j+1} = y_{1,j}²/y_{1,j−1}`, `y_{j+1,1} = y_{j,1}²/y_{j−1,1}`,
/// closing with `c = y_{1,n}²/y_{1,n−1}`, `c̲ = y_{n−1,1}/y_{n,1}²`, and checks
/// every split equation vanishes exactly.
pub fn solve_split_leading(n: usize) -> Result<SplitSolution, PotentialError> {
    if n < 3 {
        return Err(PotentialError::TooSmall(n));
    }
    let a = cint(1);
    let a_under = cint(-1);
    let mut y: BTreeMap<VarId, ComplexRational> = BTreeMap::new();
    for v in [VarId::Row(1), VarId::Row(2), VarId::Col(2), VarId::Col(3)] {
        y.insert(v, cint(-1));
    }
    y.insert(VarId::Row(3), cint(1));
    for j in 3..n {
        let next = &y[&VarId::Row(j)] * &y[&VarId::Row(j)] / &y[&VarId::Row(j - 1)];
        y.insert(VarId::Row(j + 1), next);
        let next = &y[&VarId::Col(j)] * &y[&VarId::Col(j)] / &y[&VarId::Col(j - 1)];
        y.insert(VarId::Col(j + 1), next);
    }
    let c = &y[&VarId::Row(n)] * &y[&VarId::Row(n)] / &y[&VarId::Row(n - 1)];
    let c_under = &y[&VarId::Col(n - 1)] / (&y[&VarId::Col(n)] * &y[&VarId::Col(n)]);

    let bulk = BulkParams::new(constant(c.clone()), constant(c_under.clone()), a.clone(), a_under.clone())?;
    let system = split_decompose(n, &bulk)?;
    let values: BTreeMap<VarId, NovikovElement> = y.iter().map(|(v, z)| (*v, constant(z.clone()))).collect();
    for (name, eq) in system.equations()? {
        let r = eq.evaluate(&values)?;
        if !r.is_zero() {
            return Err(PotentialError::VerificationFailed(format!(
                "{name} = {} at the recurrence solution",
                complex_string(&r.constant_term())
            )));
        }
    }
    Ok(SplitSolution { n, assignment: y, c, c_under, a, a_under })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n3_solution() {
        let s = solve_split_leading(3).unwrap();
        let expected = [
            (VarId::Row(1), -1),
            (VarId::Row(2), -1),
            (VarId::Row(3), 1),
            (VarId::Col(2), -1),
            (VarId::Col(3), -1),
        ];
        for (v, x) in expected {
            assert_eq!(s.value(v), &cint(x), "{v}");
        }
        assert_eq!((s.c.clone(), s.c_under.clone()), (cint(-1), cint(-1)));
        assert_eq!((s.a.clone(), s.a_under.clone()), (cint(1), cint(-1)));
    }

    #[test]
    fn closed_form_general_n() {
        for n in 3..=10 {
            let s = solve_split_leading(n).unwrap();
            // y_{1,1} is also y_{j,1} at j = 1, and takes the column value
            assert_eq!(s.value(VarId::Row(1)), &cint(-1));
            for j in 2..=n {
                let sign = if (j - 1) % 2 == 0 { 1 } else { -1 };
                assert_eq!(s.value(VarId::Row(j)), &cint(sign));
            }
            for j in 2..=n {
                assert_eq!(s.value(VarId::Col(j)), &cint(-1));
            }
            assert_eq!(s.c, cint(if n % 2 == 0 { 1 } else { -1 }));
            assert_eq!(s.c_under, cint(-1));
        }
        assert_eq!(solve_split_leading(2).unwrap_err(), PotentialError::TooSmall(2));
    }

    #[test]
    fn decomposition_shape() {
        let b = BulkParams::trivial(int(5));
        let n3 = split_decompose(3, &b).unwrap();
        assert_eq!(n3.corner.monomials.len(), 4);
        assert_eq!(n3.row.monomials.len(), 3);
        assert_eq!(n3.col.monomials.len(), 3);
        let n4 = split_decompose(4, &b).unwrap();
        // c-term, two quotients y13/y12 and y14/y13, and the a-term
        assert_eq!(n4.row.monomials.len(), 4);
        assert!(n4.row.monomials.iter().chain(&n4.corner.monomials).all(|m| m.coeff.valuation().finite() == Some(&int(0))));
        assert_eq!(n4.equations().unwrap().len(), 3 + 2 * 3);
    }

    #[test]
    fn wrong_seed_is_detected() {
        let s = solve_split_leading(4).unwrap();
        let bulk = BulkParams::new(constant(s.c.clone()), constant(s.c_under.clone()), s.a.clone(), s.a_under.clone()).unwrap();
        let system = split_decompose(4, &bulk).unwrap();
        let mut values: BTreeMap<VarId, NovikovElement> =
            s.assignment.iter().map(|(v, z)| (*v, constant(z.clone()))).collect();
        values.insert(VarId::Row(3), constant(cint(-1)));
        let failures = system
            .equations()
            .unwrap()
            .into_iter()
            .filter(|(_, eq)| !eq.evaluate(&values).unwrap().is_zero())
            .count();
        assert!(failures > 0);
    }
}
