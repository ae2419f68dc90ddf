//! Plücker coordinates `(p_1, …, p_{n+1}; p_{1̲}, …, p_{n+1̲})`, the quadric
//! relation, its toric degeneration and the moment map.

use num_traits::Zero;

use super::{GZPoint, PolytopeError, Weight};
use crate::scalar::{modulus_sq, real, ComplexRational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PluckerVector {
    p: Vec<ComplexRational>,
    p_under: Vec<ComplexRational>,
}

impl PluckerVector {
    pub fn new(p: Vec<ComplexRational>, p_under: Vec<ComplexRational>) -> Result<Self, PolytopeError> {
        if p.len() != p_under.len() || p.len() < 3 {
            return Err(PolytopeError::PluckerLength(p.len(), p_under.len()));
        }
        if p.iter().chain(&p_under).all(|z| z.is_zero()) {
            return Err(PolytopeError::PluckerZero);
        }
        Ok(PluckerVector { p, p_under })
    }

    pub fn n(&self) -> usize {
        self.p.len() - 1
    }

    pub fn p(&self) -> &[ComplexRational] {
        &self.p
    }

    pub fn p_under(&self) -> &[ComplexRational] {
        &self.p_under
    }

    /// `(−1)^{i+1} p_i p_{i̲}` for `i = 1..=n+1`.
    fn signed_products(&self) -> impl Iterator<Item = ComplexRational> + '_ {
        self.p.iter().zip(&self.p_under).enumerate().map(|(k, (a, b))| {
            let prod = a * b;
            if k % 2 == 0 {
                prod
            } else {
                -prod
            }
        })
    }
}

/// `Σ_{i=1}^{n+1} (−1)^{i+1} p_i p_{i̲}`.
pub fn plucker_residual(pv: &PluckerVector) -> ComplexRational {
    pv.signed_products().fold(ComplexRational::zero(), |acc, z| acc + z)
}

/// `p_1 p_{1̲} − p_2 p_{2̲} + s·Σ_{i≥3} (−1)^{i+1} p_i p_{i̲}`.
pub fn degeneration_residual(pv: &PluckerVector, s: &Rational) -> ComplexRational {
    let mut lead = ComplexRational::zero();
    let mut tail = ComplexRational::zero();
    for (k, z) in pv.signed_products().enumerate() {
        if k < 2 {
            lead += z;
        } else {
            tail += z;
        }
    }
    lead + tail * real(s.clone())
}

/// `u_{1,j} = λ2 + (λ1−λ2) Σ_{i≤j} |p_i|²/‖p‖²` for `j ≥ 2`,
/// `u_{j,1} = λ2 + (λ3−λ2) Σ_{i≤j} |p_{i̲}|²/‖p̲‖²` for `j ≥ 2`,
/// `u_{1,1} = λ2 + (λ1−λ2)|p_1|²/‖p‖² + (λ3−λ2)|p_{1̲}|²/‖p̲‖²`.
pub fn moment_map_eval(pv: &PluckerVector, w: &Weight) -> Result<GZPoint, PolytopeError> {
    let weights = |v: &[ComplexRational]| -> Vec<Rational> { v.iter().map(modulus_sq).collect() };
    let (a, b) = (weights(&pv.p), weights(&pv.p_under));
    let norm_a: Rational = a.iter().sum();
    let norm_b: Rational = b.iter().sum();
    if norm_a.is_zero() {
        return Err(PolytopeError::ZeroNorm("p"));
    }
    if norm_b.is_zero() {
        return Err(PolytopeError::ZeroNorm("p_under"));
    }
    let n = pv.n();
    let up = &w.lambda1 - &w.lambda2;
    let down = &w.lambda3 - &w.lambda2;
    let partial = |v: &[Rational], j: usize| -> Rational { v[..j].iter().sum() };
    let mut u_row = Vec::with_capacity(n);
    u_row.push(&w.lambda2 + &up * &a[0] / &norm_a + &down * &b[0] / &norm_b);
    for j in 2..=n {
        u_row.push(&w.lambda2 + &up * partial(&a, j) / &norm_a);
    }
    let u_col = (2..=n).map(|j| &w.lambda2 + &down * partial(&b, j) / &norm_b).collect();
    Ok(GZPoint { u_row, u_col })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::contains;
    use crate::scalar::{cint, int, rat};
    use num_complex::Complex;

    fn vec_of(v: &[i64]) -> Vec<ComplexRational> {
        v.iter().map(|&x| cint(x)).collect()
    }

    fn pv(p: &[i64], q: &[i64]) -> PluckerVector {
        PluckerVector::new(vec_of(p), vec_of(q)).unwrap()
    }

    #[test]
    fn residual_examples() {
        assert!(plucker_residual(&pv(&[1, 0, 0, 0], &[0, 1, 0, 0])).is_zero());
        assert!(plucker_residual(&pv(&[1, 1, 0, 0], &[1, 1, 0, 0])).is_zero());
        assert_eq!(plucker_residual(&pv(&[1, 0, 0, 0], &[1, 0, 0, 0])), cint(1));
        let v = pv(&[1, 2, 3, 4], &[5, 6, 7, 8]);
        // 5 − 12 + 21 − 32
        assert_eq!(plucker_residual(&v), cint(-18));
        assert_eq!(degeneration_residual(&v, &int(1)), plucker_residual(&v));
        assert_eq!(degeneration_residual(&v, &int(0)), cint(-7));
        assert!(degeneration_residual(&pv(&[1, 1, 0, 0], &[1, 1, 0, 0]), &int(0)).is_zero());
        assert!(degeneration_residual(&pv(&[0, 0, 1, 0], &[0, 0, 1, 0]), &int(0)).is_zero());
    }

    #[test]
    fn construction_checks() {
        assert_eq!(
            PluckerVector::new(vec_of(&[0, 0, 0]), vec_of(&[0, 0, 0])).unwrap_err(),
            PolytopeError::PluckerZero
        );
        assert!(PluckerVector::new(vec_of(&[1, 0, 0]), vec_of(&[1, 0])).is_err());
        assert!(PluckerVector::new(vec_of(&[1, 0]), vec_of(&[1, 0])).is_err());
    }

    #[test]
    fn moment_map_examples() {
        let w = Weight::monotone(3);
        let u = moment_map_eval(&pv(&[1, 0, 0, 0], &[0, 0, 0, 1]), &w).unwrap();
        assert_eq!(u.coords(), vec![int(6), int(6), int(6), int(0), int(0)]);
        assert!(contains(&w, &u).unwrap());

        let u = moment_map_eval(&pv(&[1, 1, 1, 1], &[1, 1, 1, 1]), &w).unwrap();
        assert_eq!(u.row(2), &rat(3, 1));
        assert_eq!(u.row(3), &rat(9, 2));
        assert_eq!(u.col(2), &rat(-3, 1));
        assert_eq!(u.col(3), &rat(-9, 2));
        assert_eq!(u.row(1), &int(0));

        let u = moment_map_eval(&pv(&[2, 0, 0, 0], &[3, 0, 0, 0]), &w).unwrap();
        assert_eq!(u.row(1), &(&w.lambda2 + (&w.lambda1 - &w.lambda2) + (&w.lambda3 - &w.lambda2)));

        assert_eq!(
            moment_map_eval(&pv(&[0, 0, 0, 0], &[0, 0, 0, 1]), &w).unwrap_err(),
            PolytopeError::ZeroNorm("p")
        );
    }

    #[test]
    fn moment_map_uses_squared_moduli() {
        let w = Weight::monotone(2);
        let i = Complex::new(int(0), int(1));
        let v = PluckerVector::new(vec![i.clone(), cint(1), cint(0)], vec![cint(1), i, cint(0)]).unwrap();
        let u = moment_map_eval(&v, &w).unwrap();
        // |i|² = 1, so this is the uniform split on the first two entries
        assert_eq!(u.row(1), &int(0));
        assert_eq!(u.row(2), &int(2));
        assert_eq!(u.col(2), &int(-2));
    }
}
