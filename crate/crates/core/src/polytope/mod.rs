//! The Gelfand–Zeitlin polytope `Δ_λ` of `Fl(1,n;n+1)` as an exact interlacing
//! system in the `2n − 1` coordinates `u_{1,1..n}`, `u_{2..n,1}`.

mod fiber;
mod oracle;
mod plucker;

pub use fiber::{
    condition_j, fiber_type, lagrangian_face, monotone_point, segment_point, u1_point, FiberType,
};
pub use oracle::{enumerate_faces, enumerate_faces_with, equality_rank, face_record, faces_within, vertices, FaceRecord};
pub use plucker::{degeneration_residual, moment_map_eval, plucker_residual, PluckerVector};

use std::fmt;

use num_traits::Zero;
use serde::ser::SerializeStruct;
use serde::{Deserialize, Serialize, Serializer};
use thiserror::Error;

use crate::face::{FaceDescriptor, Filling};
use crate::scalar::{fraction_string, int, parse_rational, short_string, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolytopeError {
    #[error("GZ polytope needs n >= {min}, got {n}")]
    TooSmall { n: usize, min: usize },
    #[error("exhaustive face enumeration is limited to n <= 8, got {0}")]
    TooLarge(usize),
    #[error("weight must satisfy lambda1 > lambda2 > lambda3, got ({0}, {1}, {2})")]
    NonDominantWeight(String, String, String),
    #[error("point has {got} coordinates, expected {expected} for n = {n}")]
    DimensionMismatch { n: usize, expected: usize, got: usize },
    #[error("point {0} lies outside the GZ polytope")]
    OutsidePolytope(String),
    #[error("index j = {j} out of range 0..={max}")]
    IndexOutOfRange { j: usize, max: usize },
    #[error("parameter t = {0} outside [0, 1]")]
    ParameterOutOfRange(String),
    #[error("Plücker vector has {0} and {1} entries; both lists need the same length n + 1 >= 3")]
    PluckerLength(usize, usize),
    #[error("Plücker vector is identically zero")]
    PluckerZero,
    #[error("moment map undefined: ||{0}||^2 = 0")]
    ZeroNorm(&'static str),
    #[error("invalid coordinate list: {0}")]
    Parse(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub lambda1: Rational,
    pub lambda2: Rational,
    pub lambda3: Rational,
}

impl Weight {
    pub fn new(lambda1: Rational, lambda2: Rational, lambda3: Rational) -> Result<Self, PolytopeError> {
        if lambda1 > lambda2 && lambda2 > lambda3 {
            Ok(Weight { lambda1, lambda2, lambda3 })
        } else {
            Err(PolytopeError::NonDominantWeight(
                short_string(&lambda1),
                short_string(&lambda2),
                short_string(&lambda3),
            ))
        }
    }

    /// The monotone choice `λ = (n(n−1), 0, −n(n−1))`.
    pub fn monotone(n: usize) -> Self {
        let m = (n * (n - 1)) as i64;
        Weight { lambda1: int(m), lambda2: int(0), lambda3: int(-m) }
    }

    /// Parses `"a,b,c"`.
    pub fn parse(s: &str) -> Result<Self, PolytopeError> {
        let parts = parse_list(s)?;
        match <[Rational; 3]>::try_from(parts) {
            Ok([a, b, c]) => Weight::new(a, b, c),
            Err(v) => Err(PolytopeError::Parse(format!("weight needs 3 entries, got {}", v.len()))),
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            short_string(&self.lambda1),
            short_string(&self.lambda2),
            short_string(&self.lambda3)
        )
    }
}

/// Point of `ℝ^{2n−1}`: `u_row = (u_{1,1}, …, u_{1,n})`, `u_col = (u_{2,1}, …, u_{n,1})`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GZPoint {
    pub u_row: Vec<Rational>,
    pub u_col: Vec<Rational>,
}

impl GZPoint {
    pub fn new(u_row: Vec<Rational>, u_col: Vec<Rational>) -> Result<Self, PolytopeError> {
        let n = u_row.len();
        if n < 2 || u_col.len() + 1 != n {
            return Err(PolytopeError::DimensionMismatch {
                n,
                expected: 2 * n.max(2) - 1,
                got: u_row.len() + u_col.len(),
            });
        }
        Ok(GZPoint { u_row, u_col })
    }

    /// From the canonical coordinate order `u_{1,1}, u_{1,2..n}, u_{2..n,1}`.
    pub fn from_coords(n: usize, coords: Vec<Rational>) -> Result<Self, PolytopeError> {
        if n < 2 || coords.len() != 2 * n - 1 {
            return Err(PolytopeError::DimensionMismatch { n, expected: 2 * n.max(1) - 1, got: coords.len() });
        }
        let mut u_row = coords;
        let u_col = u_row.split_off(n);
        Ok(GZPoint { u_row, u_col })
    }

    pub fn parse(n: usize, csv: &str) -> Result<Self, PolytopeError> {
        GZPoint::from_coords(n, parse_list(csv)?)
    }

    pub fn zero(n: usize) -> Self {
        GZPoint {
            u_row: vec![Rational::zero(); n],
            u_col: vec![Rational::zero(); n - 1],
        }
    }

    pub fn n(&self) -> usize {
        self.u_row.len()
    }

    pub fn coords(&self) -> Vec<Rational> {
        self.u_row.iter().chain(&self.u_col).cloned().collect()
    }

    /// `u_{1,j}`, with `j = 1..=n`.
    pub fn row(&self, j: usize) -> &Rational {
        &self.u_row[j - 1]
    }

    /// `u_{j,1}`, with `j = 1..=n` (`j = 1` is `u_{1,1}`).
    pub fn col(&self, j: usize) -> &Rational {
        if j == 1 {
            &self.u_row[0]
        } else {
            &self.u_col[j - 2]
        }
    }

    pub fn set(&mut self, f: Filling, value: Rational) {
        match f {
            Filling::Row(j) => self.u_row[j - 1] = value,
            Filling::Col(j) => self.u_col[j - 2] = value,
            _ => panic!("weights are not coordinates"),
        }
    }

    /// Value of a filling; weights come from `w`.
    pub fn value<'a>(&'a self, w: &'a Weight, f: Filling) -> &'a Rational {
        match f {
            Filling::Lambda1 => &w.lambda1,
            Filling::Lambda2 => &w.lambda2,
            Filling::Lambda3 => &w.lambda3,
            Filling::Row(j) => self.row(j),
            Filling::Col(j) => self.col(j),
        }
    }

    pub fn expect_n(&self, n: usize) -> Result<(), PolytopeError> {
        if self.n() == n {
            Ok(())
        } else {
            Err(PolytopeError::DimensionMismatch { n, expected: 2 * n - 1, got: self.u_row.len() + self.u_col.len() })
        }
    }
}

impl fmt::Display for GZPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords().iter().map(short_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for GZPoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let render = |v: &[Rational]| v.iter().map(fraction_string).collect::<Vec<_>>();
        let mut st = s.serialize_struct("GZPoint", 2)?;
        st.serialize_field("u_row", &render(&self.u_row))?;
        st.serialize_field("u_col", &render(&self.u_col))?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for GZPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            u_row: Vec<String>,
            u_col: Vec<String>,
        }
        let raw = Raw::deserialize(d)?;
        let parse = |v: Vec<String>| -> Result<Vec<Rational>, D::Error> {
            v.iter()
                .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
                .collect()
        };
        GZPoint::new(parse(raw.u_row)?, parse(raw.u_col)?).map_err(serde::de::Error::custom)
    }
}

fn parse_list(s: &str) -> Result<Vec<Rational>, PolytopeError> {
    s.split(',')
        .map(|p| parse_rational(p).map_err(|e| PolytopeError::Parse(e.to_string())))
        .collect()
}

/// The `2n + 2` interlacing inequalities as `(greater, lesser)` pairs:
/// `λ1 ≥ u_{1,n} ≥ … ≥ u_{1,2} ≥ λ2`, `u_{1,2} ≥ u_{1,1}`, `λ2 ≥ u_{2,1}`,
/// `u_{1,1} ≥ u_{2,1} ≥ … ≥ u_{n,1} ≥ λ3`.
pub fn interlacing_pairs(n: usize) -> Vec<(Filling, Filling)> {
    use Filling::*;
    let mut out = vec![(Lambda1, Row(n))];
    out.extend((2..n).rev().map(|j| (Row(j + 1), Row(j))));
    out.push((Row(2), Lambda2));
    out.push((Row(2), Row(1)));
    out.push((Lambda2, Col(2)));
    out.push((Row(1), Col(2)));
    out.extend((2..n).map(|j| (Col(j), Col(j + 1))));
    out.push((Col(n), Lambda3));
    out
}

pub fn contains(w: &Weight, u: &GZPoint) -> Result<bool, PolytopeError> {
    if u.n() < 2 {
        return Err(PolytopeError::TooSmall { n: u.n(), min: 2 });
    }
    Ok(interlacing_pairs(u.n())
        .into_iter()
        .all(|(a, b)| u.value(w, a) >= u.value(w, b)))
}

fn require_inside(w: &Weight, u: &GZPoint) -> Result<(), PolytopeError> {
    if contains(w, u)? {
        Ok(())
    } else {
        Err(PolytopeError::OutsidePolytope(u.to_string()))
    }
}

/// The face whose relative interior contains `u`.
pub fn active_face(w: &Weight, u: &GZPoint) -> Result<FaceDescriptor, PolytopeError> {
    require_inside(w, u)?;
    let n = u.n();
    let classes = FaceDescriptor::classes_from_pairs(
        interlacing_pairs(n)
            .into_iter()
            .filter(|(a, b)| u.value(w, *a) == u.value(w, *b)),
    );
    let dimension = 2 * n - 1 - equality_rank(n, &classes);
    Ok(FaceDescriptor { n, dimension, classes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use Filling::*;

    fn pt(coords: &[i64]) -> GZPoint {
        let n = (coords.len() + 1) / 2;
        GZPoint::from_coords(n, coords.iter().map(|&c| int(c)).collect()).unwrap()
    }

    #[test]
    fn pair_count() {
        for n in 2..=7 {
            assert_eq!(interlacing_pairs(n).len(), 2 * n + 2);
        }
    }

    #[test]
    fn membership_examples() {
        let w = Weight::monotone(3);
        assert!(contains(&w, &pt(&[0, 2, 4, -2, -4])).unwrap());
        assert!(!contains(&w, &pt(&[0, 2, 7, -2, -4])).unwrap());
        assert!(contains(&w, &pt(&[0, 0, 3, 0, -3])).unwrap());
        assert!(!contains(&w, &pt(&[1, 0, 3, 0, -3])).unwrap());
    }

    #[test]
    fn weight_checks() {
        assert!(Weight::new(int(1), int(1), int(0)).is_err());
        assert_eq!(Weight::parse("6,0,-6").unwrap(), Weight::monotone(3));
        assert!(Weight::parse("6,0").is_err());
        assert!(Weight::parse("0,0,-6").is_err());
    }

    #[test]
    fn active_face_examples() {
        let w = Weight::monotone(3);
        let interior = active_face(&w, &pt(&[0, 2, 4, -2, -4])).unwrap();
        assert!(interior.classes.is_empty());
        assert_eq!(interior.dimension, 5);
        let f1 = active_face(&w, &pt(&[0, 0, 3, 0, -3])).unwrap();
        assert_eq!(f1.classes, vec![vec![Row(2), Row(1), Lambda2, Col(2)]]);
        assert_eq!(f1.dimension, 2);
        assert!(active_face(&w, &pt(&[0, 2, 7, -2, -4])).is_err());
    }

    #[test]
    fn point_parsing_and_json() {
        let u = GZPoint::parse(3, "0, 1, 7/2, -1, -7/2").unwrap();
        assert_eq!(u.row(3), &rat(7, 2));
        assert_eq!(u.col(3), &rat(-7, 2));
        assert_eq!(u.col(1), &int(0));
        let json = serde_json::to_string(&u).unwrap();
        assert_eq!(json, r#"{"u_row":["0/1","1/1","7/2"],"u_col":["-1/1","-7/2"]}"#);
        let back: GZPoint = serde_json::from_str(&json).unwrap();
        assert_eq!(back, u);
        assert!(GZPoint::parse(3, "0,1,2").is_err());
        let w = Weight::monotone(4);
        assert!(matches!(
            contains(&w, &u).map(|_| ()).and_then(|_| u.expect_n(4)),
            Err(PolytopeError::DimensionMismatch { .. })
        ));
    }
}
