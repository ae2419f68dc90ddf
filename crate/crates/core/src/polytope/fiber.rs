//! Fiber topology over points of `Δ_λ` and the distinguished points on the
//! monotone segment.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{active_face, require_inside, GZPoint, PolytopeError, Weight};
use crate::face::{FaceDescriptor, Filling};
use crate::scalar::{int, short_string, Rational};

/// Fiber `𝒮 × T^k` with `𝒮` a point (`sphere_dim = 0`) or `S^{sphere_dim}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FiberType {
    pub sphere_dim: usize,
    pub torus_rank: usize,
    pub is_lagrangian: bool,
}

impl FiberType {
    pub fn dimension(&self) -> usize {
        self.sphere_dim + self.torus_rank
    }
}

impl fmt::Display for FiberType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sphere = if self.sphere_dim == 0 { "point".to_string() } else { format!("S^{}", self.sphere_dim) };
        let kind = if self.is_lagrangian { "Lagrangian" } else { "isotropic" };
        write!(f, "{sphere} x T^{} ({kind})", self.torus_rank)
    }
}

/// The `j` for which condition `(j)` holds at `u`, using the sentinels
/// `u_{1,n+1} = λ1` and `u_{n+1,1} = λ3`.
pub fn condition_j(w: &Weight, u: &GZPoint) -> Result<Option<usize>, PolytopeError> {
    require_inside(w, u)?;
    let n = u.n();
    let row = |k: usize| if k == n + 1 { &w.lambda1 } else { u.row(k) };
    let col = |k: usize| if k == n + 1 { &w.lambda3 } else { u.col(k) };
    Ok((1..n).find(|&j| {
        (1..=j + 1).all(|k| row(k) == &w.lambda2 && col(k) == &w.lambda2)
            && row(j + 2) > row(j + 1)
            && col(j + 1) > col(j + 2)
    }))
}

pub fn fiber_type(w: &Weight, u: &GZPoint) -> Result<FiberType, PolytopeError> {
    let sphere_dim = condition_j(w, u)?.map_or(0, |j| 2 * j + 1);
    let torus_rank = active_face(w, u)?.dimension;
    Ok(FiberType {
        sphere_dim,
        torus_rank,
        is_lagrangian: sphere_dim + torus_rank == 2 * u.n() - 1,
    })
}

/// The face `f_j`: `λ2 = u_{1,j+1} = … = u_{1,1} = u_{2,1} = … = u_{j+1,1}`;
/// `f_0` is the whole polytope.
pub fn lagrangian_face(n: usize, j: usize) -> Result<FaceDescriptor, PolytopeError> {
    if n < 2 {
        return Err(PolytopeError::TooSmall { n, min: 2 });
    }
    if j >= n {
        return Err(PolytopeError::IndexOutOfRange { j, max: n - 1 });
    }
    if j == 0 {
        return Ok(FaceDescriptor { n, dimension: 2 * n - 1, classes: vec![] });
    }
    let mut class: Vec<Filling> = (1..=j + 1).map(Filling::Row).collect();
    class.push(Filling::Lambda2);
    class.extend((2..=j + 1).map(Filling::Col));
    class.sort();
    Ok(FaceDescriptor { n, dimension: 2 * n - 2 * j - 2, classes: vec![class] })
}

fn symmetric_point(n: usize, row: impl Fn(usize) -> Rational) -> GZPoint {
    GZPoint {
        u_row: (1..=n).map(&row).collect(),
        u_col: (2..=n).map(|k| -row(k)).collect(),
    }
}

/// Monotone fibers: `u_{1,k} = −u_{k,1} = 0` for `k ≤ j+1`, `(n−1)(k−1)` beyond.
pub fn monotone_point(n: usize, j: usize) -> Result<GZPoint, PolytopeError> {
    if n < 2 {
        return Err(PolytopeError::TooSmall { n, min: 2 });
    }
    if j >= n {
        return Err(PolytopeError::IndexOutOfRange { j, max: n - 1 });
    }
    Ok(symmetric_point(n, |k| {
        if k <= j + 1 {
            Rational::zero()
        } else {
            int(((n - 1) * (k - 1)) as i64)
        }
    }))
}

/// `u₁`: `u_{1,1} = u_{1,2} = u_{2,1} = 0`, `u_{1,k} = −u_{k,1} = n(k−2)` for `k ≥ 3`.
pub fn u1_point(n: usize) -> Result<GZPoint, PolytopeError> {
    if n < 2 {
        return Err(PolytopeError::TooSmall { n, min: 2 });
    }
    Ok(symmetric_point(n, |k| {
        if k <= 2 {
            Rational::zero()
        } else {
            int((n * (k - 2)) as i64)
        }
    }))
}

/// `I_n(t) = (1−t)·u₀ + t·u₁`.
pub fn segment_point(n: usize, t: &Rational) -> Result<GZPoint, PolytopeError> {
    if *t < Rational::zero() || *t > Rational::one() {
        return Err(PolytopeError::ParameterOutOfRange(short_string(t)));
    }
    let u0 = monotone_point(n, 0)?;
    let u1 = u1_point(n)?;
    let s = Rational::one() - t;
    let mix = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| &s * x + t * y).collect()
    };
    Ok(GZPoint {
        u_row: mix(&u0.u_row, &u1.u_row),
        u_col: mix(&u0.u_col, &u1.u_col),
    })
}
