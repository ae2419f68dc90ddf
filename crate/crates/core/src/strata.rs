//! Dimension bookkeeping for the boundary of the divisor pseudocycle: the
//! faces `f = {u_{1,n} = λ1}` and `g = f ∩ {u_{1,1} = u_{1,2} = u_{2,1} = λ2}`,
//! the stratification of `g` by its faces, and every integer inequality the
//! homology-vanishing argument relies on.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::face::{FaceDescriptor, Filling};
use crate::polytope::{self, fiber_type, FiberType, GZPoint, PolytopeError, Weight};
use crate::par::Strategy;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StrataError {
    #[error("dimension ledger needs n >= 3, got {0}")]
    TooSmall(usize),
    #[error(transparent)]
    Polytope(#[from] PolytopeError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">=")]
    Ge,
}

impl Relation {
    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Ge => lhs >= rhs,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Lt => "<",
            Relation::Ge => ">=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedCheck {
    pub name: String,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub passed: bool,
}

impl NamedCheck {
    pub fn new(name: impl Into<String>, lhs: i64, relation: Relation, rhs: i64) -> Self {
        NamedCheck { name: name.into(), lhs, relation, rhs, passed: relation.holds(lhs, rhs) }
    }
}

impl fmt::Display for NamedCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "[{mark}] {}: {} {} {}", self.name, self.lhs, self.relation.symbol(), self.rhs)
    }
}

/// One relative-interior stratum `g_{i,j}` of `g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StratumReport {
    pub face_id: FaceDescriptor,
    pub i: usize,
    pub j: usize,
    pub sphere_dim: usize,
    pub torus_rank: usize,
    /// `dim g_{i,j} + dim(fiber)`.
    pub total_fiber_dim: usize,
    pub sample_point: GZPoint,
}

impl StratumReport {
    pub fn label(&self) -> String {
        format!("g[{},{}]", self.i, self.j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub dim_m: usize,
    pub dim_f: usize,
    pub dim_g: usize,
    pub dim_preimage_g: usize,
    pub codimension: usize,
    pub strata: Vec<StratumReport>,
    pub checks: Vec<NamedCheck>,
    pub passed: bool,
}

/// Topological factors of a fiber, for Betti numbers via Künneth.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Point,
    /// `S^d`; `S^0` is two points.
    Sphere(usize),
    Torus(usize),
}

/// Betti numbers `b_0, b_1, …` of a product of factors.
pub fn poincare_polynomial(factors: &[Factor]) -> Vec<u64> {
    let mut poly = vec![1u64];
    for f in factors {
        let factor: Vec<u64> = match *f {
            Factor::Point => vec![1],
            Factor::Sphere(0) => vec![2],
            Factor::Sphere(d) => {
                let mut v = vec![0; d + 1];
                v[0] = 1;
                v[d] = 1;
                v
            }
            Factor::Torus(i) => {
                let mut v = vec![1u64];
                for _ in 0..i {
                    let mut next = vec![0; v.len() + 1];
                    for (k, c) in v.iter().enumerate() {
                        next[k] += c;
                        next[k + 1] += c;
                    }
                    v = next;
                }
                v
            }
        };
        let mut prod = vec![0u64; poly.len() + factor.len() - 1];
        for (a, x) in poly.iter().enumerate() {
            for (b, y) in factor.iter().enumerate() {
                prod[a + b] += x * y;
            }
        }
        poly = prod;
    }
    poly
}

/// Largest degree with a nonzero Betti number.
fn top_degree(betti: &[u64]) -> usize {
    betti.iter().rposition(|&b| b != 0).unwrap_or(0)
}

fn sphere_factor(d: usize) -> Factor {
    if d == 0 {
        Factor::Point
    } else {
        Factor::Sphere(d)
    }
}

fn face_f(n: usize) -> Vec<(Filling, Filling)> {
    vec![(Filling::Lambda1, Filling::Row(n))]
}

fn face_g(n: usize) -> Vec<(Filling, Filling)> {
    let mut pairs = face_f(n);
    pairs.extend([
        (Filling::Row(2), Filling::Row(1)),
        (Filling::Row(1), Filling::Lambda2),
        (Filling::Lambda2, Filling::Col(2)),
    ]);
    pairs
}

fn descriptor(n: usize, pairs: Vec<(Filling, Filling)>) -> FaceDescriptor {
    let classes = FaceDescriptor::classes_from_pairs(pairs);
    let dimension = 2 * n - 1 - polytope::equality_rank(n, &classes);
    FaceDescriptor { n, dimension, classes }
}

/// Faces of `Δ_λ` contained in `g`, labelled `(i, j)` with `i` the dimension
/// and `j` counting from 1 in descriptor order.
pub fn g_stratification(n: usize) -> Result<Vec<StratumReport>, StrataError> {
    if n < 3 {
        return Err(StrataError::TooSmall(n));
    }
    let w = Weight::monotone(n);
    let g = descriptor(n, face_g(n));
    let mut inside = polytope::faces_within(&w, &g, Strategy::default())?;
    inside.sort_by(|a, b| (a.face.dimension, &a.face).cmp(&(b.face.dimension, &b.face)));
    let mut out = Vec::with_capacity(inside.len());
    let mut j = 0;
    let mut last_dim = usize::MAX;
    for r in inside {
        if r.face.dimension != last_dim {
            last_dim = r.face.dimension;
            j = 0;
        }
        j += 1;
        let FiberType { sphere_dim, torus_rank, .. } = fiber_type(&w, &r.interior)?;
        let i = r.face.dimension;
        out.push(StratumReport {
            face_id: r.face,
            i,
            j,
            sphere_dim,
            torus_rank,
            total_fiber_dim: i + sphere_dim + torus_rank,
            sample_point: r.interior,
        });
    }
    Ok(out)
}

/// Per-stratum bound on `R_{i,j} × 𝒮_{i,j} × T^i` with `R_{i,j} ≅ S^{i−1}`.
/// Strata with `i = 0` carry no `R_{i,j}` and are skipped.
pub fn intersection_bound_check(n: usize) -> Result<Vec<NamedCheck>, StrataError> {
    let strata = g_stratification(n)?;
    Ok(intersection_checks(n, &strata))
}

fn intersection_checks(n: usize, strata: &[StratumReport]) -> Vec<NamedCheck> {
    let n = n as i64;
    let vanish_from = 4 * n - 7;
    let mut checks = Vec::new();
    for s in strata.iter().filter(|s| s.i >= 1) {
        let (i, d) = (s.i as i64, s.sphere_dim as i64);
        let label = s.label();
        let lhs = (i - 1) + d + i;
        checks.push(NamedCheck::new(
            format!("{label}: dim(S^(i-1) x S x T^i) <= (i-1) + (2n-1)"),
            lhs,
            Relation::Le,
            (i - 1) + (2 * n - 1),
        ));
        checks.push(NamedCheck::new(
            format!("{label}: (i-1) + (2n-1) <= (2n-5-1) + (2n-1)"),
            (i - 1) + (2 * n - 1),
            Relation::Le,
            (2 * n - 6) + (2 * n - 1),
        ));
        let betti = poincare_polynomial(&[Factor::Sphere(s.i - 1), sphere_factor(s.sphere_dim), Factor::Torus(s.i)]);
        checks.push(NamedCheck::new(
            format!("{label}: top nonzero Betti degree of S^(i-1) x S x T^i < 4n-7"),
            top_degree(&betti) as i64,
            Relation::Lt,
            vanish_from,
        ));
    }
    checks
}

/// Full dimension ledger for `n ≥ 3` with the monotone weight.
pub fn boundary_report(n: usize) -> Result<VerificationReport, StrataError> {
    if n < 3 {
        return Err(StrataError::TooSmall(n));
    }
    let n_i = n as i64;
    let w = Weight::monotone(n);
    let f = descriptor(n, face_f(n));
    let g = descriptor(n, face_g(n));
    let realized = |d: &FaceDescriptor| polytope::face_record(&w, d).map(|r| r.is_some());
    let (f_realized, g_realized) = (realized(&f)?, realized(&g)?);
    let strata = g_stratification(n)?;

    let dim_m = 2 * (2 * n - 1) - 2;
    let interior_g = strata.iter().find(|s| s.face_id == g);
    let sphere_on_g = interior_g.map_or(0, |s| s.sphere_dim);
    let dim_preimage_g = strata.iter().map(|s| s.total_fiber_dim).max().unwrap_or(0);

    let mut checks = vec![
        NamedCheck::new("f is a face of the polytope", f_realized as i64, Relation::Eq, 1),
        NamedCheck::new("g is a face of the polytope", g_realized as i64, Relation::Eq, 1),
        NamedCheck::new("dim M = 2(2n-1) - 2 = 4n-4", dim_m as i64, Relation::Eq, 4 * n_i - 4),
        NamedCheck::new("dim f = 2n-2", f.dimension as i64, Relation::Eq, 2 * n_i - 2),
        NamedCheck::new("dim g = dim f - 3", g.dimension as i64, Relation::Eq, f.dimension as i64 - 3),
        NamedCheck::new("dim g = 2n-5", g.dimension as i64, Relation::Eq, 2 * n_i - 5),
        NamedCheck::new("sphere factor over the interior of g is S^3", sphere_on_g as i64, Relation::Eq, 3),
        NamedCheck::new(
            "dim preimage(g) = 2 dim g + 3",
            dim_preimage_g as i64,
            Relation::Eq,
            2 * g.dimension as i64 + 3,
        ),
        NamedCheck::new("dim preimage(g) = 4n-7", dim_preimage_g as i64, Relation::Eq, 4 * n_i - 7),
        NamedCheck::new(
            "codim of preimage(g) in M = 3",
            dim_m as i64 - dim_preimage_g as i64,
            Relation::Eq,
            3,
        ),
    ];
    let max_i = strata.iter().map(|s| s.i).max().unwrap_or(0);
    checks.push(NamedCheck::new("strata dimensions reach dim g", max_i as i64, Relation::Eq, 2 * n_i - 5));
    for i in 0..=2 * n - 5 {
        let count = strata.iter().filter(|s| s.i == i).count();
        checks.push(NamedCheck::new(format!("g has faces of dimension {i}"), count as i64, Relation::Ge, 1));
    }

    for s in &strata {
        let label = s.label();
        let (i, d) = (s.i as i64, s.sphere_dim as i64);
        checks.push(NamedCheck::new(format!("{label}: torus rank = i"), s.torus_rank as i64, Relation::Eq, i));
        checks.push(NamedCheck::new(format!("{label}: dim S + i <= 2n-1 (isotropy)"), d + i, Relation::Le, 2 * n_i - 1));
        let betti = poincare_polynomial(&[sphere_factor(s.sphere_dim), Factor::Torus(s.i)]);
        checks.push(NamedCheck::new(
            format!("{label}: top nonzero Betti degree of S x T^i < 4n-7"),
            top_degree(&betti) as i64,
            Relation::Lt,
            4 * n_i - 7,
        ));
        if s.i == 0 {
            checks.push(NamedCheck::new(
                format!("{label}: vertex fiber dim < 4n-6 (base step)"),
                d,
                Relation::Lt,
                4 * n_i - 6,
            ));
        }
    }
    if n > 3 {
        checks.push(NamedCheck::new("2n-1 < 4n-7", 2 * n_i - 1, Relation::Lt, 4 * n_i - 7));
    } else {
        checks.extend(census_n3(&strata));
    }

    checks.extend(intersection_checks(n, &strata));

    checks.push(NamedCheck::new(
        "Mayer-Vietoris: neighbourhood vanishing threshold <= union threshold",
        4 * n_i - 7,
        Relation::Le,
        4 * n_i - 6,
    ));
    checks.push(NamedCheck::new(
        "Mayer-Vietoris: connecting map lands in vanishing range",
        (4 * n_i - 6) - 1,
        Relation::Ge,
        4 * n_i - 7,
    ));
    checks.push(NamedCheck::new(
        "pseudocycle: union vanishes for l > dim M - 2",
        4 * n_i - 6,
        Relation::Le,
        dim_m as i64 - 2 + 1,
    ));
    checks.push(NamedCheck::new(
        "pseudocycle: dim preimage(g) <= dim M - 2",
        dim_preimage_g as i64,
        Relation::Le,
        dim_m as i64 - 2,
    ));

    let passed = checks.iter().all(|c| c.passed);
    Ok(VerificationReport {
        n,
        dim_m,
        dim_f: f.dimension,
        dim_g: g.dimension,
        dim_preimage_g,
        codimension: dim_m - dim_preimage_g,
        strata,
        checks,
        passed,
    })
}

/// For `n = 3`, `g` is the segment `u_{3,1} ∈ [−6, 0]`: a point fiber factor at
/// `u_{3,1} = 0`, `S³` at `u_{3,1} = −6` and over the open segment.
fn census_n3(strata: &[StratumReport]) -> Vec<NamedCheck> {
    let mut checks = vec![NamedCheck::new("n=3: g has three strata", strata.len() as i64, Relation::Eq, 3)];
    for s in strata {
        let u31 = s.sample_point.col(3);
        let (where_, expected) = if *u31 == crate::scalar::int(0) {
            ("u_{3,1} = 0", 0)
        } else if *u31 == crate::scalar::int(-6) {
            ("u_{3,1} = -6", 3)
        } else {
            ("-6 < u_{3,1} < 0", 3)
        };
        checks.push(NamedCheck::new(
            format!("n=3: sphere factor dim at {where_}"),
            s.sphere_dim as i64,
            Relation::Eq,
            expected,
        ));
    }
    checks
}
