//! Exhaustive face oracle: every subset of the interlacing inequalities is
//! tried as an equality pattern; the realizable ones are exactly the faces.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};

use super::{active_face, interlacing_pairs, GZPoint, PolytopeError, Weight};
use crate::face::{FaceDescriptor, Filling, FillingClasses};
use crate::par::{self, Strategy};
use crate::scalar::{int, Rational};

const MAX_ORACLE_N: usize = 8;

/// A face together with a point of its relative interior.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceRecord {
    pub face: FaceDescriptor,
    pub interior: GZPoint,
}

/// Rank of the linear system `a = b` for consecutive members of each class,
/// by exact Gaussian elimination over the `2n − 1` coordinates.
pub fn equality_rank(n: usize, classes: &[Vec<Filling>]) -> usize {
    let coords = Filling::coordinates(n);
    let column: BTreeMap<Filling, usize> = coords.iter().enumerate().map(|(i, f)| (*f, i)).collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for class in classes {
        for w in class.windows(2) {
            let mut row = vec![Rational::zero(); coords.len()];
            if let Some(&i) = column.get(&w[0]) {
                row[i] += Rational::one();
            }
            if let Some(&i) = column.get(&w[1]) {
                row[i] -= Rational::one();
            }
            rows.push(row);
        }
    }
    let mut rank = 0;
    for col in 0..coords.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = &row[col] / &pivot_row[col];
                for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    *x -= &factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Tests one equality pattern; returns the face and an interior point if the
/// pattern is exactly the active set of some point of `Δ_λ`.
fn realize(w: &Weight, n: usize, pairs: &[(Filling, Filling)], mask: u64) -> Option<FaceRecord> {
    let mut uf = FillingClasses::default();
    for f in Filling::all(n) {
        uf.find(f);
    }
    for (k, &(a, b)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 1 {
            uf.union(a, b);
        }
    }
    // a strict pair inside a class means the pattern is not closed
    for (k, &(a, b)) in pairs.iter().enumerate() {
        if mask >> k & 1 == 0 && uf.find(a) == uf.find(b) {
            return None;
        }
    }
    let weights = [Filling::Lambda1, Filling::Lambda2, Filling::Lambda3];
    let weight_roots: BTreeSet<Filling> = weights.iter().map(|&l| uf.find(l)).collect();
    if weight_roots.len() < 3 {
        return None;
    }

    // quotient order: strict pairs plus λ1 > λ2 > λ3
    let mut succ: BTreeMap<Filling, BTreeSet<Filling>> = BTreeMap::new();
    let mut indegree: BTreeMap<Filling, usize> = BTreeMap::new();
    let roots: BTreeSet<Filling> = Filling::all(n).into_iter().map(|f| uf.find(f)).collect();
    for r in &roots {
        indegree.insert(*r, 0);
    }
    let strict = pairs
        .iter()
        .enumerate()
        .filter(|(k, _)| mask >> k & 1 == 0)
        .map(|(_, p)| *p)
        .chain([(Filling::Lambda1, Filling::Lambda2), (Filling::Lambda2, Filling::Lambda3)]);
    for (a, b) in strict {
        let (ra, rb) = (uf.find(a), uf.find(b));
        if succ.entry(ra).or_default().insert(rb) {
            *indegree.get_mut(&rb).unwrap() += 1;
        }
    }
    let mut ready: BTreeSet<Filling> = indegree.iter().filter(|(_, d)| **d == 0).map(|(r, _)| *r).collect();
    let mut order = Vec::with_capacity(roots.len());
    while let Some(r) = ready.pop_first() {
        order.push(r);
        for s in succ.get(&r).into_iter().flatten() {
            let d = indegree.get_mut(s).unwrap();
            *d -= 1;
            if *d == 0 {
                ready.insert(*s);
            }
        }
    }
    if order.len() != roots.len() {
        return None;
    }

    // strictly decreasing values along the linear extension, pinned at the weights
    let constant_of = |root: Filling, uf: &mut FillingClasses| -> Option<Rational> {
        weights
            .iter()
            .find(|&&l| uf.find(l) == root)
            .map(|&l| match l {
                Filling::Lambda1 => w.lambda1.clone(),
                Filling::Lambda2 => w.lambda2.clone(),
                _ => w.lambda3.clone(),
            })
    };
    let pinned: Vec<(usize, Rational)> = order
        .iter()
        .enumerate()
        .filter_map(|(i, r)| constant_of(*r, &mut uf).map(|v| (i, v)))
        .collect();
    let mut values: BTreeMap<Filling, Rational> = BTreeMap::new();
    for (i, r) in order.iter().enumerate() {
        let before = pinned.iter().rev().find(|(p, _)| *p <= i);
        let after = pinned.iter().find(|(p, _)| *p >= i);
        let v = match (before, after) {
            (Some((p, hi)), _) if *p == i => hi.clone(),
            (Some((p, hi)), Some((q, lo))) => {
                let step = (hi - lo) / int((q - p) as i64);
                hi - step * int((i - p) as i64)
            }
            (None, Some((q, lo))) => lo + int((q - i) as i64),
            (Some((p, hi)), None) => hi - int((i - p) as i64),
            (None, None) => unreachable!("weights are always pinned"),
        };
        values.insert(*r, v);
    }
    let mut point = GZPoint::zero(n);
    for f in Filling::coordinates(n) {
        let r = uf.find(f);
        point.set(f, values[&r].clone());
    }

    let expected = uf.into_classes();
    let face = active_face(w, &point).ok()?;
    if face.classes != expected {
        return None;
    }
    Some(FaceRecord { face, interior: point })
}

pub fn enumerate_faces(w: &Weight, n: usize) -> Result<Vec<FaceRecord>, PolytopeError> {
    enumerate_faces_with(w, n, Strategy::default())
}

/// All faces of `Δ_λ`, sorted by descriptor.
pub fn enumerate_faces_with(w: &Weight, n: usize, strategy: Strategy) -> Result<Vec<FaceRecord>, PolytopeError> {
    if n < 2 {
        return Err(PolytopeError::TooSmall { n, min: 2 });
    }
    if n > MAX_ORACLE_N {
        return Err(PolytopeError::TooLarge(n));
    }
    let pairs = interlacing_pairs(n);
    let mut out = par::filter_map_range(strategy, 1u64 << pairs.len(), |mask| realize(w, n, &pairs, mask));
    out.sort_by(|a, b| a.face.cmp(&b.face));
    Ok(out)
}

fn pattern_mask(pairs: &[(Filling, Filling)], face: &FaceDescriptor) -> u64 {
    pairs
        .iter()
        .enumerate()
        .filter(|(_, &(a, b))| face.are_equal(a, b))
        .fold(0, |m, (k, _)| m | 1 << k)
}

/// The record of `face` if it is a face of `Δ_λ`.
pub fn face_record(w: &Weight, face: &FaceDescriptor) -> Result<Option<FaceRecord>, PolytopeError> {
    let n = face.n;
    if n < 2 {
        return Err(PolytopeError::TooSmall { n, min: 2 });
    }
    let pairs = interlacing_pairs(n);
    Ok(realize(w, n, &pairs, pattern_mask(&pairs, face)).filter(|r| &r.face == face))
}

/// Faces contained in `outer`, sorted by descriptor. Only patterns holding
/// every equality of `outer` are tried.
pub fn faces_within(w: &Weight, outer: &FaceDescriptor, strategy: Strategy) -> Result<Vec<FaceRecord>, PolytopeError> {
    let n = outer.n;
    if n < 2 {
        return Err(PolytopeError::TooSmall { n, min: 2 });
    }
    if n > MAX_ORACLE_N {
        return Err(PolytopeError::TooLarge(n));
    }
    let pairs = interlacing_pairs(n);
    let base = pattern_mask(&pairs, outer);
    let free: Vec<usize> = (0..pairs.len()).filter(|k| base >> k & 1 == 0).collect();
    let mut out = par::filter_map_range(strategy, 1u64 << free.len(), |index| {
        let mask = free
            .iter()
            .enumerate()
            .filter(|(i, _)| index >> i & 1 == 1)
            .fold(base, |m, (_, &k)| m | 1 << k);
        realize(w, n, &pairs, mask)
    });
    out.sort_by(|a, b| a.face.cmp(&b.face));
    Ok(out)
}

/// Vertices of `Δ_λ` (dimension-zero faces), in descriptor order.
pub fn vertices(w: &Weight, n: usize) -> Result<Vec<GZPoint>, PolytopeError> {
    Ok(enumerate_faces(w, n)?
        .into_iter()
        .filter(|r| r.face.dimension == 0)
        .map(|r| r.interior)
        .collect())
}
