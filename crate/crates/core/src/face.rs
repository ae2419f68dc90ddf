//! Fillings of the GZ pattern and face descriptors shared by the ladder
//! diagram and the polytope.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

/// One entry of the interlacing pattern: a coordinate `u_{1,j}` / `u_{j,1}`
/// or one of the three fixed weights.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Filling {
    Lambda1,
    Lambda2,
    Lambda3,
    /// `u_{1,j}` for `1 ≤ j ≤ n` (`Row(1)` is `u_{1,1}`).
    Row(usize),
    /// `u_{j,1}` for `2 ≤ j ≤ n`.
    Col(usize),
}

impl Filling {
    /// All `2n + 2` fillings in pattern order
    /// `λ1, u_{1,n}, …, u_{1,1}, λ2, u_{2,1}, …, u_{n,1}, λ3`.
    pub fn all(n: usize) -> Vec<Filling> {
        let mut out = vec![Filling::Lambda1];
        out.extend((1..=n).rev().map(Filling::Row));
        out.push(Filling::Lambda2);
        out.extend((2..=n).map(Filling::Col));
        out.push(Filling::Lambda3);
        out
    }

    /// The `2n − 1` coordinates, in the same order.
    pub fn coordinates(n: usize) -> Vec<Filling> {
        Filling::all(n).into_iter().filter(|f| !f.is_weight()).collect()
    }

    pub fn is_weight(self) -> bool {
        matches!(self, Filling::Lambda1 | Filling::Lambda2 | Filling::Lambda3)
    }

    fn sort_key(self) -> (u8, i64) {
        match self {
            Filling::Lambda1 => (0, 0),
            Filling::Row(j) => (1, -(j as i64)),
            Filling::Lambda2 => (2, 0),
            Filling::Col(j) => (3, j as i64),
            Filling::Lambda3 => (4, 0),
        }
    }

    pub fn name(self) -> String {
        match self {
            Filling::Lambda1 => "lambda1".into(),
            Filling::Lambda2 => "lambda2".into(),
            Filling::Lambda3 => "lambda3".into(),
            Filling::Row(j) => format!("u_{{1,{j}}}"),
            Filling::Col(j) => format!("u_{{{j},1}}"),
        }
    }
}

impl Ord for Filling {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Filling {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl Serialize for Filling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

/// Small union-find over fillings.
#[derive(Debug, Default)]
pub(crate) struct FillingClasses {
    parent: BTreeMap<Filling, Filling>,
}

impl FillingClasses {
    pub(crate) fn find(&mut self, f: Filling) -> Filling {
        let p = *self.parent.entry(f).or_insert(f);
        if p == f {
            return f;
        }
        let root = self.find(p);
        self.parent.insert(f, root);
        root
    }

    pub(crate) fn union(&mut self, a: Filling, b: Filling) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller filling as root so classes are canonical
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.parent.insert(hi, lo);
        }
    }

    /// Non-singleton classes, each sorted, sorted among themselves.
    pub(crate) fn into_classes(mut self) -> Vec<Vec<Filling>> {
        let keys: Vec<Filling> = self.parent.keys().copied().collect();
        let mut groups: BTreeMap<Filling, Vec<Filling>> = BTreeMap::new();
        for f in keys {
            let r = self.find(f);
            groups.entry(r).or_default().push(f);
        }
        let mut classes: Vec<Vec<Filling>> = groups
            .into_values()
            .filter(|c| c.len() > 1)
            .map(|mut c| {
                c.sort();
                c
            })
            .collect();
        classes.sort();
        classes
    }
}

/// A face of the GZ polytope described by the fillings it forces equal.
///
/// `classes` holds only the non-singleton equality classes, each sorted in
/// pattern order. Two descriptors for the same face compare equal.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FaceDescriptor {
    pub n: usize,
    pub dimension: usize,
    pub classes: Vec<Vec<Filling>>,
}

impl FaceDescriptor {
    /// Equality classes generated by `pairs` (transitively closed).
    pub fn classes_from_pairs(pairs: impl IntoIterator<Item = (Filling, Filling)>) -> Vec<Vec<Filling>> {
        let mut uf = FillingClasses::default();
        for (a, b) in pairs {
            uf.union(a, b);
        }
        uf.into_classes()
    }

    pub fn are_equal(&self, a: Filling, b: Filling) -> bool {
        a == b
            || self
                .classes
                .iter()
                .any(|c| c.contains(&a) && c.contains(&b))
    }

    /// Face inclusion: `self ⊆ other` iff every equality of `other` holds in `self`.
    pub fn is_contained_in(&self, other: &FaceDescriptor) -> bool {
        other
            .classes
            .iter()
            .all(|class| class.windows(2).all(|w| self.are_equal(w[0], w[1])))
    }

    /// Number of equality pairs generated, i.e. `Σ (|class| − 1)`.
    pub fn equality_count(&self) -> usize {
        self.classes.iter().map(|c| c.len() - 1).sum()
    }
}

impl fmt::Display for FaceDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.classes.is_empty() {
            return write!(f, "(improper face, dim {})", self.dimension);
        }
        let parts: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                c.iter()
                    .map(|x| x.name())
                    .collect::<Vec<_>>()
                    .join(" = ")
            })
            .collect();
        write!(f, "{} (dim {})", parts.join("; "), self.dimension)
    }
}
