//! The L-shaped ladder diagram `Γ_n`, its positive paths, and the poset of
//! subgraphs that are unions of positive paths.
//!
//! Grid conventions: a box `□^{(i,j)}` is keyed by its upper-right corner and
//! spans `[i−1, i] × [j−1, j]`. Edges are unit segments keyed by their lower-left
//! endpoint and a direction. The diagram is the union of the column boxes
//! `□^{(1,1)}, …, □^{(1,n)}` and the row boxes `□^{(1,1)}, …, □^{(n,1)}`.
//!
//! Each subgraph `Γ` maps to a face of the GZ polytope: every pair of adjacent
//! fillings whose shared box edge is absent from `Γ` is identified. The weights
//! sit in virtual boxes `λ1 → □^{(1,n+1)}`, `λ2 → □^{(2,2)}`, `λ3 → □^{(n+1,1)}`.

use std::collections::{BTreeMap, BTreeSet};

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::face::{FaceDescriptor, Filling};
use crate::par::{self, Strategy};

/// Largest `n` accepted by [`enumerate_subgraphs`]; the enumeration visits
/// `(2^{n+1} − 1)²` pairs of path subsets.
pub const MAX_ENUMERATION_N: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LadderError {
    #[error("ladder diagram needs n >= 2, got {0}")]
    TooSmall(usize),
    #[error("subgraph enumeration is limited to n <= {MAX_ENUMERATION_N}, got {0}")]
    TooLarge(usize),
}

pub type Vertex = (u32, u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Direction {
    East,
    North,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub origin: Vertex,
    pub dir: Direction,
}

impl Edge {
    pub fn east(x: u32, y: u32) -> Self {
        Edge { origin: (x, y), dir: Direction::East }
    }

    pub fn north(x: u32, y: u32) -> Self {
        Edge { origin: (x, y), dir: Direction::North }
    }

    pub fn end(&self) -> Vertex {
        let (x, y) = self.origin;
        match self.dir {
            Direction::East => (x + 1, y),
            Direction::North => (x, y + 1),
        }
    }

    fn between(a: Vertex, b: Vertex) -> Option<Edge> {
        match (b.0 as i64 - a.0 as i64, b.1 as i64 - a.1 as i64) {
            (1, 0) => Some(Edge::east(a.0, a.1)),
            (0, 1) => Some(Edge::north(a.0, a.1)),
            _ => None,
        }
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(2))?;
        seq.serialize_element(&[self.origin.0, self.origin.1])?;
        let (x, y) = self.end();
        seq.serialize_element(&[x, y])?;
        seq.end()
    }
}

/// Unit box keyed by its upper-right corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct UnitBox {
    pub i: u32,
    pub j: u32,
}

impl UnitBox {
    pub fn new(i: u32, j: u32) -> Self {
        UnitBox { i, j }
    }

    /// Bottom, top, left, right.
    pub fn sides(&self) -> [Edge; 4] {
        let (x0, y0) = (self.i - 1, self.j - 1);
        [
            Edge::east(x0, y0),
            Edge::east(x0, self.j),
            Edge::north(x0, y0),
            Edge::north(self.i, y0),
        ]
    }

    pub fn shared_side(&self, other: &UnitBox) -> Option<Edge> {
        let theirs = other.sides();
        self.sides().into_iter().find(|e| theirs.contains(e))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LadderGraph {
    n: usize,
    boxes: Vec<UnitBox>,
    edges: Vec<Edge>,
}

impl LadderGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn boxes(&self) -> &[UnitBox] {
        &self.boxes
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn contains_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    pub fn farthest_points(&self) -> [Vertex; 2] {
        let n = self.n as u32;
        [(1, n), (n, 1)]
    }

    fn edge_index(&self, e: &Edge) -> usize {
        self.edges.binary_search(e).expect("edge belongs to the ladder")
    }

    fn mask_of(&self, edges: impl IntoIterator<Item = Edge>) -> u128 {
        edges
            .into_iter()
            .fold(0u128, |m, e| m | (1u128 << self.edge_index(&e)))
    }

    fn edges_of_mask(&self, mask: u128) -> BTreeSet<Edge> {
        (0..self.edges.len())
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.edges[i])
            .collect()
    }
}

/// The ladder diagram `Γ_n` (`2n − 1` unit boxes).
pub fn build_gamma(n: usize) -> Result<LadderGraph, LadderError> {
    if n < 2 {
        return Err(LadderError::TooSmall(n));
    }
    let n32 = n as u32;
    let mut boxes: Vec<UnitBox> = (1..=n32).map(|j| UnitBox::new(1, j)).collect();
    boxes.extend((2..=n32).map(|i| UnitBox::new(i, 1)));
    boxes.sort();
    let edges: BTreeSet<Edge> = boxes.iter().flat_map(|b| b.sides()).collect();
    Ok(LadderGraph {
        n,
        boxes,
        edges: edges.into_iter().collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PositivePath {
    vertices: Vec<Vertex>,
}

impl PositivePath {
    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn endpoint(&self) -> Vertex {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.vertices
            .windows(2)
            .map(|w| Edge::between(w[0], w[1]).expect("monotone unit steps"))
            .collect()
    }
}

/// All shortest monotone paths from the origin to `(1,n)` or `(n,1)` inside `Γ_n`,
/// found by depth-first search over east/north steps.
pub fn enumerate_positive_paths(g: &LadderGraph) -> Vec<PositivePath> {
    let targets = g.farthest_points();
    let length = g.n + 1;
    let mut out = Vec::new();
    let mut stack = vec![vec![(0u32, 0u32)]];
    while let Some(path) = stack.pop() {
        let here = *path.last().unwrap();
        if path.len() == length + 1 {
            if targets.contains(&here) {
                out.push(PositivePath { vertices: path });
            }
            continue;
        }
        for e in [Edge::east(here.0, here.1), Edge::north(here.0, here.1)] {
            if g.contains_edge(&e) {
                let mut next = path.clone();
                next.push(e.end());
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// A union of positive paths (deduplicated by edge set).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LadderSubgraph {
    n: usize,
    edges: BTreeSet<Edge>,
}

impl LadderSubgraph {
    /// Union of the given paths; `None` unless both farthest points are reached.
    pub fn from_paths<'a>(g: &LadderGraph, paths: impl IntoIterator<Item = &'a PositivePath>) -> Option<Self> {
        let mut edges = BTreeSet::new();
        let mut ends = BTreeSet::new();
        for p in paths {
            edges.extend(p.edges());
            ends.insert(p.endpoint());
        }
        g.farthest_points()
            .iter()
            .all(|v| ends.contains(v))
            .then_some(LadderSubgraph { n: g.n, edges })
    }

    pub fn full(g: &LadderGraph) -> Self {
        LadderSubgraph {
            n: g.n,
            edges: g.edges.iter().copied().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.edges.iter().flat_map(|e| [e.origin, e.end()]).collect()
    }
}

impl Serialize for LadderSubgraph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.edges.len()))?;
        for e in &self.edges {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

pub fn enumerate_subgraphs(g: &LadderGraph) -> Result<Vec<LadderSubgraph>, LadderError> {
    enumerate_subgraphs_with(g, Strategy::default())
}

/// Every distinct union of positive paths containing both farthest points,
/// sorted by (edge count, edge list).
pub fn enumerate_subgraphs_with(
    g: &LadderGraph,
    strategy: Strategy,
) -> Result<Vec<LadderSubgraph>, LadderError> {
    if g.n > MAX_ENUMERATION_N {
        return Err(LadderError::TooLarge(g.n));
    }
    let paths = enumerate_positive_paths(g);
    let [to_column_top, to_row_end] = g.farthest_points();
    let masks_to = |target: Vertex| -> Vec<u128> {
        paths
            .iter()
            .filter(|p| p.endpoint() == target)
            .map(|p| g.mask_of(p.edges()))
            .collect()
    };
    let column = masks_to(to_column_top);
    let row = masks_to(to_row_end);
    let unions = |masks: &[u128]| -> Vec<u128> {
        (1u64..1 << masks.len())
            .map(|sel| {
                (0..masks.len())
                    .filter(|i| sel >> i & 1 == 1)
                    .fold(0u128, |m, i| m | masks[i])
            })
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect()
    };
    let column_unions = unions(&column);
    let row_unions = unions(&row);
    let width = row_unions.len() as u64;
    let total = column_unions.len() as u64 * width;
    let combined: BTreeSet<u128> = par::filter_map_range(strategy, total, |k| {
        Some(column_unions[(k / width) as usize] | row_unions[(k % width) as usize])
    })
    .into_iter()
    .collect();
    let mut out: Vec<LadderSubgraph> = combined
        .into_iter()
        .map(|m| LadderSubgraph { n: g.n, edges: g.edges_of_mask(m) })
        .collect();
    out.sort_by(|a, b| {
        a.edges
            .len()
            .cmp(&b.edges.len())
            .then_with(|| a.edges.cmp(&b.edges))
    });
    Ok(out)
}

/// First Betti number `E − V + C`.
pub fn h1_rank(s: &LadderSubgraph) -> usize {
    let vertices: Vec<Vertex> = s.vertices().into_iter().collect();
    let index: BTreeMap<Vertex, usize> = vertices.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    fn root(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut components = vertices.len();
    for e in &s.edges {
        let (a, b) = (root(&mut parent, index[&e.origin]), root(&mut parent, index[&e.end()]));
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    s.edges.len() + components - vertices.len()
}

/// Box carrying each filling (weights in their virtual boxes).
pub fn filling_box(n: usize, f: Filling) -> UnitBox {
    let n = n as u32;
    match f {
        Filling::Lambda1 => UnitBox::new(1, n + 1),
        Filling::Lambda2 => UnitBox::new(2, 2),
        Filling::Lambda3 => UnitBox::new(n + 1, 1),
        Filling::Row(j) => UnitBox::new(1, j as u32),
        Filling::Col(j) => UnitBox::new(j as u32, 1),
    }
}

/// Pairs of fillings whose boxes share an edge, with that edge.
/// Weight–weight pairs are excluded.
pub fn filling_adjacencies(n: usize) -> Vec<(Filling, Filling, Edge)> {
    let fillings = Filling::all(n);
    let mut out = Vec::new();
    for (i, &a) in fillings.iter().enumerate() {
        for &b in &fillings[i + 1..] {
            if a.is_weight() && b.is_weight() {
                continue;
            }
            if let Some(e) = filling_box(n, a).shared_side(&filling_box(n, b)) {
                out.push((a, b, e));
            }
        }
    }
    out
}

/// The face `f_Γ`: identify adjacent fillings not divided by an edge of `s`.
pub fn face_of(s: &LadderSubgraph) -> FaceDescriptor {
    let pairs = filling_adjacencies(s.n)
        .into_iter()
        .filter(|(_, _, e)| !s.edges.contains(e))
        .map(|(a, b, _)| (a, b));
    FaceDescriptor {
        n: s.n,
        dimension: h1_rank(s),
        classes: FaceDescriptor::classes_from_pairs(pairs),
    }
}

/// Edge inclusion `s1 ⊆ s2`. Subgraphs of different diagrams are never comparable.
pub fn poset_leq(s1: &LadderSubgraph, s2: &LadderSubgraph) -> bool {
    s1.n == s2.n && s1.edges.is_subset(&s2.edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use Filling::*;

    /// Paths to `(1,n)`: one east step at height `h`; to `(n,1)`: one north step at `x = k`.
    fn closed_form_paths(n: u32) -> Vec<PositivePath> {
        let mut out = Vec::new();
        for h in 0..=n {
            let mut v: Vec<Vertex> = (0..=h).map(|y| (0, y)).collect();
            v.extend((h..=n).map(|y| (1, y)));
            out.push(PositivePath { vertices: v });
        }
        for k in 0..=n {
            let mut v: Vec<Vertex> = (0..=k).map(|x| (x, 0)).collect();
            v.extend((k..=n).map(|x| (x, 1)));
            out.push(PositivePath { vertices: v });
        }
        out.sort();
        out
    }

    fn subgraph_with_heights(g: &LadderGraph, column: &[u32], row: &[u32]) -> LadderSubgraph {
        let n = g.n as u32;
        let paths: Vec<PositivePath> = closed_form_paths(n)
            .into_iter()
            .filter(|p| {
                let vs = p.vertices();
                if p.endpoint() == (1, n) {
                    let h = vs.iter().position(|v| v.0 == 1).unwrap() as u32 - 1;
                    column.contains(&h)
                } else {
                    let k = vs.iter().position(|v| v.1 == 1).unwrap() as u32 - 1;
                    row.contains(&k)
                }
            })
            .collect();
        LadderSubgraph::from_paths(g, &paths).unwrap()
    }

    #[test]
    fn gamma_box_counts() {
        let g3 = build_gamma(3).unwrap();
        let expected: Vec<UnitBox> = [(1, 1), (1, 2), (1, 3), (2, 1), (3, 1)]
            .into_iter()
            .map(|(i, j)| UnitBox::new(i, j))
            .collect();
        assert_eq!(g3.boxes(), expected.as_slice());
        assert_eq!(build_gamma(2).unwrap().boxes().len(), 3);
        assert_eq!(build_gamma(5).unwrap().boxes().len(), 9);
        assert_eq!(build_gamma(1).unwrap_err(), LadderError::TooSmall(1));
        for n in 2..=8 {
            assert_eq!(build_gamma(n).unwrap().edges().len(), 6 * n - 2);
        }
    }

    #[test]
    fn positive_path_counts_match_closed_form() {
        for n in 2..=7u32 {
            let g = build_gamma(n as usize).unwrap();
            let paths = enumerate_positive_paths(&g);
            assert_eq!(paths, closed_form_paths(n));
            assert!(paths.iter().all(|p| p.edges().len() == n as usize + 1));
        }
        assert_eq!(enumerate_positive_paths(&build_gamma(2).unwrap()).len(), 6);
        let p3 = enumerate_positive_paths(&build_gamma(3).unwrap());
        assert_eq!(p3.len(), 8);
        assert_eq!(p3.iter().filter(|p| p.endpoint() == (1, 3)).count(), 4);
    }

    #[test]
    fn adjacency_matches_interlacing_pattern() {
        for n in 2..=6 {
            let mut adjacent: Vec<(Filling, Filling)> = filling_adjacencies(n)
                .into_iter()
                .map(|(a, b, _)| if a < b { (a, b) } else { (b, a) })
                .collect();
            adjacent.sort();
            let mut pattern: Vec<(Filling, Filling)> = crate::polytope::interlacing_pairs(n)
                .into_iter()
                .map(|(a, b)| if a < b { (a, b) } else { (b, a) })
                .collect();
            pattern.sort();
            assert_eq!(adjacent, pattern, "n = {n}");
        }
    }

    #[test]
    fn example_fixtures_n3() {
        let g = build_gamma(3).unwrap();
        // Γ: column paths turning at heights 2, 3; row paths turning at 2, 3.
        let gamma = subgraph_with_heights(&g, &[2, 3], &[2, 3]);
        let f = face_of(&gamma);
        assert_eq!(f.classes, vec![vec![Row(2), Row(1), Lambda2, Col(2)]]);
        assert_eq!(f.dimension, 2);
        // Γ′: a single path to each far point, turning at the far end.
        let gamma1 = subgraph_with_heights(&g, &[3], &[3]);
        let f1 = face_of(&gamma1);
        assert_eq!(f1.classes, vec![vec![Row(3), Row(2), Row(1), Lambda2, Col(2), Col(3)]]);
        assert_eq!(f1.dimension, 0);
        // Γ″: everything except the top edge of □^{(1,3)}.
        let gamma2 = subgraph_with_heights(&g, &[0, 1, 2], &[0, 1, 2, 3]);
        let f2 = face_of(&gamma2);
        assert_eq!(f2.classes, vec![vec![Lambda1, Row(3)]]);
        assert_eq!(h1_rank(&gamma2), 4);

        let all = enumerate_subgraphs(&g).unwrap();
        for s in [&gamma, &gamma1, &gamma2] {
            assert!(all.contains(s));
        }
        assert!(poset_leq(&gamma1, &gamma));
        assert!(f1.is_contained_in(&f));
    }

    #[test]
    fn full_diagram_is_improper_face() {
        for n in 2..=5 {
            let g = build_gamma(n).unwrap();
            let full = LadderSubgraph::full(&g);
            assert_eq!(h1_rank(&full), 2 * n - 1);
            let f = face_of(&full);
            assert!(f.classes.is_empty());
            let all = enumerate_subgraphs(&g).unwrap();
            assert!(all.contains(&full));
            assert_eq!(all.iter().filter(|s| h1_rank(s) == 2 * n - 1).count(), 1);
            assert!(all.iter().all(|s| poset_leq(s, &full)));
        }
    }

    #[test]
    fn trees_are_vertices_and_incomparable() {
        let g = build_gamma(3).unwrap();
        let a = subgraph_with_heights(&g, &[3], &[3]);
        let b = subgraph_with_heights(&g, &[0], &[3]);
        assert_eq!(h1_rank(&a), 0);
        assert_eq!(h1_rank(&b), 0);
        assert!(!poset_leq(&a, &b) && !poset_leq(&b, &a));
    }

    #[test]
    fn subgraph_counts_and_strategy_independence() {
        let expected = [(2, 25), (3, 129), (4, 577)];
        for (n, count) in expected {
            let g = build_gamma(n).unwrap();
            let seq = enumerate_subgraphs_with(&g, Strategy::Sequential).unwrap();
            let par = enumerate_subgraphs_with(&g, Strategy::Parallel).unwrap();
            assert_eq!(seq, par);
            assert_eq!(seq.len(), count);
        }
        assert_eq!(
            enumerate_subgraphs(&build_gamma(9).unwrap()).unwrap_err(),
            LadderError::TooLarge(9)
        );
    }

    #[test]
    fn face_map_is_injective_n4() {
        let g = build_gamma(4).unwrap();
        let faces: BTreeSet<FaceDescriptor> = enumerate_subgraphs(&g).unwrap().iter().map(face_of).collect();
        assert_eq!(faces.len(), 577);
    }

    #[test]
    fn serializes_as_sorted_edge_list() {
        let g = build_gamma(2).unwrap();
        let s = subgraph_with_heights(&g, &[2], &[2]);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, "[[[0,0],[1,0]],[[0,0],[0,1]],[[0,1],[0,2]],[[0,2],[1,2]],[[1,0],[2,0]],[[2,0],[2,1]]]");
    }
}
