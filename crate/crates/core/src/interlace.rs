//! Intersection (interlacement) graphs of bouquets, primality, small-graph
//! canonicalization, and the complete/path recognizers used by the theorems.
//!
//! Two loops are interlaced when their ends alternate around the vertex:
//! exactly one occurrence of one lies strictly between the two occurrences
//! of the other. The test is evaluated on the stored linear order; it is
//! rotation-invariant, which the property suite asserts.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rotation::{LoopKind, SignedRotation};

/// Maximum vertex count accepted by [`canonical_bytes`].
pub const CANONICAL_VERTEX_CAP: usize = 8;

/// A simple graph on the edge labels of a bouquet, optionally carrying the
/// loop kind of each label (the signed variant).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InterlacementGraph {
    vertices: Vec<u32>,
    edges: BTreeSet<(u32, u32)>,
    signs: Option<BTreeMap<u32, LoopKind>>,
}

impl InterlacementGraph {
    /// Builds a graph from explicit parts. Panics on self-loops or edge
    /// endpoints outside the vertex set.
    pub fn from_parts<E>(vertices: Vec<u32>, edges: E) -> InterlacementGraph
    where
        E: IntoIterator<Item = (u32, u32)>,
    {
        let vertex_set: BTreeSet<u32> = vertices.iter().copied().collect();
        let mut normalized = BTreeSet::new();
        for (a, b) in edges {
            assert!(a != b, "self-loop at {a}");
            assert!(
                vertex_set.contains(&a) && vertex_set.contains(&b),
                "edge ({a},{b}) leaves the vertex set"
            );
            normalized.insert((a.min(b), a.max(b)));
        }
        InterlacementGraph {
            vertices: vertex_set.into_iter().collect(),
            edges: normalized,
            signs: None,
        }
    }

    /// Vertices in ascending label order.
    pub fn vertices(&self) -> &[u32] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as ordered pairs (small, large), ascending.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        a != b && self.edges.contains(&(a.min(b), a.max(b)))
    }

    /// Vertex signs when this is a signed interlacement graph.
    pub fn signs(&self) -> Option<&BTreeMap<u32, LoopKind>> {
        self.signs.as_ref()
    }

    pub fn degree(&self, vertex: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == vertex || b == vertex)
            .count()
    }

    /// Connectivity; the empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        let Some(&start) = self.vertices.first() else {
            return false;
        };
        let mut seen: BTreeSet<u32> = BTreeSet::new();
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            if !seen.insert(v) {
                continue;
            }
            for &(a, b) in &self.edges {
                if a == v && !seen.contains(&b) {
                    stack.push(b);
                } else if b == v && !seen.contains(&a) {
                    stack.push(a);
                }
            }
        }
        seen.len() == self.vertices.len()
    }

    /// True when every pair of vertices is adjacent.
    pub fn is_complete(&self) -> bool {
        let v = self.vertex_count();
        self.edge_count() == v * (v - 1) / 2
    }

    /// True when the graph is a path: connected, acyclic, maximum degree 2.
    /// Single vertices and single edges count as paths.
    pub fn is_path(&self) -> bool {
        let v = self.vertex_count();
        if v == 0 || !self.is_connected() {
            return false;
        }
        self.edge_count() == v - 1 && self.vertices.iter().all(|&x| self.degree(x) <= 2)
    }
}

/// The unsigned interlacement graph I(B): labels x and y are adjacent iff
/// exactly one occurrence of y lies strictly between the two occurrences
/// of x.
pub fn interlacement_graph(r: &SignedRotation) -> InterlacementGraph {
    let labels = r.labels();
    let positions: BTreeMap<u32, (usize, usize)> = labels
        .iter()
        .map(|&l| (l, r.occurrence_positions(l).expect("label present")))
        .collect();
    let mut edges = BTreeSet::new();
    for (i, &x) in labels.iter().enumerate() {
        for &y in &labels[i + 1..] {
            let from_x = interlaced(positions[&x], positions[&y]);
            debug_assert_eq!(from_x, interlaced(positions[&y], positions[&x]));
            if from_x {
                edges.insert((x, y));
            }
        }
    }
    InterlacementGraph {
        vertices: labels,
        edges,
        signs: None,
    }
}

/// The signed interlacement graph SI(B): as [`interlacement_graph`] plus a
/// sign per vertex, orientable loops marked plus.
pub fn signed_interlacement_graph(r: &SignedRotation) -> InterlacementGraph {
    let mut graph = interlacement_graph(r);
    let signs = graph
        .vertices
        .iter()
        .map(|&l| (l, r.loop_kind(l).expect("label present")))
        .collect();
    graph.signs = Some(signs);
    graph
}

fn interlaced((x1, x2): (usize, usize), (y1, y2): (usize, usize)) -> bool {
    let inside = |p: usize| p > x1 && p < x2;
    inside(y1) != inside(y2)
}

/// Primality: a bouquet is prime iff its interlacement graph is connected.
/// Single loops are prime; the empty bouquet is non-prime by convention.
pub fn is_prime(r: &SignedRotation) -> bool {
    interlacement_graph(r).is_connected()
}

/// Error from [`canonical_bytes`] on oversized graphs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TooManyVertices {
    pub count: usize,
    pub max: usize,
}

impl fmt::Display for TooManyVertices {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} vertices exceed the canonicalization cap of {}",
            self.count, self.max
        )
    }
}

impl core::error::Error for TooManyVertices {}

/// Canonical byte string of a graph with at most 8 vertices: the vertex
/// count followed by the lexicographically minimal packed upper-triangle
/// adjacency bits over all vertex permutations. Equal strings iff the
/// graphs are isomorphic. Signs are ignored.
pub fn canonical_bytes(graph: &InterlacementGraph) -> Result<Vec<u8>, TooManyVertices> {
    let v = graph.vertex_count();
    if v > CANONICAL_VERTEX_CAP {
        return Err(TooManyVertices {
            count: v,
            max: CANONICAL_VERTEX_CAP,
        });
    }
    let mut adjacency = [[false; CANONICAL_VERTEX_CAP]; CANONICAL_VERTEX_CAP];
    let index: BTreeMap<u32, usize> = graph
        .vertices
        .iter()
        .enumerate()
        .map(|(i, &l)| (l, i))
        .collect();
    for &(a, b) in &graph.edges {
        adjacency[index[&a]][index[&b]] = true;
        adjacency[index[&b]][index[&a]] = true;
    }

    let mut perm: Vec<usize> = (0..v).collect();
    let mut best: Option<Vec<u8>> = None;
    permute(&mut perm, 0, &mut |p| {
        let bytes = pack_upper_triangle(&adjacency, p);
        if best.as_ref().is_none_or(|b| bytes < *b) {
            best = Some(bytes);
        }
    });
    let mut out = vec![v as u8];
    out.extend(best.unwrap_or_default());
    Ok(out)
}

fn pack_upper_triangle(adjacency: &[[bool; 8]; 8], perm: &[usize]) -> Vec<u8> {
    let v = perm.len();
    let mut bytes = Vec::with_capacity((v * v / 2).div_ceil(8));
    let mut acc = 0u8;
    let mut used = 0;
    for i in 0..v {
        for j in (i + 1)..v {
            acc <<= 1;
            if adjacency[perm[i]][perm[j]] {
                acc |= 1;
            }
            used += 1;
            if used == 8 {
                bytes.push(acc);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        bytes.push(acc << (8 - used));
    }
    bytes
}

fn permute<F: FnMut(&[usize])>(items: &mut Vec<usize>, start: usize, visit: &mut F) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        permute(items, start + 1, visit);
        items.swap(start, i);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rot(text: &str) -> SignedRotation {
        text.parse().expect("valid rotation")
    }

    #[test]
    fn single_interlaced_pair() {
        let g = interlacement_graph(&rot("1 2 1 2"));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn path_bouquet_gives_path_graph() {
        let g = interlacement_graph(&rot("1 2 1 3 2 3"));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2), (2, 3)]);
        assert!(g.is_path());
        assert!(!g.is_complete());
    }

    #[test]
    fn canonical_bouquets_give_complete_graphs() {
        for n in 1..=8u32 {
            let tokens: Vec<i64> = (1..=n).chain(1..=n).map(|k| k as i64).collect();
            let r = SignedRotation::from_tokens(&tokens).unwrap();
            let g = interlacement_graph(&r);
            assert!(g.is_complete(), "n={n}");
            assert_eq!(g.edge_count(), (n * (n - 1) / 2) as usize);
        }
    }

    #[test]
    fn signed_graph_examples() {
        let g = signed_interlacement_graph(&rot("1 2 -1 2"));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
        let signs = g.signs().unwrap();
        assert_eq!(signs[&1], LoopKind::NonOrientable);
        assert_eq!(signs[&2], LoopKind::Orientable);

        let lone = signed_interlacement_graph(&rot("1 1"));
        assert_eq!(lone.vertices(), &[1]);
        assert_eq!(lone.signs().unwrap()[&1], LoopKind::Orientable);
    }

    #[test]
    fn petrial_flips_signs_but_not_adjacency() {
        let r = rot("1 2 1 3 2 3");
        let subset = [1u32, 3].into_iter().collect();
        let petrialed = r.partial_petrial(&subset).unwrap();
        assert_eq!(
            interlacement_graph(&r),
            interlacement_graph(&petrialed)
        );
        let before = signed_interlacement_graph(&r);
        let after = signed_interlacement_graph(&petrialed);
        for &label in before.vertices() {
            let flipped = [1u32, 3].contains(&label);
            let same = before.signs().unwrap()[&label] == after.signs().unwrap()[&label];
            assert_eq!(same, !flipped, "label {label}");
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(&rot("1 2 1 2")));
        assert!(!is_prime(&rot("1 1 2 2")));
        assert!(is_prime(&rot("1 1")));
        assert!(!is_prime(&SignedRotation::empty()));
    }

    #[test]
    fn path_recognizer_edge_cases() {
        assert!(interlacement_graph(&rot("1 1")).is_path());
        assert!(interlacement_graph(&rot("1 2 1 2")).is_path());
        assert!(!interlacement_graph(&rot("1 1 2 2")).is_path());
        // Triangle: connected but cyclic.
        assert!(!interlacement_graph(&rot("1 2 3 1 2 3")).is_path());
        // Star on 4 vertices: tree but degree 3.
        let star = InterlacementGraph::from_parts(vec![1, 2, 3, 4], [(1, 2), (1, 3), (1, 4)]);
        assert!(!star.is_path());
    }

    #[test]
    fn canonical_identifies_isomorphic_paths() {
        let end_labeled = InterlacementGraph::from_parts(vec![1, 2, 3], [(1, 2), (2, 3)]);
        let center_labeled = InterlacementGraph::from_parts(vec![1, 2, 3], [(1, 2), (1, 3)]);
        assert_eq!(
            canonical_bytes(&end_labeled).unwrap(),
            canonical_bytes(&center_labeled).unwrap()
        );
        let triangle = InterlacementGraph::from_parts(vec![1, 2, 3], [(1, 2), (2, 3), (1, 3)]);
        assert_ne!(
            canonical_bytes(&end_labeled).unwrap(),
            canonical_bytes(&triangle).unwrap()
        );
        let lone = InterlacementGraph::from_parts(vec![7], []);
        assert_eq!(canonical_bytes(&lone).unwrap(), vec![1]);
    }

    #[test]
    fn canonical_cap() {
        let vertices: Vec<u32> = (1..=9).collect();
        let g = InterlacementGraph::from_parts(vertices, []);
        assert_eq!(
            canonical_bytes(&g).unwrap_err(),
            TooManyVertices { count: 9, max: 8 }
        );
    }

    #[test]
    fn interlacement_is_rotation_invariant() {
        let words = ["1 2 1 3 2 3", "1 -2 3 1 2 -3", "1 1 2 3 2 3"];
        for text in words {
            let r = rot(text);
            let base = interlacement_graph(&r);
            for offset in 0..r.word().len() {
                assert_eq!(interlacement_graph(&r.rotated(offset)), base, "{text}@{offset}");
            }
        }
    }
}
