//! Boundary tracing: the number of boundary components f(B) of a bouquet,
//! and the derived Euler characteristic and Euler genus.
//!
//! The surface boundary is modeled on 4n endpoints, two per occurrence
//! (`a_i` first in cyclic order, then `b_i`). Vertex line segments pair
//! `b_i` with `a_{i+1}`; edge line segments pair endpoints across a loop's
//! two occurrences: `a_i-b_j` and `b_i-a_j` when the loop is untwisted
//! (equal signs), `a_i-a_j` and `b_i-b_j` when twisted. Boundary components
//! are the cycles alternating between the two matchings.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::rotation::{EdgeSubset, RotationError, SignedRotation};

/// The two perfect matchings on the 4n occurrence endpoints of a rotation.
///
/// Endpoint numbering: occurrence `i` owns `a_i = 2i` and `b_i = 2i + 1`.
#[derive(Clone, Debug)]
pub struct EndpointSystem {
    vertex_match: Vec<usize>,
    edge_match: Vec<usize>,
}

impl EndpointSystem {
    pub fn new(r: &SignedRotation) -> EndpointSystem {
        let occ = r.word().len();
        let mut vertex_match = vec![0; 2 * occ];
        for i in 0..occ {
            let b = 2 * i + 1;
            let a_next = 2 * ((i + 1) % occ);
            vertex_match[b] = a_next;
            vertex_match[a_next] = b;
        }
        let mut edge_match = vec![0; 2 * occ];
        for label in r.labels() {
            let (i, j) = r.occurrence_positions(label).expect("label present");
            let twisted = r.word()[i].sign() != r.word()[j].sign();
            pair_edge(&mut edge_match, i, j, twisted);
        }
        EndpointSystem {
            vertex_match,
            edge_match,
        }
    }

    pub fn vertex_match(&self) -> &[usize] {
        &self.vertex_match
    }

    pub fn edge_match(&self) -> &[usize] {
        &self.edge_match
    }

    /// Number of cycles alternating between the edge and vertex matchings.
    pub fn boundary_cycles(&self) -> usize {
        let mut visited = vec![false; self.vertex_match.len()];
        count_alternating_cycles(&self.edge_match, &self.vertex_match, &mut visited)
    }
}

fn pair_edge(edge_match: &mut [usize], i: usize, j: usize, twisted: bool) {
    let (ai, bi, aj, bj) = (2 * i, 2 * i + 1, 2 * j, 2 * j + 1);
    if twisted {
        edge_match[ai] = aj;
        edge_match[aj] = ai;
        edge_match[bi] = bj;
        edge_match[bj] = bi;
    } else {
        edge_match[ai] = bj;
        edge_match[bj] = ai;
        edge_match[bi] = aj;
        edge_match[aj] = bi;
    }
}

fn count_alternating_cycles(
    edge_match: &[usize],
    vertex_match: &[usize],
    visited: &mut [bool],
) -> usize {
    let mut cycles = 0;
    for start in 0..visited.len() {
        if visited[start] {
            continue;
        }
        cycles += 1;
        let mut cur = start;
        loop {
            visited[cur] = true;
            let across = edge_match[cur];
            visited[across] = true;
            cur = vertex_match[across];
            if cur == start {
                break;
            }
        }
    }
    cycles
}

/// Face-tracing kernel reused across many twist states of one word shape.
///
/// The occurrence layout of a rotation is unchanged by partial Petrials;
/// only the per-loop twist flags move. `count_with_twists` rebuilds the
/// edge matching for a twist assignment (indexed by ascending label order)
/// and walks the boundary in O(n).
#[derive(Clone, Debug)]
pub(crate) struct BoundaryTracer {
    occurrences: Vec<(usize, usize)>,
    vertex_match: Vec<usize>,
    edge_match: Vec<usize>,
    visited: Vec<bool>,
}

impl BoundaryTracer {
    /// `r` must be nonempty; the twist slice indexes `r.labels()` order.
    pub(crate) fn new(r: &SignedRotation) -> BoundaryTracer {
        let occ = r.word().len();
        let system = EndpointSystem::new(r);
        let occurrences = r
            .labels()
            .into_iter()
            .map(|label| r.occurrence_positions(label).expect("label present"))
            .collect();
        BoundaryTracer {
            occurrences,
            vertex_match: system.vertex_match,
            edge_match: vec![0; 2 * occ],
            visited: vec![false; 2 * occ],
        }
    }

    /// Twist state of `r` itself: `true` where the two signs differ.
    pub(crate) fn base_twists(r: &SignedRotation) -> Vec<bool> {
        r.labels()
            .into_iter()
            .map(|label| {
                let (i, j) = r.occurrence_positions(label).expect("label present");
                r.word()[i].sign() != r.word()[j].sign()
            })
            .collect()
    }

    pub(crate) fn count_with_twists(&mut self, twisted: &[bool]) -> usize {
        debug_assert_eq!(twisted.len(), self.occurrences.len());
        for (idx, &(i, j)) in self.occurrences.iter().enumerate() {
            pair_edge(&mut self.edge_match, i, j, twisted[idx]);
        }
        self.visited.fill(false);
        count_alternating_cycles(&self.edge_match, &self.vertex_match, &mut self.visited)
    }
}

/// Boundary components, Euler characteristic and Euler genus of a bouquet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenusReport {
    pub boundary_components: usize,
    pub euler_characteristic: i64,
    pub euler_genus: usize,
    pub edges: usize,
}

impl GenusReport {
    pub fn of(r: &SignedRotation) -> GenusReport {
        let n = r.edge_count();
        let f = boundary_count(r);
        GenusReport {
            boundary_components: f,
            euler_characteristic: 1 - n as i64 + f as i64,
            euler_genus: 1 + n - f,
            edges: n,
        }
    }
}

impl fmt::Display for GenusReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "f={} \u{3c7}={} \u{3b5}={}",
            self.boundary_components, self.euler_characteristic, self.euler_genus
        )
    }
}

/// Number of boundary components of the bouquet; 1 for the empty word.
pub fn boundary_count(r: &SignedRotation) -> usize {
    if r.is_empty() {
        return 1;
    }
    let f = EndpointSystem::new(r).boundary_cycles();
    debug_assert!(f >= 1 && f <= r.edge_count() + 1);
    f
}

/// Euler genus: 1 + n - f for a bouquet with n edges, 0 for the empty word.
pub fn euler_genus(r: &SignedRotation) -> usize {
    1 + r.edge_count() - boundary_count(r)
}

/// Euler characteristic: 1 - n + f.
pub fn euler_characteristic(r: &SignedRotation) -> i64 {
    1 - r.edge_count() as i64 + boundary_count(r) as i64
}

/// Euler genus of the partial Petrial of `r` by `subset`.
pub fn genus_after_petrial(r: &SignedRotation, subset: &EdgeSubset) -> Result<usize, RotationError> {
    Ok(euler_genus(&r.partial_petrial(subset)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotation::EdgeSubset;

    fn rot(text: &str) -> SignedRotation {
        text.parse().expect("valid rotation")
    }

    #[test]
    fn trivial_loops() {
        assert_eq!(boundary_count(&rot("1 1")), 2);
        assert_eq!(boundary_count(&rot("1 -1")), 1);
        assert_eq!(boundary_count(&SignedRotation::empty()), 1);
    }

    #[test]
    fn canonical_complete_bouquet_parity() {
        // f([1..n 1..n]) is 1 for even n, 2 for odd n.
        for n in 1..=9u32 {
            let tokens: alloc::vec::Vec<i64> =
                (1..=n).chain(1..=n).map(|k| k as i64).collect();
            let r = SignedRotation::from_tokens(&tokens).unwrap();
            let expect = if n % 2 == 0 { 1 } else { 2 };
            assert_eq!(boundary_count(&r), expect, "n={n}");
        }
    }

    #[test]
    fn canonical_complete_bouquet_petrial_counts() {
        // For the all-positive interleaved word, every nonempty twist set A
        // gives f = |A|.
        for n in 1..=6u32 {
            let tokens: alloc::vec::Vec<i64> =
                (1..=n).chain(1..=n).map(|k| k as i64).collect();
            let r = SignedRotation::from_tokens(&tokens).unwrap();
            for mask in 1u32..(1 << n) {
                let subset: EdgeSubset =
                    (1..=n).filter(|k| mask & (1 << (k - 1)) != 0).collect();
                let petrialed = r.partial_petrial(&subset).unwrap();
                assert_eq!(
                    boundary_count(&petrialed),
                    subset.len(),
                    "n={n} mask={mask:b}"
                );
            }
        }
    }

    #[test]
    fn single_twist_on_odd_complete_bouquet() {
        assert_eq!(boundary_count(&rot("-1 2 3 1 2 3")), 1);
    }

    #[test]
    fn genus_examples() {
        assert_eq!(euler_genus(&rot("1 1")), 0);
        assert_eq!(euler_genus(&rot("1 -1")), 1);
        assert_eq!(euler_genus(&rot("1 2 1 2")), 2);
    }

    #[test]
    fn characteristic_examples() {
        // The lone vertex caps to a sphere: chi = 1 - 0 + 1 = 2, eps = 0.
        assert_eq!(euler_characteristic(&SignedRotation::empty()), 2);
        assert_eq!(euler_genus(&SignedRotation::empty()), 0);
        assert_eq!(euler_characteristic(&rot("1 1")), 2);
        assert_eq!(euler_characteristic(&rot("1 2 1 2")), 0);
    }

    #[test]
    fn genus_after_petrial_examples() {
        let r = rot("1 2 1 2");
        assert_eq!(genus_after_petrial(&r, &EdgeSubset::empty()), Ok(2));
        assert_eq!(
            genus_after_petrial(&r, &[1, 2].into_iter().collect()),
            Ok(1)
        );
        assert_eq!(
            genus_after_petrial(&rot("1 1"), &[1].into_iter().collect()),
            Ok(1)
        );
    }

    #[test]
    fn join_law() {
        let cases = ["1 1", "1 -1", "1 2 1 2", "1 2 -1 2", "1 1 2 2"];
        for a in cases {
            for b in cases {
                let (ra, rb) = (rot(a), rot(b));
                assert_eq!(
                    boundary_count(&ra.join(&rb)),
                    boundary_count(&ra) + boundary_count(&rb) - 1,
                    "a={a} b={b}"
                );
            }
        }
    }

    #[test]
    fn trivial_loop_law_on_joins() {
        // Repeated joins of [1 1] / [1 -1]: f = orientable count + 1.
        for pattern in 0u32..(1 << 5) {
            let mut r = SignedRotation::empty();
            let mut orientable = 0;
            for bit in 0..5 {
                if pattern & (1 << bit) != 0 {
                    r = r.join(&rot("1 1"));
                    orientable += 1;
                } else {
                    r = r.join(&rot("1 -1"));
                }
            }
            assert_eq!(boundary_count(&r), orientable + 1, "pattern={pattern:b}");
        }
    }

    #[test]
    fn tracer_matches_fresh_trace() {
        let r = rot("1 -2 3 1 2 -3");
        let mut tracer = BoundaryTracer::new(&r);
        let twists = BoundaryTracer::base_twists(&r);
        assert_eq!(tracer.count_with_twists(&twists), boundary_count(&r));
        // Toggling label 1's twist must agree with the petrialed rotation.
        let mut toggled = twists.clone();
        toggled[0] = !toggled[0];
        let petrialed = r.partial_petrial(&[1].into_iter().collect()).unwrap();
        assert_eq!(tracer.count_with_twists(&toggled), boundary_count(&petrialed));
    }

    #[test]
    fn matchings_are_fixed_point_free_involutions() {
        for text in ["1 1", "1 -1", "1 2 -1 2", "3 1 -2 3 2 1"] {
            let r = rot(text);
            let system = EndpointSystem::new(&r);
            for matching in [system.vertex_match(), system.edge_match()] {
                assert_eq!(matching.len(), 2 * r.word().len());
                for (endpoint, &partner) in matching.iter().enumerate() {
                    assert_ne!(endpoint, partner, "{text}");
                    assert_eq!(matching[partner], endpoint, "{text}");
                }
            }
        }
    }

    #[test]
    fn report_bounds_and_display() {
        let report = GenusReport::of(&rot("1 -1"));
        assert_eq!(report.boundary_components, 1);
        assert_eq!(report.euler_characteristic, 1);
        assert_eq!(report.euler_genus, 1);
        assert_eq!(alloc::format!("{report}"), "f=1 \u{3c7}=1 \u{3b5}=1");
    }
}
