//! The partial-Petrial polynomial of a bouquet: the exact generating
//! function counting, over all 2^n edge subsets A, the Euler genus of the
//! partial Petrial by A.
//!
//! Enumeration walks the subsets in Gray-code order so each step toggles a
//! single loop's twist, then retraces the boundary in O(n). The subset
//! space can also be split into blocks by fixing the top bits; block
//! results merge by coefficient addition, letting callers parallelize.

use alloc::collections::BTreeMap;
use core::fmt;

use crate::rotation::{EdgeSubset, SignedRotation};
use crate::trace::BoundaryTracer;

/// Enumeration refuses rotations with more edges than this; counts then fit
/// comfortably in 64-bit integers.
pub const DEFAULT_EDGE_CAP: usize = 30;

/// Exact coefficient map of a genus generating polynomial: degree (Euler
/// genus) to subset count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenusPolynomial {
    coeffs: BTreeMap<usize, u64>,
    edges: usize,
}

impl GenusPolynomial {
    /// Builds a polynomial from (degree, count) pairs; zero counts are
    /// dropped, repeated degrees accumulate.
    pub fn from_coeffs<I: IntoIterator<Item = (usize, u64)>>(
        edges: usize,
        coeffs: I,
    ) -> GenusPolynomial {
        let mut map: BTreeMap<usize, u64> = BTreeMap::new();
        for (degree, count) in coeffs {
            if count > 0 {
                *map.entry(degree).or_insert(0) += count;
            }
        }
        GenusPolynomial { coeffs: map, edges }
    }

    fn zero(edges: usize) -> GenusPolynomial {
        GenusPolynomial {
            coeffs: BTreeMap::new(),
            edges,
        }
    }

    fn bump(&mut self, degree: usize) {
        *self.coeffs.entry(degree).or_insert(0) += 1;
    }

    /// Edge count of the source bouquet.
    pub fn edges(&self) -> usize {
        self.edges
    }

    pub fn coeff(&self, degree: usize) -> u64 {
        self.coeffs.get(&degree).copied().unwrap_or(0)
    }

    /// Nonzero coefficients in ascending degree order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.coeffs.iter().map(|(&d, &c)| (d, c))
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    /// Value at z = 1: the total subset count.
    pub fn evaluate_at_one(&self) -> u64 {
        self.coeffs.values().sum()
    }

    /// True when the nonzero-coefficient degrees form a contiguous interval.
    pub fn is_interpolating(&self) -> bool {
        match (self.min_degree(), self.max_degree()) {
            (Some(lo), Some(hi)) => self.coeffs.len() == hi - lo + 1,
            _ => true,
        }
    }

    /// True when exactly two coefficients are nonzero.
    pub fn is_binomial(&self) -> bool {
        self.coeffs.len() == 2
    }

    /// Pointwise coefficient addition, for merging block results.
    pub fn merge(&mut self, other: &GenusPolynomial) {
        debug_assert_eq!(self.edges, other.edges);
        for (degree, count) in other.iter() {
            *self.coeffs.entry(degree).or_insert(0) += count;
        }
    }
}

impl fmt::Display for GenusPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (i, (degree, count)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (degree, count) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "z")?,
                (1, c) => write!(f, "{c}z")?,
                (d, 1) => write!(f, "z^{d}")?,
                (d, c) => write!(f, "{c}z^{d}")?,
            }
        }
        Ok(())
    }
}

/// Errors from the enumeration entry points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyError {
    /// The rotation has more edges than the enumeration cap allows.
    EdgeCapExceeded { edges: usize, cap: usize },
    /// Block parameters out of range for the rotation.
    InvalidBlock { fixed_bits: u32, block: u64 },
}

impl fmt::Display for PolyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PolyError::EdgeCapExceeded { edges, cap } => {
                write!(f, "{edges} edges exceed the enumeration cap of {cap}")
            }
            PolyError::InvalidBlock { fixed_bits, block } => {
                write!(f, "block {block} out of range for {fixed_bits} fixed bits")
            }
        }
    }
}

impl core::error::Error for PolyError {}

/// The partial-Petrial polynomial of `r`, by exhaustive subset enumeration.
pub fn petrial_polynomial(r: &SignedRotation) -> Result<GenusPolynomial, PolyError> {
    petrial_polynomial_capped(r, DEFAULT_EDGE_CAP)
}

/// As [`petrial_polynomial`] with an explicit edge cap.
pub fn petrial_polynomial_capped(
    r: &SignedRotation,
    cap: usize,
) -> Result<GenusPolynomial, PolyError> {
    let n = r.edge_count();
    if n > cap {
        return Err(PolyError::EdgeCapExceeded { edges: n, cap });
    }
    Ok(enumerate_block(r, 0, 0))
}

/// The polynomial of a chord-diagram realization of a circle graph.
///
/// Identical to [`petrial_polynomial`]; the name records that the value
/// depends only on the interlacement graph of the diagram, which the test
/// suite verifies rather than assumes.
pub fn circle_graph_polynomial(d: &SignedRotation) -> Result<GenusPolynomial, PolyError> {
    petrial_polynomial(d)
}

/// Partial coefficient map over the subsets whose top `fixed_bits` bits
/// (in ascending-label bit order) equal `block`. Merging all blocks of a
/// given split reproduces the full polynomial.
pub fn petrial_polynomial_block(
    r: &SignedRotation,
    fixed_bits: u32,
    block: u64,
) -> Result<GenusPolynomial, PolyError> {
    let n = r.edge_count();
    if n > DEFAULT_EDGE_CAP {
        return Err(PolyError::EdgeCapExceeded {
            edges: n,
            cap: DEFAULT_EDGE_CAP,
        });
    }
    if fixed_bits as usize > n || (fixed_bits < 64 && block >> fixed_bits != 0) {
        return Err(PolyError::InvalidBlock { fixed_bits, block });
    }
    Ok(enumerate_block(r, fixed_bits, block))
}

/// The edge subset selected by bit `i` of `mask` meaning the i-th smallest
/// label of `r`.
pub fn subset_from_mask(r: &SignedRotation, mask: u64) -> EdgeSubset {
    r.labels()
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, label)| label)
        .collect()
}

fn enumerate_block(r: &SignedRotation, fixed_bits: u32, block: u64) -> GenusPolynomial {
    let n = r.edge_count();
    if n == 0 {
        let mut poly = GenusPolynomial::zero(0);
        poly.bump(0);
        return poly;
    }
    let free_bits = n - fixed_bits as usize;
    let mut tracer = BoundaryTracer::new(r);
    let mut twists = BoundaryTracer::base_twists(r);
    for bit in 0..fixed_bits as usize {
        if block & (1 << bit) != 0 {
            twists[free_bits + bit] = !twists[free_bits + bit];
        }
    }

    let mut poly = GenusPolynomial::zero(n);
    let f = tracer.count_with_twists(&twists);
    poly.bump(1 + n - f);
    for step in 1u64..(1u64 << free_bits) {
        // Consecutive Gray codes differ in the lowest set bit of the index.
        let toggle = step.trailing_zeros() as usize;
        twists[toggle] = !twists[toggle];
        let f = tracer.count_with_twists(&twists);
        poly.bump(1 + n - f);
    }
    poly
}
