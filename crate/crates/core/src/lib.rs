//! Combinatorics of bouquets (one-vertex ribbon graphs) given as signed
//! rotations: boundary tracing, Euler genus, partial-Petrial polynomials,
//! interlacement graphs, word rewriting, and closed-form evaluators for
//! the complete-graph and path families.
//!
//! The crate is `no_std` + `alloc`; all IO, parallelism, and file formats
//! live in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod closed;
pub mod interlace;
pub mod poly;
pub mod rewrite;
pub mod rotation;
pub mod trace;

pub use interlace::InterlacementGraph;
pub use poly::GenusPolynomial;
pub use rotation::{EdgeSubset, Letter, LoopKind, Sign, SignedRotation};
pub use trace::GenusReport;
