//! Exact analysis of lattice polytopes.
//!
//! The crate computes h*-polynomials (by Ehrhart interpolation and, for
//! simplices, by enumerating the lattice points of the half-open fundamental
//! parallelepiped), degree and codegree, normalized volume, lattice-pyramid
//! structure, affine circuits, and evaluates the classical bounds relating
//! dimension, degree and volume on concrete instances.
//!
//! All arithmetic is exact. Data-parallel inner loops run on rayon when the
//! `parallel` feature (on by default) is enabled.

pub mod boxpoints;
pub mod bounds;
pub mod circuits;
pub mod ehrhart;
mod error;
pub mod generators;
pub mod greedy;
pub mod linalg;
pub mod par;
pub mod polytope;
pub mod pyramids;

pub use boxpoints::{BoxPoint, EmbeddedSimplex};
pub use bounds::{BoundReport, Conclusion};
pub use circuits::Circuit;
pub use ehrhart::HStarPolynomial;
pub use error::{Error, Result};
pub use greedy::{GreedyTrace, TieBreak};
pub use linalg::{IntMatrix, LinalgError, Rational};
pub use polytope::{HRepresentation, LatticePoint, LatticePolytope};
pub use pyramids::PyramidDecomposition;

/// Sorted set of vertex indices.
pub type IndexSet = std::collections::BTreeSet<usize>;
