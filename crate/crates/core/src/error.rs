use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty point set")]
    Empty,
    #[error("point {index} has dimension {found}, expected {expected}")]
    MixedDimensions {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("polytope with {vertices} vertices in dimension {dim} is not a simplex")]
    NotASimplex { vertices: usize, dim: usize },
    #[error("simplex is degenerate (vertex determinant 0)")]
    DegenerateSimplex,
    #[error("embedded vertex {index} does not lie on the height-1 hyperplane")]
    NotEmbedded { index: usize },
    #[error("barycentric coordinates do not describe a lattice point of the half-open parallelepiped")]
    NotABoxPoint,
    #[error("point is not a vertex of the polytope")]
    NotAVertex,
    #[error("vertex index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("degree must be at least {min}, got {got}")]
    DegreeTooSmall { min: usize, got: usize },
    #[error("invalid corpus specification: {0}")]
    InvalidCorpus(String),
    #[error("interpolated h* coefficient {index} is negative ({value}); lattice point counts are inconsistent")]
    NegativeHStar { index: usize, value: String },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
