//! Lattice polytopes given by their vertices.
//!
//! A [`LatticePolytope`] may be lower-dimensional in its ambient lattice.
//! Internally every computation happens in the lattice `aff(P) ∩ Z^N`,
//! re-coordinatized by a Hermite-normal-form basis, so dimension, facets,
//! point counts and volumes are all intrinsic.

mod affine;
mod enumerate;
mod hull;
mod point;

use num_bigint::BigInt;

pub(crate) use affine::AffineLattice;
pub use enumerate::LatticePointEnumerator;
pub use hull::{Equation, HRepresentation, Inequality};
pub use point::LatticePoint;

use crate::error::{Error, Result};
use crate::linalg::{rank, IntMatrix};

#[derive(Debug, Clone)]
pub struct LatticePolytope {
    ambient_dim: usize,
    vertices: Vec<LatticePoint>,
    lattice: AffineLattice,
    intrinsic_vertices: Vec<Vec<BigInt>>,
    intrinsic_facets: Vec<Inequality>,
    hrep: HRepresentation,
}

impl PartialEq for LatticePolytope {
    fn eq(&self, other: &Self) -> bool {
        self.ambient_dim == other.ambient_dim && self.vertices == other.vertices
    }
}

impl Eq for LatticePolytope {}

impl LatticePolytope {
    /// The convex hull of `points`: duplicates and non-extreme points are
    /// dropped and vertices are sorted lexicographically.
    pub fn new(points: Vec<LatticePoint>) -> Result<Self> {
        let first = points.first().ok_or(Error::Empty)?;
        let ambient_dim = first.dim();
        if let Some((index, p)) = points.iter().enumerate().find(|(_, p)| p.dim() != ambient_dim) {
            return Err(Error::MixedDimensions {
                index,
                expected: ambient_dim,
                found: p.dim(),
            });
        }
        let mut points = points;
        points.sort();
        points.dedup();

        let refs: Vec<&[BigInt]> = points.iter().map(|p| p.coords()).collect();
        let lattice = AffineLattice::new(&refs);
        let one = BigInt::from(1);
        let coords: Vec<Vec<BigInt>> = points
            .iter()
            .map(|p| lattice.coords(p, &one).expect("point lies on its own affine hull"))
            .collect();
        let dim = lattice.dim();

        let (vertices, intrinsic_vertices, intrinsic_facets) = if dim == 0 {
            (points, coords, Vec::new())
        } else {
            let facets = hull::facets(&coords, dim);
            let mut verts = Vec::new();
            let mut ivs = Vec::new();
            for (p, y) in points.into_iter().zip(coords) {
                let tight: Vec<Vec<BigInt>> = facets
                    .iter()
                    .filter(|h| hull::Inequality::slack(h, &y) == BigInt::from(0))
                    .map(|h| h.normal.clone())
                    .collect();
                if !tight.is_empty() && rank(&IntMatrix::from_rows(&tight)?) == dim {
                    verts.push(p);
                    ivs.push(y);
                }
            }
            (verts, ivs, facets)
        };

        let hrep = ambient_hrep(&lattice, &intrinsic_facets);
        Ok(LatticePolytope {
            ambient_dim,
            vertices,
            lattice,
            intrinsic_vertices,
            intrinsic_facets,
            hrep,
        })
    }

    /// Convenience constructor from small integer coordinates.
    pub fn from_coords<R: AsRef<[i64]>>(points: &[R]) -> Result<Self> {
        Self::new(points.iter().map(|p| LatticePoint::from_i64(p.as_ref())).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension of the affine hull.
    pub fn dimension(&self) -> usize {
        self.lattice.dim()
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.dimension() + 1
    }

    pub fn hrep(&self) -> &HRepresentation {
        &self.hrep
    }

    pub fn vertex_index(&self, v: &LatticePoint) -> Option<usize> {
        self.vertices.binary_search(v).ok()
    }

    /// `conv` of the vertices with the given indices.
    pub fn sub_polytope(&self, indices: &[usize]) -> Result<LatticePolytope> {
        let pts = indices
            .iter()
            .map(|&i| {
                self.vertices.get(i).cloned().ok_or(Error::IndexOutOfRange {
                    index: i,
                    len: self.vertices.len(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        LatticePolytope::new(pts)
    }

    /// `conv(V(P) \ {v_index})`.
    pub fn without_vertex(&self, index: usize) -> Result<LatticePolytope> {
        if index >= self.vertices.len() {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.vertices.len(),
            });
        }
        let rest: Vec<usize> = (0..self.vertices.len()).filter(|&i| i != index).collect();
        self.sub_polytope(&rest)
    }

    pub fn contains(&self, x: &LatticePoint) -> bool {
        x.dim() == self.ambient_dim && self.hrep.contains(x)
    }

    pub fn enumerator(&self) -> LatticePointEnumerator<'_> {
        LatticePointEnumerator::new(self)
    }

    /// All lattice points of `k·P`, sorted.
    pub fn lattice_points(&self, k: u64) -> Vec<LatticePoint> {
        self.enumerator().points(k)
    }

    /// Lattice points in the relative interior of `k·P`, sorted. `k ≥ 1`.
    pub fn interior_lattice_points(&self, k: u64) -> Vec<LatticePoint> {
        self.enumerator().interior_points(k)
    }

    pub fn count_lattice_points(&self, k: u64) -> u64 {
        self.enumerator().count(k)
    }

    /// Coordinates of `x ∈ aff(k·P)` in the intrinsic lattice.
    pub fn intrinsic_coords(&self, x: &[BigInt], k: u64) -> Option<Vec<BigInt>> {
        self.lattice.coords(x, &BigInt::from(k))
    }

    pub(crate) fn lattice(&self) -> &AffineLattice {
        &self.lattice
    }

    /// Vertex coordinates in the intrinsic lattice `Z^dim`, aligned with [`Self::vertices`].
    pub fn intrinsic_vertices(&self) -> &[Vec<BigInt>] {
        &self.intrinsic_vertices
    }

    pub(crate) fn intrinsic_facets(&self) -> &[Inequality] {
        &self.intrinsic_facets
    }

    /// For each facet (in H-representation order), the indices of the vertices on it.
    pub fn facet_vertex_sets(&self) -> Vec<Vec<usize>> {
        self.intrinsic_facets
            .iter()
            .map(|h| {
                self.intrinsic_vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, y)| h.slack(y) == BigInt::from(0))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect()
    }
}

fn ambient_hrep(lattice: &AffineLattice, facets: &[Inequality]) -> HRepresentation {
    let origin = lattice.origin();
    let mut inequalities: Vec<Inequality> = facets
        .iter()
        .map(|h| {
            let normal = lattice.lift_functional(&h.normal);
            let offset = &h.offset + crate::linalg::dot(&normal, origin);
            Inequality { normal, offset }
        })
        .collect();
    inequalities.sort();
    let equations = lattice
        .equations()
        .iter()
        .map(|(a, b)| Equation {
            normal: a.clone(),
            value: b.clone(),
        })
        .collect();
    HRepresentation {
        inequalities,
        equations,
    }
}
