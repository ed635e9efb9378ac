//! Lattice pyramids: construction, apex detection and decomposition.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::boxpoints::{simplex_support, EmbeddedSimplex};
use crate::error::{Error, Result};
use crate::linalg::{dot, integer_kernel, IntMatrix};
use crate::polytope::{LatticePoint, LatticePolytope};
use crate::IndexSet;

/// The `l`-fold standard pyramid: `l` times `B ↦ conv(0, B × {1})`.
pub fn standard_pyramid(b: &LatticePolytope, folds: usize) -> LatticePolytope {
    let mut p = b.clone();
    for _ in 0..folds {
        let dim = p.ambient_dim() + 1;
        let mut pts = vec![LatticePoint::origin(dim)];
        pts.extend(p.vertices().iter().map(|v| {
            let mut c = v.coords().to_vec();
            c.push(BigInt::one());
            LatticePoint::new(c)
        }));
        p = LatticePolytope::new(pts).expect("lifted vertices share a dimension");
    }
    p
}

/// Vertex `i` of a simplex is an apex iff `i` is outside the simplex's support.
pub fn is_apex_simplex(s: &EmbeddedSimplex, i: usize) -> Result<bool> {
    if i >= s.num_vertices() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: s.num_vertices(),
        });
    }
    Ok(!simplex_support(s).contains(&i))
}

/// All apexes of a simplex: the complement of its support.
pub fn simplex_apexes(s: &EmbeddedSimplex) -> IndexSet {
    let support = simplex_support(s);
    (0..s.num_vertices()).filter(|i| !support.contains(i)).collect()
}

/// Lattice distance of vertex `i` from `aff(V(P) \ {v_i})`, or `None` when
/// the remaining vertices still span `aff(P)`.
pub fn apex_height(p: &LatticePolytope, i: usize) -> Result<Option<BigInt>> {
    let len = p.num_vertices();
    if i >= len {
        return Err(Error::IndexOutOfRange { index: i, len });
    }
    let n = p.dimension();
    if n == 0 {
        return Ok(None);
    }
    let ys = p.intrinsic_vertices();
    let rest: Vec<&Vec<BigInt>> = ys.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, y)| y).collect();
    let base = rest[0];
    let diff = |y: &Vec<BigInt>| -> Vec<BigInt> { y.iter().zip(base).map(|(a, b)| a - b).collect() };
    let diffs: Vec<Vec<BigInt>> = rest[1..].iter().map(|y| diff(y)).collect();
    let m = if diffs.is_empty() {
        IntMatrix::zeros(0, n)
    } else {
        IntMatrix::from_rows(&diffs)?
    };
    let kernel = integer_kernel(&m);
    if kernel.len() != 1 {
        return Ok(None);
    }
    // The kernel basis is saturated, so this form is primitive on the lattice.
    Ok(Some(dot(&kernel[0], &diff(&ys[i])).abs()))
}

/// Apex test by vertex index.
pub fn is_apex_index(p: &LatticePolytope, i: usize) -> Result<bool> {
    Ok(apex_height(p, i)?.is_some_and(|h| h.is_one()))
}

/// `v` is an apex when `Q = conv(V(P) \ {v})` has dimension `dim P − 1` and
/// `v` lies at lattice distance 1 from `aff(Q)`. A point has no apex.
pub fn is_apex_general(p: &LatticePolytope, v: &LatticePoint) -> Result<bool> {
    let i = p.vertex_index(v).ok_or(Error::NotAVertex)?;
    is_apex_index(p, i)
}

/// Indices of all apexes, ascending.
pub fn apex_indices(p: &LatticePolytope) -> IndexSet {
    (0..p.num_vertices())
        .filter(|&i| is_apex_index(p, i).expect("index in range"))
        .collect()
}

/// `P` as an `l`-fold lattice pyramid over `base`, apexes in stripping order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PyramidDecomposition {
    pub base: LatticePolytope,
    pub apexes: Vec<LatticePoint>,
}

impl PyramidDecomposition {
    pub fn fold_count(&self) -> usize {
        self.apexes.len()
    }

    /// `standard_pyramid(base, l)`; same h* as the decomposed polytope.
    pub fn reconstruct(&self) -> LatticePolytope {
        standard_pyramid(&self.base, self.fold_count())
    }
}

/// Strips the lexicographically first apex until none is left.
pub fn decompose(p: &LatticePolytope) -> PyramidDecomposition {
    let mut base = p.clone();
    let mut apexes = Vec::new();
    while let Some(i) = (0..base.num_vertices()).find(|&i| is_apex_index(&base, i).expect("index in range")) {
        apexes.push(base.vertices()[i].clone());
        base = base.without_vertex(i).expect("index in range");
    }
    PyramidDecomposition { base, apexes }
}
