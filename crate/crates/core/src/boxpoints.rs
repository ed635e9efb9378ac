//! Lattice points of the half-open parallelepiped of a simplex.
//!
//! A simplex with vertices `v_0..v_n` is lifted to height 1 in `Z^{n+1}`,
//! `Π = {Σ λ_i (v_i, 1) : 0 ≤ λ_i < 1}`. Its lattice points are in bijection
//! with the group `Z^{n+1} / ⟨(v_i, 1)⟩`, which has order `|det V|`. The
//! Smith normal form of `V` gives one representative per coset; replacing
//! the barycentric coordinates of each representative by their fractional
//! parts lands it in `Π`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::ehrhart::HStarPolynomial;
use crate::error::{Error, Result};
use crate::linalg::{
    adjugate, determinant, rational_inverse, smith_normal_form, to_integer_vec, IntMatrix,
    Rational,
};
use crate::par;
use crate::polytope::{LatticePoint, LatticePolytope};
use crate::IndexSet;

/// A simplex on the hyperplane `x_{n+1} = 1` of `Z^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedSimplex {
    /// The original vertices, used to report box points in the caller's coordinates.
    vertices: Vec<LatticePoint>,
    /// Column `i` is `(y_i, 1)` with `y_i` in intrinsic coordinates.
    matrix: IntMatrix,
    determinant: BigInt,
    adjugate: IntMatrix,
}

impl EmbeddedSimplex {
    /// Embeds a simplex through its intrinsic lattice, so lower-dimensional
    /// simplices get their relative normalized volume.
    pub fn from_polytope(p: &LatticePolytope) -> Result<Self> {
        if !p.is_simplex() {
            return Err(Error::NotASimplex {
                vertices: p.num_vertices(),
                dim: p.dimension(),
            });
        }
        let columns: Vec<Vec<BigInt>> = p
            .intrinsic_vertices()
            .iter()
            .map(|y| {
                let mut c = y.clone();
                c.push(BigInt::one());
                c
            })
            .collect();
        Self::build(p.vertices().to_vec(), columns)
    }

    /// From explicit lifted vertices `(y_i, 1)`; `n+1` columns of length `n+1`.
    pub fn from_embedded_columns(columns: Vec<Vec<BigInt>>) -> Result<Self> {
        let size = columns.len();
        if size == 0 {
            return Err(Error::Empty);
        }
        for (index, c) in columns.iter().enumerate() {
            if c.len() != size {
                return Err(Error::MixedDimensions {
                    index,
                    expected: size,
                    found: c.len(),
                });
            }
            if !c[size - 1].is_one() {
                return Err(Error::NotEmbedded { index });
            }
        }
        let vertices = columns
            .iter()
            .map(|c| LatticePoint::new(c[..size - 1].to_vec()))
            .collect();
        Self::build(vertices, columns)
    }

    fn build(vertices: Vec<LatticePoint>, columns: Vec<Vec<BigInt>>) -> Result<Self> {
        let matrix = IntMatrix::from_columns(&columns)?;
        let det = determinant(&matrix)?;
        if det.is_zero() {
            return Err(Error::DegenerateSimplex);
        }
        let adj = adjugate(&matrix)?;
        Ok(EmbeddedSimplex {
            vertices,
            matrix,
            determinant: det,
            adjugate: adj,
        })
    }

    pub fn dimension(&self) -> usize {
        self.matrix.cols() - 1
    }

    pub fn num_vertices(&self) -> usize {
        self.matrix.cols()
    }

    /// `V = (v_0 | … | v_n)` with lifted vertices as columns.
    pub fn vertex_matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn determinant(&self) -> &BigInt {
        &self.determinant
    }

    /// `|det V|`.
    pub fn normalized_volume(&self) -> BigInt {
        self.determinant.abs()
    }

    /// Barycentric coordinates of a point of `Z^{n+1}` (or `Q^{n+1}`) with
    /// respect to the lifted vertices: `λ = V⁻¹ x`.
    pub fn barycentric(&self, x: &[BigInt]) -> Vec<Rational> {
        let w = self.adjugate.mul_vec(x).expect("length n+1");
        let det = Rational::from_integer(self.determinant.clone());
        w.into_iter().map(|wi| Rational::from_integer(wi) / &det).collect()
    }

    /// The box point with the given barycentric coordinates.
    ///
    /// Fails unless every `λ_i ∈ [0, 1)` and `Σ λ_i (v_i, 1)` is integral.
    pub fn box_point(&self, lambdas: Vec<Rational>) -> Result<BoxPoint> {
        if lambdas.len() != self.num_vertices()
            || lambdas.iter().any(|l| l.is_negative() || *l >= Rational::one())
        {
            return Err(Error::NotABoxPoint);
        }
        let size = self.num_vertices();
        let mut embedded = vec![Rational::zero(); size];
        for (i, l) in lambdas.iter().enumerate().filter(|(_, l)| !l.is_zero()) {
            for (r, e) in embedded.iter_mut().enumerate() {
                *e += l * Rational::from_integer(self.matrix[(r, i)].clone());
            }
        }
        let embedded = to_integer_vec(&embedded).ok_or(Error::NotABoxPoint)?;
        let ambient_dim = self.vertices[0].dim();
        let mut point = vec![Rational::zero(); ambient_dim];
        for (l, v) in lambdas.iter().zip(&self.vertices).filter(|(l, _)| !l.is_zero()) {
            for (p, c) in point.iter_mut().zip(v.coords()) {
                *p += l * Rational::from_integer(c.clone());
            }
        }
        let point = to_integer_vec(&point).ok_or(Error::NotABoxPoint)?;
        let height = embedded[size - 1].to_u64().expect("height is between 0 and n");
        let support = lambdas
            .iter()
            .enumerate()
            .filter(|(_, l)| !l.is_zero())
            .map(|(i, _)| i)
            .collect();
        Ok(BoxPoint {
            point: LatticePoint::new(point),
            embedded,
            lambdas,
            height,
            support,
        })
    }

    /// The box point congruent to `x ∈ Z^{n+1}` modulo the lifted vertices.
    pub fn reduce(&self, x: &[BigInt]) -> BoxPoint {
        let d = self.normalized_volume();
        let sign = if self.determinant.is_negative() { -BigInt::one() } else { BigInt::one() };
        let w = self.adjugate.mul_vec(x).expect("length n+1");
        let lambdas = w
            .into_iter()
            .map(|wi| Rational::new((wi * &sign).mod_floor(&d), d.clone()))
            .collect();
        self.box_point(lambdas).expect("fractional parts of a lattice point give a box point")
    }
}

/// A lattice point `m = Σ λ_i v_i` of the half-open parallelepiped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoxPoint {
    point: LatticePoint,
    embedded: Vec<BigInt>,
    lambdas: Vec<Rational>,
    height: u64,
    support: IndexSet,
}

impl BoxPoint {
    /// `Σ λ_i v_i` in the coordinates of the simplex's original vertices.
    pub fn point(&self) -> &LatticePoint {
        &self.point
    }

    /// `Σ λ_i (y_i, 1)` in `Z^{n+1}`; the last coordinate is the height.
    pub fn embedded(&self) -> &[BigInt] {
        &self.embedded
    }

    pub fn lambdas(&self) -> &[Rational] {
        &self.lambdas
    }

    /// `Σ λ_i`.
    pub fn height(&self) -> u64 {
        self.height
    }

    /// `{i : λ_i ≠ 0}`.
    pub fn support(&self) -> &IndexSet {
        &self.support
    }

    pub fn is_origin(&self) -> bool {
        self.support.is_empty()
    }
}

impl Ord for BoxPoint {
    /// By height, then lexicographically by point.
    fn cmp(&self, other: &Self) -> Ordering {
        (self.height, &self.point, &self.embedded).cmp(&(other.height, &other.point, &other.embedded))
    }
}

impl PartialOrd for BoxPoint {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// All `|det V|` box points, sorted by (height, point).
pub fn enumerate_box_points(s: &EmbeddedSimplex) -> Vec<BoxPoint> {
    let snf = smith_normal_form(&s.matrix);
    let u_inv = rational_inverse(&snf.u).expect("unimodular");
    let size = s.num_vertices();
    // Nontrivial invariant factors and the matching columns of U⁻¹.
    let factors: Vec<(i128, Vec<BigInt>)> = snf
        .diagonal
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_one())
        .map(|(i, d)| {
            let col = (0..size).map(|r| u_inv[r][i].to_integer()).collect();
            (d.to_i128().expect("volume fits in i128"), col)
        })
        .collect();
    let order: i128 = factors.iter().map(|(d, _)| d).product();
    let mut out = par::map_range(0, order, |g| {
        let mut rest = g;
        let mut x = vec![BigInt::zero(); size];
        for (d, col) in &factors {
            let c = rest % d;
            rest /= d;
            if c != 0 {
                let c = BigInt::from(c);
                for (xi, ui) in x.iter_mut().zip(col) {
                    *xi += &c * ui;
                }
            }
        }
        s.reduce(&x)
    });
    out.sort();
    out
}

/// `h*_i` = number of box points of height `i`.
pub fn hstar_from_box(s: &EmbeddedSimplex) -> HStarPolynomial {
    hstar_from_points(s, &enumerate_box_points(s))
}

/// Height histogram of already enumerated box points.
pub fn hstar_from_points(s: &EmbeddedSimplex, points: &[BoxPoint]) -> HStarPolynomial {
    let mut coeffs = vec![0u64; s.dimension() + 1];
    for m in points {
        coeffs[m.height as usize] += 1;
    }
    HStarPolynomial::from_coefficients(coeffs)
}

/// Union of the supports of all box points.
pub fn simplex_support(s: &EmbeddedSimplex) -> IndexSet {
    support_of(&enumerate_box_points(s))
}

pub fn support_of(points: &[BoxPoint]) -> IndexSet {
    points.iter().flat_map(|m| m.support.iter().copied()).collect()
}
