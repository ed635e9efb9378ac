//! The lattice `aff(P) ∩ Z^N` of a possibly lower-dimensional point set,
//! with integer coordinates relative to a fixed origin.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::linalg::{dot, integer_kernel, integer_solution, IntMatrix};

#[derive(Debug, Clone)]
pub(crate) struct AffineLattice {
    origin: Vec<BigInt>,
    /// Rows: a basis (in Hermite normal form) of the direction lattice.
    basis: Vec<Vec<BigInt>>,
    /// Rows: integer left inverse, `left_inverse · basisᵀ = I`.
    left_inverse: Vec<Vec<BigInt>>,
    /// Affine-hull equations `normal · x = value`.
    equations: Vec<(Vec<BigInt>, BigInt)>,
}

impl AffineLattice {
    /// `points` must be nonempty with a common length; `points[0]` becomes the origin.
    pub(crate) fn new(points: &[&[BigInt]]) -> Self {
        let ambient = points[0].len();
        let origin = points[0].to_vec();
        let diffs: Vec<Vec<BigInt>> = points[1..]
            .iter()
            .map(|p| p.iter().zip(&origin).map(|(a, b)| a - b).collect())
            .collect();
        let diff_matrix = rows_or_empty(&diffs, ambient);
        let normals = integer_kernel(&diff_matrix);
        let basis = integer_kernel(&rows_or_empty(&normals, ambient));

        let basis_matrix = rows_or_empty(&basis, ambient);
        let left_inverse = (0..basis.len())
            .map(|k| {
                let unit: Vec<BigInt> =
                    (0..basis.len()).map(|i| BigInt::from((i == k) as i32)).collect();
                integer_solution(&basis_matrix, &unit)
                    .expect("shapes agree")
                    .expect("basis of a saturated lattice has an integer left inverse")
            })
            .collect();
        let equations = normals
            .into_iter()
            .map(|a| {
                let b = dot(&a, &origin);
                (a, b)
            })
            .collect();
        AffineLattice {
            origin,
            basis,
            left_inverse,
            equations,
        }
    }

    pub(crate) fn dim(&self) -> usize {
        self.basis.len()
    }

    pub(crate) fn origin(&self) -> &[BigInt] {
        &self.origin
    }

    pub(crate) fn equations(&self) -> &[(Vec<BigInt>, BigInt)] {
        &self.equations
    }

    /// True when `x` lies on `aff(k·P)`.
    pub(crate) fn on_dilated_hull(&self, x: &[BigInt], k: &BigInt) -> bool {
        self.equations.iter().all(|(a, b)| dot(a, x) == b * k)
    }

    /// Coordinates `y` with `x = k·origin + Σ y_i·basis_i`, or `None` when `x`
    /// is off the dilated affine hull.
    pub(crate) fn coords(&self, x: &[BigInt], k: &BigInt) -> Option<Vec<BigInt>> {
        if !self.on_dilated_hull(x, k) {
            return None;
        }
        let shifted: Vec<BigInt> = x.iter().zip(&self.origin).map(|(a, o)| a - o * k).collect();
        Some(self.left_inverse.iter().map(|row| dot(row, &shifted)).collect())
    }

    pub(crate) fn point(&self, y: &[BigInt], k: &BigInt) -> Vec<BigInt> {
        let mut x: Vec<BigInt> = self.origin.iter().map(|o| o * k).collect();
        for (yi, row) in y.iter().zip(&self.basis) {
            if yi.is_zero() {
                continue;
            }
            for (xj, bj) in x.iter_mut().zip(row) {
                *xj += yi * bj;
            }
        }
        x
    }

    /// An ambient linear functional `a` with `a · basis_i = c_i` for every `i`.
    pub(crate) fn lift_functional(&self, c: &[BigInt]) -> Vec<BigInt> {
        let ambient = self.origin.len();
        let mut a = vec![BigInt::zero(); ambient];
        for (ck, row) in c.iter().zip(&self.left_inverse) {
            for (aj, rj) in a.iter_mut().zip(row) {
                *aj += ck * rj;
            }
        }
        a
    }
}

fn rows_or_empty(rows: &[Vec<BigInt>], cols: usize) -> IntMatrix {
    if rows.is_empty() {
        IntMatrix::zeros(0, cols)
    } else {
        IntMatrix::from_rows(rows).expect("rows have equal length")
    }
}
