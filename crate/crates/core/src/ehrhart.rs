//! h*-polynomials, degree, codegree and normalized volume.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::boxpoints::{hstar_from_box, EmbeddedSimplex};
use crate::error::{Error, Result};
use crate::polytope::LatticePolytope;

/// `h*_0 + h*_1 t + … + h*_n t^n` with `n = dim P`. Always stores all `n+1`
/// coefficients, trailing zeros included.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HStarPolynomial {
    coefficients: Vec<u64>,
}

impl HStarPolynomial {
    /// `coefficients` must be nonempty; its length fixes the dimension.
    pub fn from_coefficients(coefficients: Vec<u64>) -> Self {
        assert!(!coefficients.is_empty(), "h*-polynomial needs at least h*_0");
        HStarPolynomial { coefficients }
    }

    pub fn coefficients(&self) -> &[u64] {
        &self.coefficients
    }

    /// `h*_i`, zero beyond the stored range.
    pub fn get(&self, i: usize) -> u64 {
        self.coefficients.get(i).copied().unwrap_or(0)
    }

    /// The dimension `n` of the polytope this polynomial belongs to.
    pub fn dimension(&self) -> usize {
        self.coefficients.len() - 1
    }

    /// Largest `i` with `h*_i ≠ 0`.
    pub fn degree(&self) -> usize {
        self.coefficients.iter().rposition(|&c| c != 0).unwrap_or(0)
    }

    /// `n + 1 − deg`.
    pub fn codegree(&self) -> usize {
        self.dimension() + 1 - self.degree()
    }

    /// `Σ h*_i`, the normalized volume.
    pub fn volume(&self) -> u64 {
        self.coefficients.iter().sum()
    }

    /// Coefficients up to the degree.
    pub fn trimmed(&self) -> &[u64] {
        &self.coefficients[..=self.degree()]
    }

    /// Coefficients zero-padded (or truncated after the degree) to `len`.
    pub fn padded(&self, len: usize) -> Vec<u64> {
        (0..len.max(self.degree() + 1)).map(|i| self.get(i)).collect()
    }

    /// Coefficientwise `self ≤ other`, comparing zero-padded vectors.
    pub fn le_coefficientwise(&self, other: &HStarPolynomial) -> bool {
        let len = self.coefficients.len().max(other.coefficients.len());
        (0..len).all(|i| self.get(i) <= other.get(i))
    }

    /// Equality up to trailing zeros.
    pub fn same_polynomial(&self, other: &HStarPolynomial) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl fmt::Display for HStarPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coefficients.iter().enumerate() {
            if c == 0 && !(i == 0 && self.degree() == 0) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, _) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, _) => write!(f, "{c}t")?,
                (_, 1) => write!(f, "t^{i}")?,
                _ => write!(f, "{c}t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `|k·P ∩ M|` for `k = 0..=upto`.
pub fn lattice_point_counts(p: &LatticePolytope, upto: usize) -> Vec<u64> {
    let e = p.enumerator();
    (0..=upto as u64).map(|k| e.count(k)).collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
}

/// Recovers h* from the counts `L(0..=n)` by inverting
/// `Σ L(k) t^k = h*(t) / (1 − t)^{n+1}`:
/// `h*_j = Σ_{i ≤ j} (−1)^{j−i} C(n+1, j−i) L(i)`.
pub fn hstar_from_counts(counts: &[u64]) -> Result<HStarPolynomial> {
    let n = counts.len() - 1;
    let mut coeffs = Vec::with_capacity(n + 1);
    for j in 0..=n {
        let mut acc = BigInt::zero();
        for (i, &l) in counts.iter().enumerate().take(j + 1) {
            let term = binomial(n + 1, j - i) * l;
            if (j - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if acc.is_negative() {
            return Err(Error::NegativeHStar {
                index: j,
                value: acc.to_string(),
            });
        }
        coeffs.push(acc.to_u64().expect("h* coefficient bounded by a lattice point count"));
    }
    Ok(HStarPolynomial::from_coefficients(coeffs))
}

/// h* by counting lattice points in the first `dim P + 1` dilates.
pub fn hstar_via_interpolation(p: &LatticePolytope) -> Result<HStarPolynomial> {
    hstar_from_counts(&lattice_point_counts(p, p.dimension()))
}

/// h* by the cheapest available route: box points for simplices,
/// interpolation otherwise.
pub fn hstar(p: &LatticePolytope) -> Result<HStarPolynomial> {
    if p.is_simplex() {
        Ok(hstar_from_box(&EmbeddedSimplex::from_polytope(p)?))
    } else {
        hstar_via_interpolation(p)
    }
}

pub fn normalized_volume(p: &LatticePolytope) -> Result<u64> {
    Ok(hstar(p)?.volume())
}

/// `dim P + 1 − deg P`.
pub fn codegree(p: &LatticePolytope) -> Result<usize> {
    Ok(hstar(p)?.codegree())
}

/// Smallest `k ≥ 1` such that `k·P` has a lattice point in its relative interior.
pub fn codegree_by_interior(p: &LatticePolytope) -> usize {
    let n = p.dimension();
    let e = p.enumerator();
    (1..=n + 1)
        .find(|&k| e.count_interior(k as u64) > 0)
        .expect("(n+1)·P always has an interior lattice point")
}
