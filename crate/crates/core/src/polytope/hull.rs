//! Facet enumeration by exhaustive hyperplane search.
//!
//! For a full-dimensional point set in `Z^d`, every `d`-subset of points that
//! spans a hyperplane is a facet candidate; it is kept when all points lie
//! weakly on one side. Exponential in `d`, which is fine at desk scale.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{dot, integer_kernel, IntMatrix};
use crate::par;

/// `normal · x ≤ offset`, with a primitive integer normal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Inequality {
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

impl Inequality {
    /// `offset − normal · x`; non-negative exactly on the closed halfspace.
    pub fn slack(&self, x: &[BigInt]) -> BigInt {
        &self.offset - dot(&self.normal, x)
    }
}

/// `normal · x = value`
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Equation {
    pub normal: Vec<BigInt>,
    pub value: BigInt,
}

/// Facet inequalities plus affine-hull equations of a lattice polytope, in
/// ambient coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HRepresentation {
    pub inequalities: Vec<Inequality>,
    pub equations: Vec<Equation>,
}

impl HRepresentation {
    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.equations.iter().all(|e| dot(&e.normal, x) == e.value)
            && self.inequalities.iter().all(|h| !h.slack(x).is_negative())
    }

    /// Relative-interior membership: on the affine hull and strict on every facet.
    pub fn contains_relative_interior(&self, x: &[BigInt]) -> bool {
        self.equations.iter().all(|e| dot(&e.normal, x) == e.value)
            && self.inequalities.iter().all(|h| h.slack(x).is_positive())
    }

    /// Same tests for the dilate `k·P`.
    pub fn dilate(&self, k: &BigInt) -> HRepresentation {
        HRepresentation {
            inequalities: self
                .inequalities
                .iter()
                .map(|h| Inequality {
                    normal: h.normal.clone(),
                    offset: &h.offset * k,
                })
                .collect(),
            equations: self
                .equations
                .iter()
                .map(|e| Equation {
                    normal: e.normal.clone(),
                    value: &e.value * k,
                })
                .collect(),
        }
    }
}

/// Facets of the convex hull of `points`, which must span `Z^dim` affinely
/// (`dim ≥ 1`). Output is sorted and free of duplicates.
pub(crate) fn facets(points: &[Vec<BigInt>], dim: usize) -> Vec<Inequality> {
    debug_assert!(dim >= 1);
    let subsets: Vec<Vec<usize>> = (0..points.len()).combinations(dim).collect();
    let found = par::map(&subsets, |s| facet_through(points, s, dim));
    found.into_iter().flatten().collect::<BTreeSet<_>>().into_iter().collect()
}

fn facet_through(points: &[Vec<BigInt>], subset: &[usize], dim: usize) -> Option<Inequality> {
    let base = &points[subset[0]];
    let diffs: Vec<Vec<BigInt>> = subset[1..]
        .iter()
        .map(|&i| points[i].iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    let m = if diffs.is_empty() {
        IntMatrix::zeros(0, dim)
    } else {
        IntMatrix::from_rows(&diffs).expect("equal lengths")
    };
    let mut kernel = integer_kernel(&m);
    if kernel.len() != 1 {
        return None;
    }
    let mut normal = kernel.pop().expect("one vector");
    let mut offset = dot(&normal, base);
    let (mut above, mut below) = (false, false);
    for p in points {
        let v = dot(&normal, p);
        above |= v > offset;
        below |= v < offset;
        if above && below {
            return None;
        }
    }
    if above {
        normal.iter_mut().for_each(|x| *x = -std::mem::take(x));
        offset = -offset;
    }
    debug_assert!(!normal.iter().all(Zero::is_zero));
    Some(Inequality { normal, offset })
}
