//! Affine circuits of the vertex set.
//!
//! A circuit is a minimal affinely dependent set of vertices. Lifting every
//! vertex to `(y, 1)` turns affine dependence into linear dependence, and the
//! unique (up to scale) relation on a circuit is the one-dimensional integer
//! kernel of the lifted columns.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::Result;
use crate::ehrhart::hstar;
use crate::linalg::{integer_kernel, rank, IntMatrix};
use crate::par;
use crate::polytope::LatticePolytope;
use crate::IndexSet;

/// A circuit with its primitive signed relation `Σ relation_k · (v_{members_k}, 1) = 0`.
/// The first (lowest) member has a positive coefficient.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Circuit {
    members: Vec<usize>,
    relation: Vec<BigInt>,
}

impl Circuit {
    /// Vertex indices, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    /// Signed coefficients aligned with [`Self::members`].
    pub fn relation(&self) -> &[BigInt] {
        &self.relation
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn member_set(&self) -> IndexSet {
        self.members.iter().copied().collect()
    }

    /// `C_1`: members with positive coefficient.
    pub fn positive_part(&self) -> IndexSet {
        self.part(|z| z.is_positive())
    }

    /// `C_2`: members with negative coefficient.
    pub fn negative_part(&self) -> IndexSet {
        self.part(|z| z.is_negative())
    }

    /// `z_v > 0` with `Σ_{C_1} z_v v = Σ_{C_2} z_w w`.
    pub fn coefficients(&self) -> Vec<BigInt> {
        self.relation.iter().map(|z| z.abs()).collect()
    }

    fn part(&self, keep: impl Fn(&BigInt) -> bool) -> IndexSet {
        self.members
            .iter()
            .zip(&self.relation)
            .filter(|(_, z)| keep(z))
            .map(|(&i, _)| i)
            .collect()
    }
}

fn lifted_columns(p: &LatticePolytope) -> Vec<Vec<BigInt>> {
    p.intrinsic_vertices()
        .iter()
        .map(|y| {
            let mut c = y.clone();
            c.push(BigInt::from(1));
            c
        })
        .collect()
}

fn submatrix(cols: &[Vec<BigInt>], idx: &[usize]) -> IntMatrix {
    let chosen: Vec<Vec<BigInt>> = idx.iter().map(|&i| cols[i].clone()).collect();
    IntMatrix::from_columns(&chosen).expect("equal lengths")
}

/// Vertices outside the affine hull of the others. They lie in no circuit.
pub fn coloops(p: &LatticePolytope) -> IndexSet {
    let cols = lifted_columns(p);
    let full = p.dimension() + 1;
    (0..cols.len())
        .filter(|&i| {
            let rest: Vec<usize> = (0..cols.len()).filter(|&j| j != i).collect();
            rest.is_empty() || rank(&submatrix(&cols, &rest)) < full
        })
        .collect()
}

/// Depth-first search over independent sets in ascending index order. Adding
/// one element to an independent set creates at most one dependency; it is a
/// circuit exactly when the relation uses every element.
fn extend(cols: &[Vec<BigInt>], candidates: &[usize], set: &mut Vec<usize>, from: usize, out: &mut Vec<Circuit>) {
    for pos in from..candidates.len() {
        set.push(candidates[pos]);
        let mut kernel = integer_kernel(&submatrix(cols, set));
        match kernel.len() {
            0 => extend(cols, candidates, set, pos + 1, out),
            1 => {
                let mut z = kernel.pop().expect("one vector");
                if z.iter().all(|x| !x.is_zero()) {
                    if z[0].is_negative() {
                        z.iter_mut().for_each(|x| *x = -std::mem::take(x));
                    }
                    out.push(Circuit {
                        members: set.clone(),
                        relation: z,
                    });
                }
            }
            _ => unreachable!("an independent set plus one vector has nullity at most 1"),
        }
        set.pop();
    }
}

/// All circuits, sorted by member list.
pub fn enumerate_circuits(p: &LatticePolytope) -> Vec<Circuit> {
    let cols = lifted_columns(p);
    let skip = coloops(p);
    let candidates: Vec<usize> = (0..cols.len()).filter(|i| !skip.contains(i)).collect();
    let starts: Vec<usize> = (0..candidates.len()).collect();
    let mut out = par::flat_map(&starts, |&start| {
        let mut found = Vec::new();
        let mut set = vec![candidates[start]];
        extend(&cols, &candidates, &mut set, start + 1, &mut found);
        found
    });
    out.sort();
    out
}

/// Vertices contained in no circuit.
pub fn combinatorial_pyramid_apexes(p: &LatticePolytope) -> IndexSet {
    apexes_from_circuits(p.num_vertices(), &enumerate_circuits(p))
}

pub fn apexes_from_circuits(num_vertices: usize, circuits: &[Circuit]) -> IndexSet {
    let covered: IndexSet = circuits.iter().flat_map(|c| c.members.iter().copied()).collect();
    (0..num_vertices).filter(|i| !covered.contains(i)).collect()
}

/// Outcome of checking `|C| ≤ 2·deg(P) + 2` on every circuit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitBoundVerdict {
    pub degree: usize,
    pub bound: usize,
    pub circuit_count: usize,
    pub max_size: usize,
    /// The first circuit exceeding the bound, if any.
    pub violation: Option<Circuit>,
}

impl CircuitBoundVerdict {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

pub fn check_circuit_bound(p: &LatticePolytope) -> Result<CircuitBoundVerdict> {
    let degree = hstar(p)?.degree();
    Ok(circuit_bound_verdict(&enumerate_circuits(p), degree))
}

/// The bound check on precomputed circuits.
pub fn circuit_bound_verdict(circuits: &[Circuit], degree: usize) -> CircuitBoundVerdict {
    let bound = 2 * degree + 2;
    CircuitBoundVerdict {
        degree,
        bound,
        circuit_count: circuits.len(),
        max_size: circuits.iter().map(Circuit::len).max().unwrap_or(0),
        violation: circuits.iter().find(|c| c.len() > bound).cloned(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{paper_example, standard_simplex};
    use crate::pyramids::standard_pyramid;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn square() -> LatticePolytope {
        LatticePolytope::from_coords(&[[0, 0], [1, 0], [0, 1], [1, 1]]).unwrap()
    }

    #[test]
    fn simplices_have_no_circuits() {
        for n in 0..5 {
            let s = standard_simplex(n);
            assert!(enumerate_circuits(&s).is_empty());
            assert_eq!(combinatorial_pyramid_apexes(&s).len(), n + 1);
        }
        assert!(enumerate_circuits(&paper_example(3).unwrap()).is_empty());
    }

    #[test]
    fn square_parallelogram_law() {
        // Sorted vertices: (0,0), (0,1), (1,0), (1,1).
        let c = enumerate_circuits(&square());
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].members(), &[0, 1, 2, 3]);
        assert_eq!(c[0].relation(), big(&[1, -1, -1, 1]).as_slice());
        assert_eq!(c[0].positive_part(), IndexSet::from([0, 3]));
        assert_eq!(c[0].negative_part(), IndexSet::from([1, 2]));
        assert_eq!(c[0].coefficients(), big(&[1, 1, 1, 1]));
        assert!(combinatorial_pyramid_apexes(&square()).is_empty());
    }

    #[test]
    fn pyramid_over_square() {
        let p = standard_pyramid(&square(), 1);
        let c = enumerate_circuits(&p);
        assert_eq!(c.len(), 1);
        assert_eq!(combinatorial_pyramid_apexes(&p), IndexSet::from([0]));
        assert_eq!(coloops(&p), IndexSet::from([0]));
    }

    #[test]
    fn hexagon_circuits() {
        let h = LatticePolytope::from_coords(&[[1, 0], [0, 1], [-1, 1], [-1, 0], [0, -1], [1, -1]]).unwrap();
        let c = enumerate_circuits(&h);
        // No three vertices are collinear, so every 4-subset is a circuit.
        assert_eq!(c.len(), 15);
        assert!(c.iter().all(|x| x.len() == 4));
        assert!(c.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn prism_relations_balance() {
        // Each square face of the triangular prism carries a 4-element circuit.
        let prism = LatticePolytope::from_coords(&[
            [0, 0, 0], [1, 0, 0], [0, 1, 0],
            [0, 0, 1], [1, 0, 1], [0, 1, 1],
        ])
        .unwrap();
        let c = enumerate_circuits(&prism);
        for circ in &c {
            let z: BigInt = circ.relation().iter().sum();
            assert!(z.is_zero(), "affine relation must balance");
        }
        assert!(c.iter().filter(|x| x.len() == 4).count() >= 3);
    }

    #[test]
    fn bound_verdicts() {
        let v = check_circuit_bound(&square()).unwrap();
        assert_eq!(v.degree, 1);
        assert_eq!(v.bound, 4);
        assert_eq!(v.max_size, 4);
        assert!(v.holds());
        let s = check_circuit_bound(&standard_simplex(3)).unwrap();
        assert!(s.holds());
        assert_eq!(s.circuit_count, 0);
        let fake = circuit_bound_verdict(&enumerate_circuits(&square()), 0);
        assert!(!fake.holds());
        assert_eq!(fake.violation.unwrap().len(), 4);
    }
}
