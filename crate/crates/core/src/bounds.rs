//! Evaluation of the degree/volume/dimension bounds on concrete polytopes.
//!
//! Every check yields a [`BoundReport`]. Theorem-style checks are one
//! directional: when the dimension reaches the threshold, an apex must
//! exist; below it the report says [`Conclusion::NotApplicable`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::ehrhart::{hstar, hstar_via_interpolation, HStarPolynomial};
use crate::error::Result;
use crate::linalg::{determinant, IntMatrix};
use crate::polytope::LatticePolytope;
use crate::pyramids::is_apex_index;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Conclusion {
    Holds,
    Fails,
    NotApplicable,
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Conclusion::Holds => "holds",
            Conclusion::Fails => "fails",
            Conclusion::NotApplicable => "not_applicable",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub name: &'static str,
    /// Dimension.
    pub n: usize,
    /// Degree.
    pub d: usize,
    /// Normalized volume.
    pub volume: u64,
    pub vertices: usize,
    /// `|V(P)| − n − 1`.
    pub c: usize,
    pub hstar: Vec<u64>,
    /// The dimension threshold, for theorem-style checks.
    pub threshold: Option<BigInt>,
    pub hypothesis_satisfied: bool,
    pub conclusion: Conclusion,
    pub witness: Option<String>,
}

impl BoundReport {
    /// A satisfied hypothesis with a failed conclusion.
    pub fn is_violation(&self) -> bool {
        self.hypothesis_satisfied && self.conclusion == Conclusion::Fails
    }
}

/// The quantities shared by all checks.
#[derive(Debug, Clone)]
pub struct PolytopeFacts<'a> {
    pub polytope: &'a LatticePolytope,
    pub hstar: HStarPolynomial,
    /// First apex in canonical order.
    pub apex: Option<usize>,
}

impl<'a> PolytopeFacts<'a> {
    pub fn of(p: &'a LatticePolytope) -> Result<Self> {
        let apex = (0..p.num_vertices()).find(|&i| is_apex_index(p, i).expect("index in range"));
        Ok(PolytopeFacts {
            polytope: p,
            hstar: hstar(p)?,
            apex,
        })
    }

    fn report(&self, name: &'static str) -> BoundReport {
        let n = self.polytope.dimension();
        let vertices = self.polytope.num_vertices();
        BoundReport {
            name,
            n,
            d: self.hstar.degree(),
            volume: self.hstar.volume(),
            vertices,
            c: vertices - n - 1,
            hstar: self.hstar.coefficients().to_vec(),
            threshold: None,
            hypothesis_satisfied: false,
            conclusion: Conclusion::NotApplicable,
            witness: None,
        }
    }

    /// `n ≥ threshold ⇒ P has an apex`. A point has no apex to strip and is
    /// never counted as satisfying the hypothesis.
    fn apex_theorem(&self, name: &'static str, threshold: BigInt) -> BoundReport {
        let mut r = self.report(name);
        r.hypothesis_satisfied = r.n >= 1 && BigInt::from(r.n) >= threshold;
        r.threshold = Some(threshold);
        if r.hypothesis_satisfied {
            match self.apex {
                Some(i) => {
                    r.conclusion = Conclusion::Holds;
                    r.witness = Some(format!("apex {i}"));
                }
                None => {
                    r.conclusion = Conclusion::Fails;
                    r.witness = Some("no vertex is an apex".into());
                }
            }
        }
        r
    }
}

/// `n(c, d) = c(2d + 1) + 4d − 1`.
pub fn main_threshold(c: usize, d: usize) -> BigInt {
    BigInt::from(c) * (2 * d + 1) + BigInt::from(4 * d) - 1
}

/// `(V − 1)(2d + 1)`.
pub fn volume_threshold(volume: u64, d: usize) -> BigInt {
    (BigInt::from(volume) - 1) * (2 * d + 1)
}

/// `4d · C(2d + V − 1, 2d)`.
pub fn batyrev_threshold(volume: u64, d: usize) -> BigInt {
    let top = BigInt::from(2 * d as u64 + volume) - 1;
    let mut binom = BigInt::from(1);
    for i in 0..2 * d {
        binom = binom * (&top - i) / (i + 1);
    }
    BigInt::from(4 * d) * binom
}

pub fn check_main_theorem(p: &LatticePolytope) -> Result<BoundReport> {
    Ok(main_theorem(&PolytopeFacts::of(p)?))
}

pub fn check_vol_proposition(p: &LatticePolytope) -> Result<BoundReport> {
    Ok(vol_proposition(&PolytopeFacts::of(p)?))
}

pub fn check_batyrev_theorem(p: &LatticePolytope) -> Result<BoundReport> {
    Ok(batyrev_theorem(&PolytopeFacts::of(p)?))
}

pub fn check_stanley_inequality(p: &LatticePolytope) -> Result<BoundReport> {
    Ok(stanley_inequality(&PolytopeFacts::of(p)?))
}

pub fn check_hibi_fulldim(p: &LatticePolytope) -> Result<BoundReport> {
    Ok(hibi_fulldim(&PolytopeFacts::of(p)?))
}

pub fn check_basic_identities(p: &LatticePolytope) -> Result<BoundReport> {
    basic_identities(&PolytopeFacts::of(p)?)
}

fn main_theorem(f: &PolytopeFacts) -> BoundReport {
    let r = f.report("main_theorem");
    f.apex_theorem("main_theorem", main_threshold(r.c, r.d))
}

fn vol_proposition(f: &PolytopeFacts) -> BoundReport {
    f.apex_theorem("volume_proposition", volume_threshold(f.hstar.volume(), f.hstar.degree()))
}

fn batyrev_theorem(f: &PolytopeFacts) -> BoundReport {
    f.apex_theorem("batyrev_theorem", batyrev_threshold(f.hstar.volume(), f.hstar.degree()))
}

/// `1 + h*_1 ≤ h*_{d−1} + h*_d` for `d ≥ 1`.
fn stanley_inequality(f: &PolytopeFacts) -> BoundReport {
    let mut r = f.report("stanley_inequality");
    let h = &f.hstar;
    let d = r.d;
    if d == 0 {
        return r;
    }
    r.hypothesis_satisfied = true;
    let (lhs, rhs) = (1 + h.get(1), h.get(d - 1) + h.get(d));
    r.conclusion = if lhs <= rhs { Conclusion::Holds } else { Conclusion::Fails };
    r.witness = Some(format!("{lhs} <= {rhs}"));
    r
}

/// `h*_1 ≤ h*_i` for `2 ≤ i ≤ d − 1`, only when `d = n`.
fn hibi_fulldim(f: &PolytopeFacts) -> BoundReport {
    let mut r = f.report("hibi_inequalities");
    if r.d != r.n || r.n == 0 {
        return r;
    }
    r.hypothesis_satisfied = true;
    let h = &f.hstar;
    match (2..r.d).find(|&i| h.get(1) > h.get(i)) {
        Some(i) => {
            r.conclusion = Conclusion::Fails;
            r.witness = Some(format!("h*_1 = {} > h*_{i} = {}", h.get(1), h.get(i)));
        }
        None => r.conclusion = Conclusion::Holds,
    }
    r
}

/// `h*_0 = 1`, `h*_1 = |P ∩ M| − n − 1`, and `Σ h*_i` equals the volume of a
/// triangulation. Uses the interpolated h* so the volume side is independent.
fn basic_identities(f: &PolytopeFacts) -> Result<BoundReport> {
    let p = f.polytope;
    let mut r = f.report("basic_identities");
    r.hypothesis_satisfied = true;
    let h = hstar_via_interpolation(p)?;
    let points = p.count_lattice_points(1);
    let n = p.dimension() as u64;
    let tri = triangulated_volume(p);
    let mut problems = Vec::new();
    if h.get(0) != 1 {
        problems.push(format!("h*_0 = {}", h.get(0)));
    }
    if h.get(1) + n + 1 != points {
        problems.push(format!("h*_1 = {} but |P ∩ M| = {points}", h.get(1)));
    }
    if BigInt::from(h.volume()) != tri {
        problems.push(format!("sum h* = {} but triangulated volume = {tri}", h.volume()));
    }
    if h != f.hstar {
        problems.push("interpolated and box-point h* differ".into());
    }
    if problems.is_empty() {
        r.conclusion = Conclusion::Holds;
        r.witness = Some(format!("|P ∩ M| = {points}, volume = {tri}"));
    } else {
        r.conclusion = Conclusion::Fails;
        r.witness = Some(problems.join("; "));
    }
    Ok(r)
}

/// All checks in a fixed order.
pub fn check_all(p: &LatticePolytope) -> Result<Vec<BoundReport>> {
    let f = PolytopeFacts::of(p)?;
    Ok(vec![
        basic_identities(&f)?,
        stanley_inequality(&f),
        hibi_fulldim(&f),
        batyrev_theorem(&f),
        vol_proposition(&f),
        main_theorem(&f),
    ])
}

/// Pulling triangulation from the lowest vertex: cone it over a
/// triangulation of every facet that avoids it. Simplices are returned as
/// ascending vertex-index lists.
pub fn pulling_triangulation(p: &LatticePolytope) -> Vec<Vec<usize>> {
    if p.is_simplex() {
        return vec![(0..p.num_vertices()).collect()];
    }
    let mut out = Vec::new();
    for facet in p.facet_vertex_sets() {
        if facet.contains(&0) {
            continue;
        }
        // The facet's vertices keep their relative (lexicographic) order.
        let sub = p.sub_polytope(&facet).expect("facet indices are in range");
        for s in pulling_triangulation(&sub) {
            let mut simplex = vec![0];
            simplex.extend(s.iter().map(|&j| facet[j]));
            out.push(simplex);
        }
    }
    out
}

/// Sum of the normalized volumes of a pulling triangulation, measured in
/// the intrinsic lattice of `p`.
pub fn triangulated_volume(p: &LatticePolytope) -> BigInt {
    let ys = p.intrinsic_vertices();
    pulling_triangulation(p)
        .iter()
        .map(|s| {
            let rows: Vec<Vec<BigInt>> = s
                .iter()
                .map(|&i| {
                    let mut r = ys[i].clone();
                    r.push(BigInt::from(1));
                    r
                })
                .collect();
            determinant(&IntMatrix::from_rows(&rows).expect("rectangular"))
                .expect("square")
                .abs()
        })
        .sum()
}

/// Exact `Vol` as `u64`, if it fits.
pub fn triangulated_volume_u64(p: &LatticePolytope) -> Option<u64> {
    triangulated_volume(p).to_u64()
}
