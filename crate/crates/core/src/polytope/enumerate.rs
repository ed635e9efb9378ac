//! Lattice points of dilates `k·P`.
//!
//! Points are scanned coordinate by coordinate in the intrinsic lattice of
//! `P`. The range of coordinate `j`, given the first `j` coordinates, is
//! read off the facets of the projection of `P` to its first `j+1`
//! coordinates, so every visited prefix extends to at least one point of
//! the projection and the scan never wanders through empty parts of the
//! bounding box.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::hull::{facets, Inequality};
use super::{LatticePoint, LatticePolytope};
use crate::par;

type Row = (Vec<i128>, i128);

/// Precomputed projection facets for repeated enumeration over dilations.
#[derive(Debug, Clone)]
pub struct LatticePointEnumerator<'a> {
    polytope: &'a LatticePolytope,
    /// `levels[j]` holds the facets of the projection to coordinates `0..=j`.
    levels: Vec<Vec<Row>>,
}

fn to_i128(x: &BigInt) -> i128 {
    x.to_i128()
        .expect("polytope coordinates exceed the range supported by lattice-point enumeration")
}

fn convert(ineqs: &[Inequality]) -> Vec<Row> {
    ineqs
        .iter()
        .map(|h| (h.normal.iter().map(to_i128).collect(), to_i128(&h.offset)))
        .collect()
}

impl<'a> LatticePointEnumerator<'a> {
    pub fn new(polytope: &'a LatticePolytope) -> Self {
        let n = polytope.dimension();
        let verts = polytope.intrinsic_vertices();
        let mut levels = Vec::with_capacity(n);
        for j in 1..=n {
            if j == n {
                levels.push(convert(polytope.intrinsic_facets()));
            } else {
                let mut proj: Vec<Vec<BigInt>> = verts.iter().map(|v| v[..j].to_vec()).collect();
                proj.sort();
                proj.dedup();
                levels.push(convert(&facets(&proj, j)));
            }
        }
        LatticePointEnumerator { polytope, levels }
    }

    fn interval(&self, level: usize, prefix: &[i128], k: i128, slack: i128) -> Option<(i128, i128)> {
        let mut lo: Option<i128> = None;
        let mut hi: Option<i128> = None;
        for (a, b) in &self.levels[level] {
            let rest = k * b - slack - a[..level].iter().zip(prefix).map(|(x, y)| x * y).sum::<i128>();
            let aj = a[level];
            if aj > 0 {
                let v = Integer::div_floor(&rest, &aj);
                hi = Some(hi.map_or(v, |h| h.min(v)));
            } else if aj < 0 {
                let v = Integer::div_ceil(&rest, &aj);
                lo = Some(lo.map_or(v, |l| l.max(v)));
            } else if rest < 0 {
                return None;
            }
        }
        let (lo, hi) = (lo.expect("polytope is bounded"), hi.expect("polytope is bounded"));
        (lo <= hi).then_some((lo, hi))
    }

    /// Depth-first scan below `prefix`; `leaf` receives each final interval.
    fn walk(&self, prefix: &mut Vec<i128>, k: i128, strict: bool, leaf: &mut dyn FnMut(&[i128], i128, i128)) {
        let level = prefix.len();
        let last = level + 1 == self.levels.len();
        let slack = i128::from(strict && last);
        let Some((lo, hi)) = self.interval(level, prefix, k, slack) else {
            return;
        };
        if last {
            leaf(prefix, lo, hi);
            return;
        }
        for y in lo..=hi {
            prefix.push(y);
            self.walk(prefix, k, strict, leaf);
            prefix.pop();
        }
    }

    pub fn count(&self, k: u64) -> u64 {
        self.count_impl(k, false)
    }

    /// Lattice points in the relative interior of `k·P` (`k ≥ 1`).
    pub fn count_interior(&self, k: u64) -> u64 {
        self.count_impl(k, true)
    }

    fn count_impl(&self, k: u64, strict: bool) -> u64 {
        if self.levels.is_empty() {
            return 1;
        }
        let k = i128::from(k);
        if self.levels.len() == 1 {
            let slack = i128::from(strict);
            return self.interval(0, &[], k, slack).map_or(0, |(lo, hi)| (hi - lo + 1) as u64);
        }
        let Some((lo, hi)) = self.interval(0, &[], k, 0) else {
            return 0;
        };
        let firsts: Vec<i128> = (lo..=hi).collect();
        par::sum(&firsts, |&y0| {
            let mut total = 0u64;
            let mut prefix = vec![y0];
            self.walk(&mut prefix, k, strict, &mut |_, lo, hi| total += (hi - lo + 1) as u64);
            total
        })
    }

    pub fn points(&self, k: u64) -> Vec<LatticePoint> {
        self.points_impl(k, false)
    }

    pub fn interior_points(&self, k: u64) -> Vec<LatticePoint> {
        self.points_impl(k, true)
    }

    fn points_impl(&self, k: u64, strict: bool) -> Vec<LatticePoint> {
        let kb = BigInt::from(k);
        let lattice = self.polytope.lattice();
        let to_point = |y: &[i128]| {
            let y: Vec<BigInt> = y.iter().map(|&v| BigInt::from(v)).collect();
            LatticePoint::new(lattice.point(&y, &kb))
        };
        if self.levels.is_empty() {
            return vec![to_point(&[])];
        }
        let k = i128::from(k);
        let (lo, hi) = match self.interval(0, &[], k, i128::from(strict && self.levels.len() == 1)) {
            Some(iv) => iv,
            None => return Vec::new(),
        };
        if self.levels.len() == 1 {
            let mut out: Vec<_> = (lo..=hi).map(|y| to_point(&[y])).collect();
            out.sort();
            return out;
        }
        let firsts: Vec<i128> = (lo..=hi).collect();
        let mut out = par::flat_map(&firsts, |&y0| {
            let mut pts = Vec::new();
            let mut prefix = vec![y0];
            self.walk(&mut prefix, k, strict, &mut |pre, lo, hi| {
                let mut full = pre.to_vec();
                full.push(0);
                for y in lo..=hi {
                    *full.last_mut().expect("nonempty") = y;
                    pts.push(to_point(&full));
                }
            });
            pts
        });
        out.sort();
        out
    }
}
