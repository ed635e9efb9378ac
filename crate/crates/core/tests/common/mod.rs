//! Independent reference implementations used as oracles.
//!
//! Everything here is deliberately naive: cofactor expansion in `i128`,
//! bounding-box scans, and subset enumeration. None of it shares code with
//! the library's normal-form or projection-based algorithms.
#![allow(dead_code)]

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use latpyr::{LatticePoint, LatticePolytope};

pub fn to_i128(v: &[BigInt]) -> Vec<i128> {
    v.iter().map(|x| x.to_i128().expect("small")).collect()
}

/// Determinant by cofactor expansion along the first row.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => (0..n)
            .filter(|&j| m[0][j] != 0)
            .map(|j| {
                let minor: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * det(&minor)
            })
            .sum(),
    }
}

/// Adjugate by cofactors: `adj[i][j] = (−1)^{i+j} det(minor(j, i))`.
pub fn adjugate(m: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let n = m.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i128>> = (0..n)
                        .filter(|&r| r != j)
                        .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c]).collect())
                        .collect();
                    let s = if (i + j) % 2 == 0 { 1 } else { -1 };
                    s * det(&minor)
                })
                .collect()
        })
        .collect()
}

/// Rank by fraction-free elimination in `i128` (small inputs only).
#[allow(clippy::needless_range_loop)]
pub fn rank(rows: &[Vec<i128>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else { continue };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                for k in 0..cols {
                    m[i][k] = a * m[i][k] - b * m[r][k];
                }
                let g = m[i].iter().fold(0i128, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

fn div_ceil(a: i128, b: i128) -> i128 {
    -((-a).div_euclid(b))
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Lifted intrinsic vertex matrix of a simplex, vertices as columns.
pub fn lifted_matrix(p: &LatticePolytope) -> Vec<Vec<i128>> {
    let ys: Vec<Vec<i128>> = p.intrinsic_vertices().iter().map(|y| to_i128(y)).collect();
    let size = ys.len();
    (0..size)
        .map(|r| (0..size).map(|c| if r + 1 == size { 1 } else { ys[c][r] }).collect())
        .collect()
}

/// Lattice points of the half-open parallelepiped by a bounding-box scan
/// over `Z^{n+1}`, pruned with interval bounds on `adj(V)·x`.
///
/// Returns the points in lifted intrinsic coordinates, sorted.
pub fn brute_force_box_points(p: &LatticePolytope) -> Vec<Vec<i128>> {
    let v = lifted_matrix(p);
    let size = v.len();
    let d = det(&v);
    assert_ne!(d, 0);
    let (dabs, sign) = (d.abs(), d.signum());
    let adj: Vec<Vec<i128>> = adjugate(&v)
        .into_iter()
        .map(|r| r.into_iter().map(|x| x * sign).collect())
        .collect();
    // Box of Π: coordinate r ranges over sums of the negative / positive entries of row r.
    let mut ranges: Vec<(i128, i128)> = v
        .iter()
        .map(|row| {
            let lo: i128 = row.iter().filter(|&&x| x < 0).sum();
            let hi: i128 = row.iter().filter(|&&x| x > 0).sum();
            (lo, hi)
        })
        .collect();
    // Heights are 0..=n, strictly below n+1.
    ranges[size - 1] = (0, size as i128 - 1);
    // Scan the height first.
    let order: Vec<usize> = std::iter::once(size - 1).chain(0..size - 1).collect();
    // rem[l][i] = (min, max) of Σ_{later coords r} adj[i][r]·x_r over the box.
    let mut rem = vec![vec![(0i128, 0i128); size]; size + 1];
    for l in (0..size).rev() {
        let r = order[l];
        for i in 0..size {
            let a = adj[i][r];
            let (lo, hi) = (a * ranges[r].0, a * ranges[r].1);
            rem[l][i] = (rem[l + 1][i].0 + lo.min(hi), rem[l + 1][i].1 + lo.max(hi));
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i128; size];
    let mut partial = vec![0i128; size];
    scan(0, &order, &ranges, &adj, &rem, dabs, &mut x, &mut partial, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn scan(
    level: usize,
    order: &[usize],
    ranges: &[(i128, i128)],
    adj: &[Vec<i128>],
    rem: &[Vec<(i128, i128)>],
    dabs: i128,
    x: &mut Vec<i128>,
    partial: &mut Vec<i128>,
    out: &mut Vec<Vec<i128>>,
) {
    let size = x.len();
    if (0..size).any(|i| partial[i] + rem[level][i].1 < 0 || partial[i] + rem[level][i].0 > dabs - 1) {
        return;
    }
    if level == size {
        out.push(x.clone());
        return;
    }
    let r = order[level];
    // Values of x_r for which every 0 <= (adj·x)_i <= |D| - 1 stays reachable.
    let (mut lo, mut hi) = ranges[r];
    for i in 0..size {
        let a = adj[i][r];
        let need_lo = -(partial[i] + rem[level + 1][i].1);
        let need_hi = dabs - 1 - partial[i] - rem[level + 1][i].0;
        match a.signum() {
            1 => {
                lo = lo.max(div_ceil(need_lo, a));
                hi = hi.min(need_hi.div_euclid(a));
            }
            -1 => {
                lo = lo.max(div_ceil(-need_hi, -a));
                hi = hi.min((-need_lo).div_euclid(-a));
            }
            _ => {}
        }
    }
    for val in lo..=hi {
        x[r] = val;
        for i in 0..size {
            partial[i] += adj[i][r] * val;
        }
        scan(level + 1, order, ranges, adj, rem, dabs, x, partial, out);
        for i in 0..size {
            partial[i] -= adj[i][r] * val;
        }
    }
    x[r] = 0;
}

/// `|k·P ∩ Z^N|` by scanning the bounding box of `k·P` in ambient
/// coordinates and testing membership against the H-representation.
pub fn bbox_count(p: &LatticePolytope, k: i64, interior: bool) -> u64 {
    let dim = p.ambient_dim();
    let verts: Vec<Vec<i128>> = p.vertices().iter().map(|v| to_i128(v.coords())).collect();
    let lo: Vec<i128> = (0..dim).map(|c| verts.iter().map(|v| v[c]).min().unwrap() * k as i128).collect();
    let hi: Vec<i128> = (0..dim).map(|c| verts.iter().map(|v| v[c]).max().unwrap() * k as i128).collect();
    let h = p.hrep().dilate(&BigInt::from(k));
    let mut count = 0;
    let mut x = lo.clone();
    if dim == 0 {
        return 1;
    }
    loop {
        let pt: Vec<BigInt> = x.iter().map(|&c| BigInt::from(c)).collect();
        let inside = if interior { h.contains_relative_interior(&pt) } else { h.contains(&pt) };
        count += u64::from(inside);
        let mut c = 0;
        loop {
            if c == dim {
                return count;
            }
            if x[c] < hi[c] {
                x[c] += 1;
                break;
            }
            x[c] = lo[c];
            c += 1;
        }
    }
}

/// Circuits by testing every vertex subset of size 2..=dim+2.
pub fn brute_force_circuits(p: &LatticePolytope) -> Vec<Vec<usize>> {
    let lifted: Vec<Vec<i128>> = p
        .intrinsic_vertices()
        .iter()
        .map(|y| {
            let mut r = to_i128(y);
            r.push(1);
            r
        })
        .collect();
    let dependent = |s: &[usize]| {
        let rows: Vec<Vec<i128>> = s.iter().map(|&i| lifted[i].clone()).collect();
        rank(&rows) < s.len()
    };
    let mut out = Vec::new();
    for size in 2..=(p.dimension() + 2).min(p.num_vertices()) {
        for s in (0..p.num_vertices()).combinations(size) {
            if dependent(&s) && s.iter().all(|&skip| {
                let sub: Vec<usize> = s.iter().copied().filter(|&i| i != skip).collect();
                !dependent(&sub)
            }) {
                out.push(s);
            }
        }
    }
    out.sort();
    out
}

pub fn point_set(points: &[Vec<i64>]) -> Vec<LatticePoint> {
    points.iter().map(|p| LatticePoint::from_i64(p)).collect()
}

/// Full-dimensional simplices in `Z^n`, `n` in `dims`, coordinates in
/// `[-bound, bound]`, normalized volume at most `max_volume`.
pub fn simplex_strategy(
    dims: std::ops::RangeInclusive<usize>,
    bound: i64,
    max_volume: i128,
) -> impl Strategy<Value = LatticePolytope> {
    dims.prop_flat_map(move |n| {
        proptest::collection::vec(proptest::collection::vec(-bound..=bound, n), n + 1)
    })
    .prop_filter_map("degenerate or too large", move |pts| {
        let lifted: Vec<Vec<i128>> = pts
            .iter()
            .map(|p| p.iter().map(|&c| c as i128).chain(std::iter::once(1)).collect())
            .collect();
        let v = det(&lifted).abs();
        if v == 0 || v > max_volume {
            return None;
        }
        LatticePolytope::new(point_set(&pts)).ok()
    })
}

/// Hulls of `n+1..=n+4` random points in `Z^n`; possibly lower-dimensional.
pub fn polytope_strategy(dims: std::ops::RangeInclusive<usize>, bound: i64) -> impl Strategy<Value = LatticePolytope> {
    dims.prop_flat_map(move |n| {
        (n + 1..=n + 4).prop_flat_map(move |count| {
            proptest::collection::vec(proptest::collection::vec(-bound..=bound, n), count)
        })
    })
    .prop_map(|pts| LatticePolytope::new(point_set(&pts)).expect("nonempty"))
}

pub fn set(v: &[usize]) -> BTreeSet<usize> {
    v.iter().copied().collect()
}
