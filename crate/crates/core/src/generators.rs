//! Example families and reproducible random corpora.
//!
//! Random corpora use ChaCha8 (`rand_chacha::ChaCha8Rng`) seeded with
//! `seed_from_u64(seed)`. Every integer draw in `[lo, hi]` is
//! `lo + next_u64() mod (hi − lo + 1)`; the modulo bias is negligible for the
//! small ranges used here and keeps the procedure easy to replicate.
//!
//! Per polytope, in order: the dimension `n` is drawn from the dimension
//! range; for simplices `n + 1` points are drawn (coordinates in
//! `[-bound, bound]`, point by point, coordinate by coordinate) and redrawn
//! as a whole until they are affinely independent and, if requested, the
//! normalized volume is at most `max_volume`; for general polytopes the point
//! count is drawn from `[n + 2, n + 5]`, then the points, and the convex hull
//! is kept whatever its dimension.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::linalg::{determinant, IntMatrix};
use crate::polytope::{LatticePoint, LatticePolytope};

/// The simplex with vertices `e_i − e_n` (`i < n`) and
/// `e_0 + … + e_{n−1} + (3 − 2d) e_n` in `Z^{n+1}`, `n = 2d − 1`.
///
/// It has degree `d`, normalized volume 2, `h* = 1 + t^d`, and no apex.
pub fn paper_example(d: usize) -> Result<LatticePolytope> {
    if d < 2 {
        return Err(Error::DegreeTooSmall { min: 2, got: d });
    }
    let n = 2 * d - 1;
    let mut pts = Vec::with_capacity(n + 1);
    for i in 0..n {
        let mut v = vec![0i64; n + 1];
        v[i] = 1;
        v[n] = -1;
        pts.push(v);
    }
    let mut last = vec![1i64; n + 1];
    last[n] = 3 - 2 * d as i64;
    pts.push(last);
    LatticePolytope::from_coords(&pts)
}

/// `conv(0, e_1, …, e_n)` in `Z^n`.
pub fn standard_simplex(n: usize) -> LatticePolytope {
    let mut pts = vec![vec![0i64; n]];
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        pts.push(e);
    }
    LatticePolytope::from_coords(&pts).expect("nonempty, equal dimensions")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Shape {
    Simplex,
    General,
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Shape::Simplex => "simplex",
            Shape::General => "general",
        })
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "simplex" => Ok(Shape::Simplex),
            "general" => Ok(Shape::General),
            other => Err(Error::InvalidCorpus(format!("unknown shape {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CorpusSpec {
    pub seed: u64,
    pub min_dim: usize,
    pub max_dim: usize,
    /// Coordinates are drawn from `[-bound, bound]`.
    pub bound: i64,
    pub count: usize,
    pub shape: Shape,
    /// Upper bound on the normalized volume of sampled simplices. Ignored for
    /// general polytopes.
    pub max_volume: Option<u64>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec {
            seed: 0,
            min_dim: 1,
            max_dim: 4,
            bound: 3,
            count: 10,
            shape: Shape::Simplex,
            max_volume: None,
        }
    }
}

impl CorpusSpec {
    pub fn validate(&self) -> Result<()> {
        if self.min_dim > self.max_dim {
            return Err(Error::InvalidCorpus(format!(
                "empty dimension range {}..{}",
                self.min_dim, self.max_dim
            )));
        }
        if self.bound < 0 {
            return Err(Error::InvalidCorpus(format!("negative coordinate bound {}", self.bound)));
        }
        if self.shape == Shape::Simplex {
            if self.bound == 0 && self.max_dim > 0 {
                return Err(Error::InvalidCorpus("simplices of positive dimension need bound >= 1".into()));
            }
            if self.max_volume == Some(0) {
                return Err(Error::InvalidCorpus("max_volume must be at least 1".into()));
            }
        }
        Ok(())
    }
}

struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform-ish integer in `[lo, hi]`.
    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        let span = (hi - lo) as u64 + 1;
        lo + (self.rng.next_u64() % span) as i64
    }

    fn points(&mut self, count: usize, dim: usize, bound: i64) -> Vec<Vec<i64>> {
        (0..count)
            .map(|_| (0..dim).map(|_| self.range(-bound, bound)).collect())
            .collect()
    }
}

/// `|det|` of the lifted point matrix; zero when affinely dependent.
fn lifted_volume(points: &[Vec<i64>]) -> BigInt {
    let rows: Vec<Vec<i64>> = points
        .iter()
        .map(|p| {
            let mut r = p.clone();
            r.push(1);
            r
        })
        .collect();
    determinant(&IntMatrix::from_rows(&rows).expect("rectangular")).expect("square").abs()
}

/// Deterministic corpus for `spec`; see the module documentation for the
/// exact sampling procedure.
pub fn random_corpus(spec: &CorpusSpec) -> Result<Vec<LatticePolytope>> {
    spec.validate()?;
    let mut s = Sampler::new(spec.seed);
    let mut out = Vec::with_capacity(spec.count);
    for _ in 0..spec.count {
        let dim = s.range(spec.min_dim as i64, spec.max_dim as i64) as usize;
        let points = match spec.shape {
            Shape::Simplex => loop {
                let pts = s.points(dim + 1, dim, spec.bound);
                let vol = lifted_volume(&pts);
                let small = spec
                    .max_volume
                    .is_none_or(|m| vol.to_u64().is_some_and(|v| v <= m));
                if !vol.is_zero() && small {
                    break pts;
                }
            },
            Shape::General => {
                let count = s.range(dim as i64 + 2, dim as i64 + 5) as usize;
                s.points(count, dim, spec.bound)
            }
        };
        out.push(LatticePolytope::new(
            points.iter().map(|p| LatticePoint::from_i64(p)).collect(),
        )?);
    }
    Ok(out)
}
