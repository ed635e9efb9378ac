//! Greedy selection of box points covering the support of a simplex.
//!
//! Step `k` picks a box point `m_k` whose support adds the most new indices
//! `I_k` to the union of earlier supports. The selection stops once no box
//! point adds anything. [`verify_greedy_claim`] checks the halving estimate
//! `|I_k| · 2^k ≤ 2d` together with the two inequalities behind it, using the
//! fold of consecutive points as the witness for the second one.

use num_traits::One;

use crate::boxpoints::{enumerate_box_points, BoxPoint, EmbeddedSimplex};
use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::par;
use crate::IndexSet;

/// Which maximizer to take when several box points add equally many indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum TieBreak {
    /// Smallest (height, point).
    #[default]
    Ascending,
    /// Largest (height, point).
    Descending,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    /// `m_k`.
    pub point: BoxPoint,
    /// `I_k = supp(m_k) \ (supp(m_0) ∪ … ∪ supp(m_{k−1}))`.
    pub new_support: IndexSet,
    /// `J_k = I_{k−1} ∩ supp(m_k)`; `None` at `k = 0`.
    pub overlap: Option<IndexSet>,
    /// `Σ {λ_i + μ_i} v_i` for `m_{k−1} = Σ λ_i v_i`, `m_k = Σ μ_i v_i`; `None` at `k = 0`.
    pub folded: Option<BoxPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
    /// Union of the supports of all chosen points.
    pub covered: IndexSet,
    pub tie_break: TieBreak,
}

impl GreedyTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Union of supports of the first `k` chosen points.
    pub fn covered_before(&self, k: usize) -> IndexSet {
        self.steps[..k]
            .iter()
            .flat_map(|s| s.point.support().iter().copied())
            .collect()
    }
}

/// The box point with `λ_i = {a.λ_i + b.λ_i}`.
pub fn fold_box_points(a: &BoxPoint, b: &BoxPoint, s: &EmbeddedSimplex) -> Result<BoxPoint> {
    if a.lambdas().len() != b.lambdas().len() {
        return Err(Error::NotABoxPoint);
    }
    let one = Rational::one();
    let lambdas = a
        .lambdas()
        .iter()
        .zip(b.lambdas())
        .map(|(x, y)| {
            let sum = x + y;
            if sum >= one {
                sum - &one
            } else {
                sum
            }
        })
        .collect();
    s.box_point(lambdas)
}

/// Greedy trace with the default tie-break.
pub fn greedy_trace(s: &EmbeddedSimplex) -> GreedyTrace {
    greedy_trace_with(s, TieBreak::Ascending)
}

pub fn greedy_trace_with(s: &EmbeddedSimplex, tie_break: TieBreak) -> GreedyTrace {
    trace_from_points(s, &enumerate_box_points(s), tie_break)
}

/// Greedy trace over already enumerated box points, which must be sorted
/// by (height, point) as [`enumerate_box_points`] returns them.
pub fn trace_from_points(s: &EmbeddedSimplex, points: &[BoxPoint], tie_break: TieBreak) -> GreedyTrace {
    let mut covered = IndexSet::new();
    let mut steps: Vec<GreedyStep> = Vec::new();
    loop {
        let gains = par::map(points, |m| m.support().difference(&covered).count());
        let best = gains.iter().copied().max().unwrap_or(0);
        if best == 0 {
            break;
        }
        let pick = match tie_break {
            TieBreak::Ascending => gains.iter().position(|&g| g == best),
            TieBreak::Descending => gains.iter().rposition(|&g| g == best),
        }
        .expect("a maximizer exists");
        let m = points[pick].clone();
        let new_support: IndexSet = m.support().difference(&covered).copied().collect();
        let (overlap, folded) = match steps.last() {
            None => (None, None),
            Some(prev) => (
                Some(prev.new_support.intersection(m.support()).copied().collect()),
                Some(fold_box_points(&prev.point, &m, s).expect("box points of one simplex fold")),
            ),
        };
        covered.extend(new_support.iter().copied());
        steps.push(GreedyStep {
            point: m,
            new_support,
            overlap,
            folded,
        });
    }
    GreedyTrace {
        steps,
        covered,
        tie_break,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GreedyFailure {
    /// `|I_k| · 2^k > 2d`.
    Halving { step: usize, new_support: usize },
    /// `|J_k| + |I_k| > |I_{k−1}|`.
    FirstInequality { step: usize },
    /// `|I_{k−1}| − |J_k| + |I_k| > |I_{k−1}|`, i.e. `|I_k| > |J_k|`.
    SecondInequality { step: usize },
    /// The fold does not contain `(I_{k−1} \ J_k) ⊔ I_k` in its support.
    FoldSupport { step: usize },
    /// `covered` differs from the union of the chosen supports.
    Coverage,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyVerdict {
    pub degree: usize,
    pub steps: usize,
    pub failures: Vec<GreedyFailure>,
}

impl GreedyVerdict {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the halving estimate and both inequalities on every step of `t`,
/// which must come from a simplex of degree `d`.
pub fn verify_greedy_claim(t: &GreedyTrace, d: usize) -> GreedyVerdict {
    let mut failures = Vec::new();
    let two_d = 2 * d as u128;
    for (k, step) in t.steps.iter().enumerate() {
        let ik = step.new_support.len();
        let scaled = 1u128.checked_shl(k as u32).map_or(u128::MAX, |p| p.saturating_mul(ik as u128));
        if scaled > two_d {
            failures.push(GreedyFailure::Halving { step: k, new_support: ik });
        }
        if k == 0 {
            continue;
        }
        let prev = &t.steps[k - 1];
        let i_prev = prev.new_support.len();
        let jk = step.overlap.as_ref().map_or(0, IndexSet::len);
        if jk + ik > i_prev {
            failures.push(GreedyFailure::FirstInequality { step: k });
        }
        if i_prev + ik > i_prev + jk {
            failures.push(GreedyFailure::SecondInequality { step: k });
        }
        let earlier = t.covered_before(k - 1);
        let witness_ok = step.folded.as_ref().is_some_and(|m| {
            let fresh: IndexSet = m.support().difference(&earlier).copied().collect();
            let needed = step.overlap.as_ref().map_or_else(IndexSet::new, |j| {
                prev.new_support.difference(j).copied().collect::<IndexSet>()
            });
            needed.is_subset(&fresh) && step.new_support.is_subset(&fresh) && fresh.len() <= i_prev
        });
        if !witness_ok {
            failures.push(GreedyFailure::FoldSupport { step: k });
        }
    }
    if t.covered != t.covered_before(t.steps.len()) {
        failures.push(GreedyFailure::Coverage);
    }
    GreedyVerdict {
        degree: d,
        steps: t.steps.len(),
        failures,
    }
}
