use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{IntMatrix, LinalgError};

/// Fraction-free row echelon form in place. Returns the rank and the sign
/// of the row permutation applied. Every division performed is exact.
fn bareiss_echelon(m: &mut IntMatrix) -> (usize, bool) {
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut negated = false;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != rank {
            m.swap_rows(p, rank);
            negated = !negated;
        }
        let pivot = m[(rank, c)].clone();
        for i in rank + 1..rows {
            let lead = m[(i, c)].clone();
            for j in c + 1..cols {
                let v = (&pivot * &m[(i, j)] - &lead * &m[(rank, j)]) / &prev;
                m[(i, j)] = v;
            }
            m[(i, c)] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    (rank, negated)
}

/// Exact determinant by Bareiss elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut work = m.clone();
    let (rank, negated) = bareiss_echelon(&mut work);
    if rank < n {
        return Ok(BigInt::zero());
    }
    let det = work[(n - 1, n - 1)].clone();
    Ok(if negated { -det } else { det })
}

pub fn rank(m: &IntMatrix) -> usize {
    let mut work = m.clone();
    bareiss_echelon(&mut work).0
}
