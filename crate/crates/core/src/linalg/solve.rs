use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{determinant, IntMatrix, LinalgError, Rational};

/// Gauss-Jordan elimination over the rationals, in place. Returns the pivot
/// columns; the matrix ends in reduced row echelon form.
fn rref(m: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(p, r);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let f = m[i][c].clone();
            for j in 0..m[i].len() {
                let delta = &f * &m[r][j];
                m[i][j] -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn to_rational_rows(m: &IntMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect()
}

/// Solves `m·x = rhs` exactly.
///
/// * `Ok(Some(x))`: a solution (the unique one when `m` has full column rank,
///   otherwise the one with all free variables set to zero).
/// * `Ok(None)`: the system is inconsistent.
/// * `Err(Singular)`: `m` is square but singular.
pub fn solve_rational(m: &IntMatrix, rhs: &[Rational]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if rhs.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows(),
            found: rhs.len(),
        });
    }
    let cols = m.cols();
    let mut aug = to_rational_rows(m);
    for (row, b) in aug.iter_mut().zip(rhs) {
        row.push(b.clone());
    }
    let pivots = rref(&mut aug, cols + 1);
    if m.is_square() && pivots.iter().filter(|&&p| p < cols).count() < cols {
        return Err(LinalgError::Singular);
    }
    if pivots.last() == Some(&cols) {
        return Ok(None);
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &p) in pivots.iter().enumerate() {
        x[p] = aug[r][cols].clone();
    }
    Ok(Some(x))
}

/// Exact inverse of a nonsingular square matrix.
pub fn rational_inverse(m: &IntMatrix) -> Result<Vec<Vec<Rational>>, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    let mut aug = to_rational_rows(m);
    for (i, row) in aug.iter_mut().enumerate() {
        row.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
    }
    let pivots = rref(&mut aug, n);
    if pivots.len() < n {
        return Err(LinalgError::Singular);
    }
    Ok(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

/// The adjugate `adj(m) = det(m)·m⁻¹`, an integer matrix.
pub fn adjugate(m: &IntMatrix) -> Result<IntMatrix, LinalgError> {
    let det = determinant(m)?;
    let n = m.rows();
    if det.is_zero() {
        // Rank-deficient adjugates are never needed here.
        return Err(LinalgError::Singular);
    }
    let inv = rational_inverse(m)?;
    let detq = Rational::from_integer(det);
    let mut adj = IntMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let v = &inv[i][j] * &detq;
            debug_assert!(v.is_integer());
            adj[(i, j)] = v.to_integer();
        }
    }
    Ok(adj)
}

/// `Some` when every entry is an integer.
pub fn to_integer_vec(v: &[Rational]) -> Option<Vec<BigInt>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}
