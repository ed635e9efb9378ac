use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::{IntMatrix, LinalgError};

/// Row-style Hermite normal form `H = U·M` with `U` unimodular.
#[derive(Debug, Clone)]
pub struct HnfResult {
    pub h: IntMatrix,
    pub u: IntMatrix,
    /// Pivot column of each nonzero row of `h`, strictly increasing.
    pub pivots: Vec<usize>,
}

impl HnfResult {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

/// Computes the row Hermite normal form: nonzero rows first, positive pivots,
/// entries above each pivot reduced into `[0, pivot)`.
pub fn hermite_normal_form(m: &IntMatrix) -> HnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let mut found = false;
        loop {
            let best = (r..rows)
                .filter(|&i| !h[(i, c)].is_zero())
                .min_by(|&a, &b| h[(a, c)].abs().cmp(&h[(b, c)].abs()).then(a.cmp(&b)));
            let Some(p) = best else { break };
            found = true;
            h.swap_rows(p, r);
            u.swap_rows(p, r);
            let mut done = true;
            for i in r + 1..rows {
                if h[(i, c)].is_zero() {
                    continue;
                }
                let q = -h[(i, c)].div_floor(&h[(r, c)]);
                h.add_row_multiple(i, r, &q);
                u.add_row_multiple(i, r, &q);
                if !h[(i, c)].is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if !found {
            continue;
        }
        if h[(r, c)].is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        for i in 0..r {
            let q = -h[(i, c)].div_floor(&h[(r, c)]);
            h.add_row_multiple(i, r, &q);
            u.add_row_multiple(i, r, &q);
        }
        pivots.push(c);
        r += 1;
    }
    HnfResult { h, u, pivots }
}

/// Smith normal form `U·A·V = diag(d_1, …, d_r, 0, …)` with `d_1 | d_2 | … | d_r`.
#[derive(Debug, Clone)]
pub struct SnfResult {
    /// The positive invariant factors `d_1..d_r`.
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The full diagonal matrix with the shape of the input.
    pub fn diagonal_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zeros(self.u.rows(), self.v.cols());
        for (i, di) in self.diagonal.iter().enumerate() {
            d[(i, i)] = di.clone();
        }
        d
    }
}

/// Smith normal form with unimodular transforms.
///
/// Pivot choice: the smallest absolute nonzero entry of the remaining
/// submatrix, ties broken by lowest (row, col).
pub fn smith_normal_form(m: &IntMatrix) -> SnfResult {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let mut diagonal = Vec::new();

    for t in 0..rows.min(cols) {
        loop {
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[(i, j)].is_zero() {
                        continue;
                    }
                    let better = match pivot {
                        None => true,
                        Some(p) => a[(i, j)].abs() < a[p].abs(),
                    };
                    if better {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return SnfResult { diagonal, u, v };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut residue = false;
            for i in t + 1..rows {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let q = -a[(i, t)].div_floor(&a[(t, t)]);
                a.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                residue |= !a[(i, t)].is_zero();
            }
            for j in t + 1..cols {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let q = -a[(t, j)].div_floor(&a[(t, t)]);
                a.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                residue |= !a[(t, j)].is_zero();
            }
            if residue {
                continue;
            }
            let offender = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !a[(i, j)].is_multiple_of(&a[(t, t)]))
            });
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    a.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        diagonal.push(a[(t, t)].clone());
    }
    SnfResult { diagonal, u, v }
}

/// Basis of the integer kernel `{x ∈ Z^cols : m·x = 0}`, in Hermite normal form.
///
/// The returned lattice is saturated: it is the full set of integer kernel
/// vectors, not merely a finite-index sublattice.
pub fn integer_kernel(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    let n = m.cols();
    let hnf = hermite_normal_form(&m.transpose());
    let r = hnf.rank();
    if r == n {
        return Vec::new();
    }
    let basis: Vec<Vec<BigInt>> = (r..n).map(|i| hnf.u.row(i).to_vec()).collect();
    let basis = IntMatrix::from_rows(&basis).expect("rows have equal length");
    let canon = hermite_normal_form(&basis);
    (0..canon.rank()).map(|i| canon.h.row(i).to_vec()).collect()
}

/// Some integer solution of `m·x = rhs`, or `None` when no integer solution exists.
pub fn integer_solution(m: &IntMatrix, rhs: &[BigInt]) -> Result<Option<Vec<BigInt>>, LinalgError> {
    if rhs.len() != m.rows() {
        return Err(LinalgError::DimensionMismatch {
            expected: m.rows(),
            found: rhs.len(),
        });
    }
    // U·mᵀ = H, so m = Hᵀ·U⁻ᵀ; substitute x = Uᵀ·z and solve Hᵀ·z = rhs.
    let hnf = hermite_normal_form(&m.transpose());
    let h = &hnf.h;
    let mut z: Vec<BigInt> = vec![BigInt::zero(); m.cols()];
    for (k, &p) in hnf.pivots.iter().enumerate() {
        let mut acc = rhs[p].clone();
        for (l, zl) in z.iter().enumerate().take(k) {
            acc -= &h[(l, p)] * zl;
        }
        let (q, r) = acc.div_rem(&h[(k, p)]);
        if !r.is_zero() {
            return Ok(None);
        }
        z[k] = q;
    }
    for (i, target) in rhs.iter().enumerate() {
        let lhs: BigInt = (0..hnf.rank()).map(|k| &h[(k, i)] * &z[k]).sum();
        if &lhs != target {
            return Ok(None);
        }
    }
    let x = (0..m.cols())
        .map(|j| (0..m.cols()).map(|k| &hnf.u[(k, j)] * &z[k]).sum())
        .collect();
    Ok(Some(x))
}
