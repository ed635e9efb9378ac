//! Exact integer and rational linear algebra.
//!
//! Everything here works over arbitrary-precision integers ([`BigInt`]) or
//! reduced rationals ([`Rational`]); there is no floating point anywhere.

mod bareiss;
mod matrix;
mod normal_form;
mod solve;

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub use bareiss::{determinant, rank};
pub use matrix::IntMatrix;
pub use normal_form::{
    hermite_normal_form, integer_kernel, integer_solution, smith_normal_form, HnfResult,
    SnfResult,
};
pub use solve::{adjugate, rational_inverse, solve_rational, to_integer_vec};

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("square system is singular")]
    Singular,
}

/// Greatest common divisor of a list of integers (non-negative, 0 for an all-zero list).
pub fn gcd_all<'a, I>(values: I) -> BigInt
where
    I: IntoIterator<Item = &'a BigInt>,
{
    use num_integer::Integer;
    use num_traits::Zero;
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Divides a vector by the gcd of its entries. Zero vectors are returned unchanged.
pub fn make_primitive(v: &mut [BigInt]) {
    use num_traits::{One, Zero};
    let g = gcd_all(v.iter());
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}
