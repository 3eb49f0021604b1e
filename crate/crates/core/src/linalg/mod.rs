//! Exact integer and rational linear algebra for small dense matrices.
//!
//! Everything here works over [`BigInt`] / [`BigRational`]; there is no
//! floating-point path.

mod matrix;
mod snf;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use matrix::{IntMatrix, IntSymMatrix};
pub use snf::{smith_normal_form, SmithNormalForm};

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
}

/// Exact determinant by Bareiss fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::DimensionMismatch(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[(i, j)] * &a[(k, k)] - &a[(i, k)] * &a[(k, j)]) / &prev;
                a[(i, j)] = v;
            }
            a[(i, k)] = BigInt::zero();
        }
        prev = a[(k, k)].clone();
    }
    Ok(if n == 0 { sign } else { sign * &a[(n - 1, n - 1)] })
}

/// Solves `M x = b` over the rationals. `None` when `M` is singular.
pub fn solve_rational(m: &IntMatrix, b: &[BigInt]) -> Result<Option<Vec<Rational>>, LinalgError> {
    if !m.is_square() || m.rows() != b.len() {
        return Err(LinalgError::DimensionMismatch(format!(
            "{}x{} system with right-hand side of length {}",
            m.rows(),
            m.cols(),
            b.len()
        )));
    }
    let n = m.rows();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            m.row(i)
                .iter()
                .cloned()
                .chain(std::iter::once(b[i].clone()))
                .map(Rational::from_integer)
                .collect()
        })
        .collect();

    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(None);
        };
        a.swap(k, p);
        let pivot = a[k][k].clone();
        for x in a[k].iter_mut().skip(k) {
            *x = &*x / &pivot;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = a[i][k].clone();
            for j in k..=n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
        }
    }
    Ok(Some(a.into_iter().map(|row| row[n].clone()).collect()))
}

/// Inertia `(positive, negative, null)` of a symmetric matrix by exact
/// congruence diagonalization.
///
/// Pivot rule: the nonzero diagonal entry of least absolute value (lowest
/// index on ties); when the remaining diagonal is zero, the lowest nonzero
/// off-diagonal `(i, j)` is folded in by adding row/column `j` to `i`.
pub fn inertia(m: &IntSymMatrix) -> (usize, usize, usize) {
    let n = m.dim();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| Rational::from_integer(m.get(i, j).clone())).collect())
        .collect();
    let (mut pos, mut neg) = (0, 0);

    let mut k = 0;
    while k < n {
        let pivot = (k..n)
            .filter(|&i| !a[i][i].is_zero())
            .min_by(|&i, &j| a[i][i].abs().cmp(&a[j][j].abs()).then(i.cmp(&j)));
        let p = match pivot {
            Some(p) => p,
            None => {
                let off = (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !a[i][j].is_zero());
                let Some((i, j)) = off else {
                    break;
                };
                // row_i += row_j, col_i += col_j; new a_ii = 2 a_ij
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[i][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][i] += v;
                }
                i
            }
        };
        a.swap(k, p);
        for row in a.iter_mut() {
            row.swap(k, p);
        }

        let d = a[k][k].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &d;
            for j in k..n {
                let v = &f * &a[k][j];
                a[i][j] -= v;
            }
            for r in k..n {
                let v = &f * &a[r][k];
                a[r][i] -= v;
            }
        }
        k += 1;
    }
    (pos, neg, n - pos - neg)
}

pub fn signature(m: &IntSymMatrix) -> i64 {
    let (p, n, _) = inertia(m);
    p as i64 - n as i64
}

/// Signature of a general integer matrix, rejecting non-symmetric input.
pub fn signature_symmetric(m: &IntMatrix) -> Result<i64, LinalgError> {
    Ok(signature(&IntSymMatrix::new(m.clone())?))
}
