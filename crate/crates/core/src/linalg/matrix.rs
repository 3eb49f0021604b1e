use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::LinalgError;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; every row must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch("ragged rows".into()));
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect();
        Ok(Self { rows: rows.len(), cols, data })
    }

    pub fn from_diagonal(diag: &[BigInt]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (i, d) in diag.iter().enumerate() {
            m[(i, i)] = d.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn mul_vec(&self, v: &[BigInt]) -> Result<Vec<BigInt>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} matrix times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect())
    }

    pub fn checked_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += factor * row[src]
    pub(crate) fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = &self.data[src * self.cols + j] * factor;
            self.data[dst * self.cols + j] += v;
        }
    }

    /// col[dst] += factor * col[src]
    pub(crate) fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = &self.data[i * self.cols + src] * factor;
            self.data[i * self.cols + dst] += v;
        }
    }

    pub(crate) fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -std::mem::take(&mut self.data[i * self.cols + j]);
            self.data[i * self.cols + j] = v;
        }
    }

    /// Removes the listed rows and the same-numbered columns.
    pub fn remove_indices(&self, drop: &[usize]) -> IntMatrix {
        let keep_r: Vec<usize> = (0..self.rows).filter(|i| !drop.contains(i)).collect();
        let keep_c: Vec<usize> = (0..self.cols).filter(|j| !drop.contains(j)).collect();
        let mut out = IntMatrix::zeros(keep_r.len(), keep_c.len());
        for (a, &i) in keep_r.iter().enumerate() {
            for (b, &j) in keep_c.iter().enumerate() {
                out[(a, b)] = self[(i, j)].clone();
            }
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, other: &IntMatrix) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self[(i, j)].clone();
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out[(self.rows + i, self.cols + j)] = other[(i, j)].clone();
            }
        }
        out
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.checked_mul(rhs).expect("matrix dimensions do not agree")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Square integer matrix with `M[i][j] == M[j][i]`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct IntSymMatrix(IntMatrix);

impl IntSymMatrix {
    pub fn new(m: IntMatrix) -> Result<Self, LinalgError> {
        if m.is_symmetric() {
            Ok(Self(m))
        } else {
            Err(LinalgError::NotSymmetric)
        }
    }

    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self, LinalgError> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    pub fn empty() -> Self {
        Self(IntMatrix::zeros(0, 0))
    }

    pub fn dim(&self) -> usize {
        self.0.rows()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.0[(i, j)]
    }

    /// Sets both `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.0[(j, i)] = v.clone();
        self.0[(i, j)] = v;
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.dim()).map(|i| self.0[(i, i)].clone()).collect()
    }

    pub fn as_matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    /// Grows the matrix by one row and column filled with zeros.
    pub fn extend_one(&mut self) {
        let n = self.dim();
        let mut m = IntMatrix::zeros(n + 1, n + 1);
        for i in 0..n {
            for j in 0..n {
                m[(i, j)] = self.0[(i, j)].clone();
            }
        }
        self.0 = m;
    }

    pub fn remove_indices(&self, drop: &[usize]) -> IntSymMatrix {
        IntSymMatrix(self.0.remove_indices(drop))
    }

    pub fn direct_sum(&self, other: &IntSymMatrix) -> IntSymMatrix {
        IntSymMatrix(self.0.direct_sum(&other.0))
    }

    /// `P M Pᵀ`, which is symmetric again.
    pub fn congruent(&self, p: &IntMatrix) -> Result<IntSymMatrix, LinalgError> {
        let pm = p.checked_mul(&self.0)?;
        Ok(IntSymMatrix(pm.checked_mul(&p.transpose())?))
    }
}

impl fmt::Display for IntSymMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
