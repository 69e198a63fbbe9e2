//! Dense row-major quaternion matrices.

use std::ops::{Index, IndexMut};

use super::quaternion::Quaternion;
use crate::error::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub struct QuaternionMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QuaternionMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Quaternion::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m[(k, k)] = Quaternion::ONE;
        }
        m
    }

    /// Builds a matrix from row-major entries.
    ///
    /// Panics if `data.len() != rows * cols`.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Quaternion>) -> Self {
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        Self { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_diagonal(diag: &[Quaternion]) -> Self {
        let mut m = Self::zeros(diag.len(), diag.len());
        for (k, d) in diag.iter().enumerate() {
            m[(k, k)] = *d;
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[Quaternion] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [Quaternion] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<Quaternion> {
        self.data
    }

    pub fn column(&self, c: usize) -> Vec<Quaternion> {
        (0..self.rows).map(|r| self[(r, c)]).collect()
    }

    pub fn set_column(&mut self, c: usize, v: &[Quaternion]) {
        for (r, q) in v.iter().enumerate() {
            self[(r, c)] = *q;
        }
    }

    /// Conjugate transpose `A^H`.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)].conj())
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self[(c, r)])
    }

    /// Entrywise quaternion conjugate.
    pub fn conj(&self) -> Self {
        self.map(Quaternion::conj)
    }

    pub fn map(&self, f: impl Fn(Quaternion) -> Quaternion) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|q| f(*q)).collect(),
        }
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|q| q * s)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|q| q.abs()).fold(0.0, f64::max)
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same_shape(other, "add")?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_same_shape(other, "sub")?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(Quaternion, Quaternion) -> Quaternion) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        }
    }

    fn check_same_shape(&self, other: &Self, op: &'static str) -> Result<(), AlgebraError> {
        if self.shape() != other.shape() {
            return Err(AlgebraError::DimensionMismatch {
                op,
                left: self.shape(),
                right: other.shape(),
            });
        }
        Ok(())
    }

    /// Matrix product with left-to-right factor order preserved.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.cols != other.rows {
            return Err(AlgebraError::DimensionMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            let row = &self.data[r * self.cols..(r + 1) * self.cols];
            let dst = &mut out.data[r * other.cols..(r + 1) * other.cols];
            for (t, a) in row.iter().enumerate() {
                if *a == Quaternion::ZERO {
                    continue;
                }
                let src = &other.data[t * other.cols..(t + 1) * other.cols];
                for (d, b) in dst.iter_mut().zip(src) {
                    *d += *a * *b;
                }
            }
        }
        Ok(out)
    }

    /// Copies the block `rows x cols` starting at `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |r, c| self[(r0 + r, c0 + c)])
    }

    pub fn set_submatrix(&mut self, r0: usize, c0: usize, block: &Self) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self[(r0 + r, c0 + c)] = block[(r, c)];
            }
        }
    }

    /// Entries strictly below the diagonal, zero elsewhere.
    pub fn strictly_lower(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| {
            if r > c {
                self[(r, c)]
            } else {
                Quaternion::ZERO
            }
        })
    }

    /// Diagonal and entries above it, zero elsewhere.
    pub fn upper(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| {
            if r <= c {
                self[(r, c)]
            } else {
                Quaternion::ZERO
            }
        })
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|q| q.is_finite())
    }
}

impl Index<(usize, usize)> for QuaternionMatrix {
    type Output = Quaternion;
    #[inline]
    fn index(&self, (r, c): (usize, usize)) -> &Quaternion {
        debug_assert!(r < self.rows && c < self.cols);
        &self.data[r * self.cols + c]
    }
}

impl IndexMut<(usize, usize)> for QuaternionMatrix {
    #[inline]
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Quaternion {
        debug_assert!(r < self.rows && c < self.cols);
        &mut self.data[r * self.cols + c]
    }
}

/// `A * B` for quaternion matrices.
pub fn qmat_mul(a: &QuaternionMatrix, b: &QuaternionMatrix) -> Result<QuaternionMatrix, AlgebraError> {
    a.try_mul(b)
}

/// Quaternion inner product `x^H y`.
pub fn inner(x: &[Quaternion], y: &[Quaternion]) -> Quaternion {
    x.iter().zip(y).fold(Quaternion::ZERO, |acc, (a, b)| acc + a.conj() * *b)
}

pub fn vec_norm(x: &[Quaternion]) -> f64 {
    x.iter().map(|q| q.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::adjoint::complex_adjoint;
    use crate::synth::random_qmatrix;

    #[test]
    fn identity_is_neutral() {
        let a = random_qmatrix(3, 4, 7);
        assert_eq!(qmat_mul(&QuaternionMatrix::identity(3), &a).unwrap(), a);
        assert_eq!(qmat_mul(&a, &QuaternionMatrix::identity(4)).unwrap(), a);
    }

    #[test]
    fn scalar_product_keeps_order() {
        let i = QuaternionMatrix::from_vec(1, 1, vec![Quaternion::I]);
        let j = QuaternionMatrix::from_vec(1, 1, vec![Quaternion::J]);
        assert_eq!(qmat_mul(&i, &j).unwrap()[(0, 0)], Quaternion::K);
        assert_eq!(qmat_mul(&j, &i).unwrap()[(0, 0)], -Quaternion::K);
    }

    #[test]
    fn product_agrees_with_complex_adjoint() {
        let a = random_qmatrix(2, 2, 11);
        let b = random_qmatrix(2, 2, 12);
        let lhs = complex_adjoint(&qmat_mul(&a, &b).unwrap());
        let rhs = complex_adjoint(&a) * complex_adjoint(&b);
        assert!((lhs - rhs).norm() < 1e-12);
    }

    #[test]
    fn mismatched_shapes_are_rejected() {
        let a = QuaternionMatrix::zeros(2, 3);
        let b = QuaternionMatrix::zeros(2, 3);
        assert!(matches!(
            qmat_mul(&a, &b),
            Err(AlgebraError::DimensionMismatch { op: "mul", .. })
        ));
        assert!(a.try_add(&QuaternionMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn conj_transpose_involution_and_frobenius() {
        let a = random_qmatrix(3, 5, 3);
        assert_eq!(a.conj_transpose().conj_transpose(), a);
        let sum: f64 = a
            .as_slice()
            .iter()
            .flat_map(|q| q.components())
            .map(|v| v * v)
            .sum();
        assert!((a.frobenius_norm().powi(2) - sum).abs() < 1e-12);
    }
}
