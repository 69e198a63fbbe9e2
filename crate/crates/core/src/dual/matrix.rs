//! Dual-quaternion matrices `A_s + A_i ε`.

use super::quaternion::DualQuaternion;
use crate::error::AlgebraError;
use crate::quat::QuaternionMatrix;

#[derive(Clone, Debug, PartialEq)]
pub struct DualQuaternionMatrix {
    s: QuaternionMatrix,
    i: QuaternionMatrix,
}

impl DualQuaternionMatrix {
    pub fn new(s: QuaternionMatrix, i: QuaternionMatrix) -> Result<Self, AlgebraError> {
        if s.shape() != i.shape() {
            return Err(AlgebraError::DimensionMismatch {
                op: "dual matrix parts",
                left: s.shape(),
                right: i.shape(),
            });
        }
        Ok(Self { s, i })
    }

    /// Matrix with zero infinitesimal part.
    pub fn from_standard(s: QuaternionMatrix) -> Self {
        let i = QuaternionMatrix::zeros(s.rows(), s.cols());
        Self { s, i }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_standard(QuaternionMatrix::identity(n))
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::from_standard(QuaternionMatrix::zeros(rows, cols))
    }

    /// Standard part `A_s`.
    pub fn standard(&self) -> &QuaternionMatrix {
        &self.s
    }

    /// Infinitesimal part `A_i`.
    pub fn dual(&self) -> &QuaternionMatrix {
        &self.i
    }

    pub fn into_parts(self) -> (QuaternionMatrix, QuaternionMatrix) {
        (self.s, self.i)
    }

    pub fn shape(&self) -> (usize, usize) {
        self.s.shape()
    }

    pub fn get(&self, r: usize, c: usize) -> DualQuaternion {
        DualQuaternion::new(self.s[(r, c)], self.i[(r, c)])
    }

    pub fn try_add(&self, o: &Self) -> Result<Self, AlgebraError> {
        Ok(Self {
            s: self.s.try_add(&o.s)?,
            i: self.i.try_add(&o.i)?,
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self, AlgebraError> {
        Ok(Self {
            s: self.s.try_sub(&o.s)?,
            i: self.i.try_sub(&o.i)?,
        })
    }

    /// `(AB)_s = A_s B_s`, `(AB)_i = A_s B_i + A_i B_s`.
    pub fn try_mul(&self, o: &Self) -> Result<Self, AlgebraError> {
        let s = self.s.try_mul(&o.s)?;
        let i = self.s.try_mul(&o.i)?.try_add(&self.i.try_mul(&o.s)?)?;
        Ok(Self { s, i })
    }

    pub fn conj_transpose(&self) -> Self {
        Self {
            s: self.s.conj_transpose(),
            i: self.i.conj_transpose(),
        }
    }

    /// `sqrt(||A_s||_F² + ||A_i||_F²)`.
    pub fn fr_norm(&self) -> f64 {
        self.s.frobenius_norm().hypot(self.i.frobenius_norm())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::dq_mul;
    use crate::quat::Quaternion;
    use crate::synth::{dominant_dq_matrix, random_qmatrix};

    #[test]
    fn identity_is_neutral() {
        let a = dominant_dq_matrix(4, 1);
        assert_eq!(a.try_mul(&DualQuaternionMatrix::identity(4)).unwrap(), a);
    }

    #[test]
    fn fr_norm_of_pure_dual_part() {
        let ai = random_qmatrix(3, 3, 2);
        let a = DualQuaternionMatrix::new(QuaternionMatrix::zeros(3, 3), ai.clone()).unwrap();
        assert_eq!(a.fr_norm(), ai.frobenius_norm());
    }

    #[test]
    fn scalar_product_matches_dq_mul() {
        let q = |s, i| {
            DualQuaternionMatrix::new(
                QuaternionMatrix::from_vec(1, 1, vec![s]),
                QuaternionMatrix::from_vec(1, 1, vec![i]),
            )
            .unwrap()
        };
        let (a, b) = (
            (Quaternion::new(1.0, 2.0, -1.0, 0.5), Quaternion::new(0.0, 1.0, 3.0, -2.0)),
            (Quaternion::new(-0.5, 1.0, 1.0, 2.0), Quaternion::new(2.0, 0.0, -1.0, 1.0)),
        );
        let m = q(a.0, a.1).try_mul(&q(b.0, b.1)).unwrap();
        let expected = dq_mul(DualQuaternion::new(a.0, a.1), DualQuaternion::new(b.0, b.1));
        assert_eq!(m.get(0, 0), expected);
    }

    #[test]
    fn shape_checks() {
        assert!(DualQuaternionMatrix::new(QuaternionMatrix::zeros(2, 2), QuaternionMatrix::zeros(2, 3)).is_err());
        let a = DualQuaternionMatrix::zeros(2, 3);
        assert!(a.try_mul(&a).is_err());
        assert!(a.try_add(&DualQuaternionMatrix::zeros(3, 2)).is_err());
    }

    #[test]
    fn conj_transpose_is_partwise() {
        let a = dominant_dq_matrix(3, 9);
        let h = a.conj_transpose();
        assert_eq!(h.standard(), &a.standard().conj_transpose());
        assert_eq!(h.dual(), &a.dual().conj_transpose());
    }
}
