//! Dual-quaternion LU.
//!
//! The standard part is an ordinary quaternion LU. The dual part must solve
//! `A_i = L_s U_i + L_i U_s` with `L_i` strictly lower and `U_i` upper
//! triangular. Left-multiplying by `L_s⁻¹` and right-multiplying by `U_s⁻¹`
//! gives `M = L_s⁻¹ A_i U_s⁻¹ = U_i U_s⁻¹ + L_s⁻¹ L_i`, where the first term is
//! upper triangular and the second strictly lower, so both unknowns fall out
//! of a triangular split of `M`.

use crate::dual::DualQuaternionMatrix;
use crate::error::AlgebraError;
use crate::quat::{qlu_with_tol, QuaternionMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct DqluFactors {
    pub l: DualQuaternionMatrix,
    pub u: DualQuaternionMatrix,
}

impl DqluFactors {
    pub fn reconstruct(&self) -> DualQuaternionMatrix {
        self.l.try_mul(&self.u).expect("square factors")
    }
}

/// Solves `L X = B` for unit lower triangular `L`.
pub(crate) fn solve_unit_lower(l: &QuaternionMatrix, b: &QuaternionMatrix) -> QuaternionMatrix {
    let n = l.rows();
    let mut x = b.clone();
    for r in 0..n {
        for t in 0..r {
            let lrt = l[(r, t)];
            for c in 0..x.cols() {
                let v = lrt * x[(t, c)];
                x[(r, c)] -= v;
            }
        }
    }
    x
}

/// Solves `Y U = B` for upper triangular `U` with invertible diagonal.
pub(crate) fn solve_upper_right(
    b: &QuaternionMatrix,
    u: &QuaternionMatrix,
) -> Result<QuaternionMatrix, AlgebraError> {
    let n = u.rows();
    let mut y = b.clone();
    for c in 0..n {
        let inv = u[(c, c)].inv()?;
        for r in 0..y.rows() {
            let mut s = y[(r, c)];
            for t in 0..c {
                s -= y[(r, t)] * u[(t, c)];
            }
            y[(r, c)] = s * inv;
        }
    }
    Ok(y)
}

/// DQLU with the default pivot threshold `1e-12 * ||A_s||_F`.
pub fn dqlu(a: &DualQuaternionMatrix) -> Result<DqluFactors, AlgebraError> {
    dqlu_with_tol(a, crate::quat::decomp::DEFAULT_PIVOT_TOL * a.standard().frobenius_norm())
}

pub fn dqlu_with_tol(a: &DualQuaternionMatrix, tol: f64) -> Result<DqluFactors, AlgebraError> {
    let std = qlu_with_tol(a.standard(), tol)?;
    let x = solve_unit_lower(&std.l, a.dual());
    let m = solve_upper_right(&x, &std.u)?;
    let l_i = std.l.try_mul(&m.strictly_lower())?;
    let u_i = m.upper().try_mul(&std.u)?;
    Ok(DqluFactors {
        l: DualQuaternionMatrix::new(std.l, l_i)?,
        u: DualQuaternionMatrix::new(std.u, u_i)?,
    })
}

/// `L_s U_i + L_i U_s`.
pub fn lu_dual_part(
    l_s: &QuaternionMatrix,
    u_s: &QuaternionMatrix,
    l_i: &QuaternionMatrix,
    u_i: &QuaternionMatrix,
) -> Result<QuaternionMatrix, AlgebraError> {
    l_s.try_mul(u_i)?.try_add(&l_i.try_mul(u_s)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quat::Quaternion;
    use crate::synth::{dominant_dq_matrix, random_qmatrix};

    #[test]
    fn identity_standard_part_splits_dual_part() {
        let ai = random_qmatrix(4, 4, 3);
        let a = DualQuaternionMatrix::new(QuaternionMatrix::identity(4), ai.clone()).unwrap();
        let f = dqlu(&a).unwrap();
        assert_eq!(f.l.dual(), &ai.strictly_lower());
        assert_eq!(f.u.dual(), &ai.upper());
    }

    #[test]
    fn scalar_case() {
        let (s, i) = (Quaternion::new(2.0, 1.0, 0.0, -1.0), Quaternion::new(0.5, 0.0, 3.0, 1.0));
        let a = DualQuaternionMatrix::new(
            QuaternionMatrix::from_vec(1, 1, vec![s]),
            QuaternionMatrix::from_vec(1, 1, vec![i]),
        )
        .unwrap();
        let f = dqlu(&a).unwrap();
        assert_eq!(f.l, DualQuaternionMatrix::identity(1));
        assert_eq!(f.u.standard()[(0, 0)], s);
        assert!((f.u.dual()[(0, 0)] - i).abs() < 1e-15);
    }

    #[test]
    fn random_structure_and_residual() {
        let a = dominant_dq_matrix(16, 8);
        let f = dqlu(&a).unwrap();
        let n = 16;
        for r in 0..n {
            assert_eq!(f.l.dual()[(r, r)], Quaternion::ZERO);
            for c in r + 1..n {
                assert_eq!(f.l.dual()[(r, c)], Quaternion::ZERO);
                assert_eq!(f.u.dual()[(c, r)], Quaternion::ZERO);
            }
        }
        let res = a.try_sub(&f.reconstruct()).unwrap().fr_norm() / a.fr_norm();
        assert!(res <= 1e-9, "residual {res}");
    }

    #[test]
    fn singular_leading_minor_is_reported() {
        let mut s = random_qmatrix(3, 3, 1);
        s[(0, 0)] = Quaternion::ZERO;
        let a = DualQuaternionMatrix::from_standard(s);
        assert_eq!(dqlu(&a), Err(AlgebraError::SingularMinor(1)));
    }
}
