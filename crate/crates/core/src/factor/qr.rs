//! Dual-quaternion QR.
//!
//! With `A_s = Q_s R_s` fixed, write `Q_i = Q_s P`. Unitarity of `Q` forces
//! `P + P^H = 0`, and `R_i = B - P R_s` with `B = Q_s^H A_i`. Requiring `R_i`
//! to be upper triangular with a real diagonal determines the lower triangle
//! of `P` column by column; the upper triangle follows from anti-Hermitian
//! symmetry.

use crate::dual::DualQuaternionMatrix;
use crate::error::AlgebraError;
use crate::quat::{qqr, Quaternion, QuaternionMatrix};

#[derive(Clone, Debug, PartialEq)]
pub struct DqqrFactors {
    pub q: DualQuaternionMatrix,
    pub r: DualQuaternionMatrix,
    /// `Q_s^H Q_i`, anti-Hermitian.
    pub p: QuaternionMatrix,
    /// `Q_s^H A_i`.
    pub b: QuaternionMatrix,
}

impl DqqrFactors {
    pub fn reconstruct(&self) -> DualQuaternionMatrix {
        self.q.try_mul(&self.r).expect("conforming factors")
    }
}

pub const DEFAULT_RANK_TOL: f64 = 1e-12;

/// DQQR with rank threshold `1e-12 * ||A_s||_F` on `diag(R_s)`.
pub fn dqqr(a: &DualQuaternionMatrix) -> Result<DqqrFactors, AlgebraError> {
    dqqr_with_tol(a, DEFAULT_RANK_TOL * a.standard().frobenius_norm())
}

pub fn dqqr_with_tol(a: &DualQuaternionMatrix, tol: f64) -> Result<DqqrFactors, AlgebraError> {
    let (m, n) = a.shape();
    if m != n {
        return Err(AlgebraError::DimensionMismatch {
            op: "dqqr",
            left: a.shape(),
            right: a.shape(),
        });
    }
    let std = qqr(a.standard())?;
    let (q_s, r_s) = (std.q, std.r);
    for k in 0..n {
        if r_s[(k, k)].w.is_nan() || r_s[(k, k)].w <= tol {
            return Err(AlgebraError::RankDeficient(k));
        }
    }
    let b = q_s.conj_transpose().try_mul(a.dual())?;

    let mut p = QuaternionMatrix::zeros(m, m);
    for k in 0..n {
        let rkk = r_s[(k, k)].w;
        for row in k..m {
            let mut rhs = b[(row, k)];
            for t in 0..k {
                rhs -= p[(row, t)] * r_s[(t, k)];
            }
            p[(row, k)] = if row == k {
                // Real part goes to r_i,kk; P's diagonal is pure imaginary.
                rhs.imag() / rkk
            } else {
                rhs / rkk
            };
        }
    }
    for r in 0..m {
        for c in r + 1..m {
            p[(r, c)] = -p[(c, r)].conj();
        }
    }

    let mut r_i = b.try_sub(&p.try_mul(&r_s)?)?;
    for k in 0..n {
        r_i[(k, k)] = Quaternion::real(r_i[(k, k)].w);
        for row in k + 1..m {
            r_i[(row, k)] = Quaternion::ZERO;
        }
    }
    let q_i = q_s.try_mul(&p)?;
    Ok(DqqrFactors {
        q: DualQuaternionMatrix::new(q_s, q_i)?,
        r: DualQuaternionMatrix::new(r_s, r_i)?,
        p,
        b,
    })
}

/// `Q_s R_i + Q_i R_s`.
pub fn qr_dual_part(
    q_s: &QuaternionMatrix,
    r_s: &QuaternionMatrix,
    q_i: &QuaternionMatrix,
    r_i: &QuaternionMatrix,
) -> Result<QuaternionMatrix, AlgebraError> {
    q_s.try_mul(r_i)?.try_add(&q_i.try_mul(r_s)?)
}
