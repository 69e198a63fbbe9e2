//! Dual-quaternion SVD.
//!
//! Starting from the quaternion SVD `A_s = U_s Σ_s V_s^H`, write
//! `U_i = U_s P_U`, `V_i = V_s P_V` with `P_U`, `P_V` anti-Hermitian. The
//! dual part of `A = U Σ V^H` projected onto the standard bases is
//!
//! ```text
//! C = U_s^H A_i V_s = P_U Σ_s + Σ_i - Σ_s P_V
//! ```
//!
//! Off-diagonal entries give a 2x2 linear system per index pair; diagonal
//! entries give `Σ_i` (real part) and the difference of the two gauges
//! (imaginary part), of which `P_V`'s is pinned to zero.
//!
//! When `A_s` has rank `r` below full, the trailing block
//! `G = U_s2^H A_i V_s2` is diagonalized by a second quaternion SVD,
//! `W1^H G W2 = D`. The trailing columns of `U_s`, `V_s` are rotated by
//! `W1`, `W2` and the trailing dual singular values become `D_kk ε`.
//! `W1` and `W2` are needed again at verification time.

use std::cmp::Ordering;

use crate::dual::{dual_cmp, DualNumber, DualQuaternionMatrix};
use crate::error::AlgebraError;
use crate::quat::{qsvd, Quaternion, QuaternionMatrix};

pub const DEFAULT_TOL_RANK: f64 = 1e-10;
pub const DEFAULT_TOL_GAP: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq)]
pub struct DqsvdFactors {
    pub u: DualQuaternionMatrix,
    /// Dual singular values, nonincreasing under [`dual_cmp`].
    pub sigma: Vec<DualNumber>,
    pub v: DualQuaternionMatrix,
    /// Rotation of the trailing left singular vectors, `(m-r) x (m-r)`.
    pub w1: QuaternionMatrix,
    /// Rotation of the trailing right singular vectors, `(n-r) x (n-r)`.
    pub w2: QuaternionMatrix,
    /// Number of appreciable singular values.
    pub rank: usize,
    /// `U_s^H U_i`.
    pub p_u: QuaternionMatrix,
    /// `V_s^H V_i`.
    pub p_v: QuaternionMatrix,
}

impl DqsvdFactors {
    pub fn sigma_standard(&self) -> Vec<f64> {
        self.sigma.iter().map(|d| d.s).collect()
    }

    pub fn sigma_dual(&self) -> Vec<f64> {
        self.sigma.iter().map(|d| d.i).collect()
    }

    /// `U Σ V^H` in dual arithmetic.
    pub fn reconstruct(&self) -> DualQuaternionMatrix {
        let (m, n) = (self.u.shape().0, self.v.shape().0);
        let mut s = QuaternionMatrix::zeros(m, n);
        let mut i = QuaternionMatrix::zeros(m, n);
        for (k, d) in self.sigma.iter().enumerate() {
            s[(k, k)] = Quaternion::real(d.s);
            i[(k, k)] = Quaternion::real(d.i);
        }
        let sig = DualQuaternionMatrix::new(s, i).expect("same shape");
        self.u
            .try_mul(&sig)
            .and_then(|us| us.try_mul(&self.v.conj_transpose()))
            .expect("conforming factors")
    }
}

/// Standard parts `U_s`, `Σ_s`, `V_s` as produced for a given rank split.
#[derive(Clone, Debug, PartialEq)]
pub struct SvdStandard {
    pub u: QuaternionMatrix,
    /// Length `min(m, n)`; entries past the rank are zero.
    pub sigma: Vec<f64>,
    pub v: QuaternionMatrix,
}

fn rotate_trailing(m: &QuaternionMatrix, r: usize, w: &QuaternionMatrix) -> Result<QuaternionMatrix, AlgebraError> {
    let rows = m.rows();
    let tail = m.submatrix(0, r, rows, m.cols() - r).try_mul(w)?;
    let mut out = m.clone();
    out.set_submatrix(0, r, &tail);
    Ok(out)
}

/// Recomputes the standard-part SVD of `a_s` and applies the trailing-block
/// keys. The rank is implied by the key sizes. Used by verification.
pub fn svd_standard_with_keys(
    a_s: &QuaternionMatrix,
    w1: &QuaternionMatrix,
    w2: &QuaternionMatrix,
) -> Result<SvdStandard, AlgebraError> {
    let (m, n) = a_s.shape();
    if !w1.is_square() || !w2.is_square() || w1.rows() > m || w2.rows() > n || m - w1.rows() != n - w2.rows() {
        return Err(AlgebraError::DimensionMismatch {
            op: "svd keys",
            left: w1.shape(),
            right: w2.shape(),
        });
    }
    let r = m - w1.rows();
    let f = qsvd(a_s)?;
    let mut sigma = f.sigma;
    for s in sigma.iter_mut().skip(r) {
        *s = 0.0;
    }
    Ok(SvdStandard {
        u: rotate_trailing(&f.u, r, w1)?,
        sigma,
        v: rotate_trailing(&f.v, r, w2)?,
    })
}

pub fn dqsvd(a: &DualQuaternionMatrix) -> Result<DqsvdFactors, AlgebraError> {
    dqsvd_with_tol(a, DEFAULT_TOL_RANK, DEFAULT_TOL_GAP)
}

/// DQSVD with relative rank threshold `tol_rank` and relative gap threshold
/// `tol_gap` (both scaled by the largest singular value).
pub fn dqsvd_with_tol(
    a: &DualQuaternionMatrix,
    tol_rank: f64,
    tol_gap: f64,
) -> Result<DqsvdFactors, AlgebraError> {
    let (m, n) = a.shape();
    let p = m.min(n);
    let base = qsvd(a.standard())?;
    let s_max = base.sigma.first().copied().unwrap_or(0.0);
    let rank = base.sigma.iter().filter(|s| **s > tol_rank * s_max).count();

    for k in 0..rank {
        for l in k + 1..rank {
            if (base.sigma[k] - base.sigma[l]).abs() <= tol_gap * s_max {
                return Err(AlgebraError::DegenerateSpectrum(k, l));
            }
        }
    }

    // Trailing block.
    let (w1, w2, d) = if rank < m || rank < n {
        let u2 = base.u.submatrix(0, rank, m, m - rank);
        let v2 = base.v.submatrix(0, rank, n, n - rank);
        let g = u2.conj_transpose().try_mul(a.dual())?.try_mul(&v2)?;
        let gs = qsvd(&g)?;
        (gs.u, gs.v, gs.sigma)
    } else {
        (QuaternionMatrix::identity(0), QuaternionMatrix::identity(0), Vec::new())
    };
    let u_s = rotate_trailing(&base.u, rank, &w1)?;
    let v_s = rotate_trailing(&base.v, rank, &w2)?;
    let mut sigma_s = base.sigma;
    for s in sigma_s.iter_mut().skip(rank) {
        *s = 0.0;
    }

    let c = u_s.conj_transpose().try_mul(a.dual())?.try_mul(&v_s)?;
    let mut p_u = QuaternionMatrix::zeros(m, m);
    let mut p_v = QuaternionMatrix::zeros(n, n);
    let mut sigma_i = vec![0.0; p];

    for k in 0..rank {
        let sk = sigma_s[k];
        let ckk = c[(k, k)];
        sigma_i[k] = ckk.w;
        p_u[(k, k)] = ckk.imag() / sk;
        for l in 0..k {
            let sl = sigma_s[l];
            let den = sl * sl - sk * sk;
            p_u[(k, l)] = (c[(k, l)] * sl + c[(l, k)].conj() * sk) / den;
            p_v[(k, l)] = (c[(k, l)] * sk + c[(l, k)].conj() * sl) / den;
        }
    }
    // Appreciable rows against the null directions.
    for k in 0..rank {
        let sk = sigma_s[k];
        for l in rank..m {
            p_u[(l, k)] = c[(l, k)] / sk;
        }
        for l in rank..n {
            p_v[(l, k)] = c[(k, l)].conj() / sk;
        }
    }
    for (k, dk) in d.iter().enumerate() {
        sigma_i[rank + k] = *dk;
    }
    make_anti_hermitian(&mut p_u);
    make_anti_hermitian(&mut p_v);

    let u_i = u_s.try_mul(&p_u)?;
    let v_i = v_s.try_mul(&p_v)?;
    let sigma: Vec<DualNumber> = sigma_s
        .iter()
        .zip(&sigma_i)
        .map(|(s, i)| DualNumber::new(*s, *i))
        .collect();
    debug_assert!(sigma
        .windows(2)
        .all(|w| dual_cmp(w[0], w[1]) != Ordering::Less));

    Ok(DqsvdFactors {
        u: DualQuaternionMatrix::new(u_s, u_i)?,
        sigma,
        v: DualQuaternionMatrix::new(v_s, v_i)?,
        w1,
        w2,
        rank,
        p_u,
        p_v,
    })
}

/// Fills the strict upper triangle from the strict lower one.
fn make_anti_hermitian(p: &mut QuaternionMatrix) {
    let n = p.rows();
    for r in 0..n {
        for c in r + 1..n {
            p[(r, c)] = -p[(c, r)].conj();
        }
    }
}

/// `U_s Σ_s V_i^H + U_s Σ_i V_s^H + U_i Σ_s V_s^H`.
pub fn svd_dual_part(
    u_s: &QuaternionMatrix,
    sigma_s: &[f64],
    v_s: &QuaternionMatrix,
    u_i: &QuaternionMatrix,
    sigma_i: &[f64],
    v_i: &QuaternionMatrix,
) -> Result<QuaternionMatrix, AlgebraError> {
    let (m, n) = (u_s.rows(), v_s.rows());
    if sigma_s.len() != sigma_i.len() || sigma_s.len() > m.min(n) {
        return Err(AlgebraError::DimensionMismatch {
            op: "svd_dual_part",
            left: (sigma_s.len(), 1),
            right: (sigma_i.len(), 1),
        });
    }
    // U_s Σ_s and U_s Σ_i, U_i Σ_s as column scalings.
    let scale_cols = |x: &QuaternionMatrix, s: &[f64]| {
        QuaternionMatrix::from_fn(x.rows(), n, |r, c| {
            if c < s.len() {
                x[(r, c)] * s[c]
            } else {
                Quaternion::ZERO
            }
        })
    };
    let us_ss = scale_cols(u_s, sigma_s);
    let us_si = scale_cols(u_s, sigma_i);
    let ui_ss = scale_cols(u_i, sigma_s);
    let vsh = v_s.conj_transpose();
    let vih = v_i.conj_transpose();
    us_ss
        .try_mul(&vih)?
        .try_add(&us_si.try_mul(&vsh)?)?
        .try_add(&ui_ss.try_mul(&vsh)?)
}
