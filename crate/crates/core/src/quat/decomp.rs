//! Deterministic LU, QR and SVD factorizations of quaternion matrices.
//!
//! None of these use pivoting or randomized starts: the fragile watermark
//! relies on identical input bits producing identical factors.

use nalgebra::linalg::SVD;

use super::adjoint::{complex_adjoint, complex_to_vector};
use super::matrix::{inner, vec_norm, QuaternionMatrix};
use super::quaternion::Quaternion;
use crate::error::AlgebraError;

/// Relative pivot threshold used by [`qlu`].
pub const DEFAULT_PIVOT_TOL: f64 = 1e-12;

/// `A = L U` with `L` unit lower triangular and `U` upper triangular.
#[derive(Clone, Debug, PartialEq)]
pub struct QluResult {
    pub l: QuaternionMatrix,
    pub u: QuaternionMatrix,
}

/// `A = Q R` with `Q` unitary and `R` upper triangular with a real,
/// nonnegative diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct QqrResult {
    pub q: QuaternionMatrix,
    pub r: QuaternionMatrix,
}

/// `A = U diag(sigma) V^H`, `sigma` nonincreasing.
#[derive(Clone, Debug, PartialEq)]
pub struct QsvdResult {
    pub u: QuaternionMatrix,
    pub sigma: Vec<f64>,
    pub v: QuaternionMatrix,
}

impl QsvdResult {
    /// `U Σ V^H` with `Σ` padded to the shape of the original matrix.
    pub fn reconstruct(&self) -> QuaternionMatrix {
        let (m, n) = (self.u.rows(), self.v.rows());
        let mut us = self.u.submatrix(0, 0, m, self.sigma.len());
        for (k, s) in self.sigma.iter().enumerate() {
            for r in 0..m {
                us[(r, k)] = us[(r, k)] * *s;
            }
        }
        let vh = self.v.submatrix(0, 0, n, self.sigma.len()).conj_transpose();
        us.try_mul(&vh).expect("conforming by construction")
    }
}

/// Doolittle LU without pivoting, pivot threshold `1e-12 * ||A||_F`.
pub fn qlu(a: &QuaternionMatrix) -> Result<QluResult, AlgebraError> {
    qlu_with_tol(a, DEFAULT_PIVOT_TOL * a.frobenius_norm())
}

/// Doolittle LU without pivoting.
///
/// Fails with `SingularMinor(t)` when the `t`-th pivot (1-based) has
/// magnitude below `tol`, i.e. when the leading `t x t` block is
/// numerically singular.
pub fn qlu_with_tol(a: &QuaternionMatrix, tol: f64) -> Result<QluResult, AlgebraError> {
    if !a.is_square() {
        return Err(AlgebraError::DimensionMismatch {
            op: "qlu",
            left: a.shape(),
            right: a.shape(),
        });
    }
    let n = a.rows();
    let mut l = QuaternionMatrix::identity(n);
    let mut u = QuaternionMatrix::zeros(n, n);
    for k in 0..n {
        for j in k..n {
            let mut s = a[(k, j)];
            for t in 0..k {
                s -= l[(k, t)] * u[(t, j)];
            }
            u[(k, j)] = s;
        }
        let pivot = u[(k, k)];
        if pivot.abs().is_nan() || pivot.abs() < tol || pivot == Quaternion::ZERO {
            return Err(AlgebraError::SingularMinor(k + 1));
        }
        let pivot_inv = pivot.inv()?;
        for i in k + 1..n {
            let mut s = a[(i, k)];
            for t in 0..k {
                s -= l[(i, t)] * u[(t, k)];
            }
            l[(i, k)] = s * pivot_inv;
        }
    }
    Ok(QluResult { l, u })
}

/// Applies the reflector `I - tau v v^H` (rows `k..`) to `x` from the left.
fn reflect_left(x: &mut QuaternionMatrix, v: &[Quaternion], tau: f64, k: usize) {
    for c in 0..x.cols() {
        let mut w = Quaternion::ZERO;
        for (t, vt) in v.iter().enumerate() {
            w += vt.conj() * x[(k + t, c)];
        }
        if w == Quaternion::ZERO {
            continue;
        }
        let w = w * tau;
        for (t, vt) in v.iter().enumerate() {
            x[(k + t, c)] -= *vt * w;
        }
    }
}

/// Householder QR over the quaternions.
///
/// Each reflector maps the active column onto a quaternion multiple of `e_1`;
/// the leftover unit phases are moved from `R` into `Q` so that `diag(R)` is
/// real and nonnegative.
pub fn qqr(a: &QuaternionMatrix) -> Result<QqrResult, AlgebraError> {
    let (m, n) = a.shape();
    if m < n {
        return Err(AlgebraError::DimensionMismatch {
            op: "qqr",
            left: a.shape(),
            right: a.shape(),
        });
    }
    let mut r = a.clone();
    let mut reflectors: Vec<(usize, Vec<Quaternion>, f64)> = Vec::with_capacity(n);
    for k in 0..n {
        let x: Vec<Quaternion> = (k..m).map(|i| r[(i, k)]).collect();
        let alpha = vec_norm(&x);
        if alpha == 0.0 {
            continue;
        }
        let phase = x[0].phase();
        let mut v = x;
        v[0] += phase * alpha;
        let vv: f64 = v.iter().map(|q| q.norm_sqr()).sum();
        let tau = 2.0 / vv;
        reflect_left(&mut r, &v, tau, k);
        for i in k + 1..m {
            r[(i, k)] = Quaternion::ZERO;
        }
        reflectors.push((k, v, tau));
    }

    // Q = H_1 H_2 ... H_p, accumulated backwards onto the identity.
    let mut q = QuaternionMatrix::identity(m);
    for (k, v, tau) in reflectors.iter().rev() {
        reflect_left(&mut q, v, *tau, *k);
    }

    // Fix phases: R <- D R, Q <- Q D^H with D_kk = conj(phase(R_kk)).
    for k in 0..n.min(m) {
        let d = r[(k, k)].phase().conj();
        if d == Quaternion::ONE {
            continue;
        }
        for c in k..n {
            r[(k, c)] = d * r[(k, c)];
        }
        r[(k, k)] = Quaternion::real(r[(k, k)].w.max(0.0));
        let dh = d.conj();
        for i in 0..m {
            q[(i, k)] *= dh;
        }
    }
    Ok(QqrResult { q, r })
}

/// Rotates a vector so its largest-magnitude entry is real and positive.
/// Returns the applied right factor.
fn canonical_phase(x: &[Quaternion]) -> Quaternion {
    let mut best = 0;
    let mut best_abs = -1.0;
    for (t, q) in x.iter().enumerate() {
        let a = q.abs();
        if a > best_abs {
            best_abs = a;
            best = t;
        }
    }
    x[best].phase().conj()
}

fn right_scale(x: &mut [Quaternion], s: Quaternion) {
    for q in x {
        *q *= s;
    }
}

/// Gram-Schmidt (two passes) of `x` against `basis`. Returns the remainder.
fn orthogonalize(x: &[Quaternion], basis: &[Vec<Quaternion>]) -> Vec<Quaternion> {
    let mut x = x.to_vec();
    for _ in 0..2 {
        for b in basis {
            let h = inner(b, &x);
            for (xi, bi) in x.iter_mut().zip(b) {
                *xi -= *bi * h;
            }
        }
    }
    x
}

/// Extends an orthonormal set to an orthonormal basis of `H^dim`. At each
/// step the standard basis vector with the largest remainder is taken.
fn complete_basis(mut basis: Vec<Vec<Quaternion>>, dim: usize) -> Vec<Vec<Quaternion>> {
    let start = basis.len();
    while basis.len() < dim {
        let mut best: Option<(f64, Vec<Quaternion>)> = None;
        for e in 0..dim {
            let mut cand = vec![Quaternion::ZERO; dim];
            cand[e] = Quaternion::ONE;
            let rem = orthogonalize(&cand, &basis);
            let nrm = vec_norm(&rem);
            if best.as_ref().is_none_or(|(b, _)| nrm > *b) {
                best = Some((nrm, rem));
            }
        }
        let (nrm, rem) = best.expect("dim > 0");
        basis.push(rem.into_iter().map(|q| q / nrm).collect());
    }
    for b in basis.iter_mut().skip(start) {
        let s = canonical_phase(b);
        right_scale(b, s);
    }
    basis
}

fn columns_to_matrix(cols: &[Vec<Quaternion>], rows: usize) -> QuaternionMatrix {
    let mut m = QuaternionMatrix::zeros(rows, cols.len());
    for (c, col) in cols.iter().enumerate() {
        m.set_column(c, col);
    }
    m
}

/// Quaternion SVD through the complex adjoint.
///
/// Singular values of the adjoint come in equal pairs; each pair spans one
/// quaternion singular direction. Columns are taken in descending order and
/// kept only if they are not already in the quaternion span of the ones
/// accepted before, which also handles repeated quaternion singular values.
/// Null-space columns are completed from the standard basis.
pub fn qsvd(a: &QuaternionMatrix) -> Result<QsvdResult, AlgebraError> {
    let (m, n) = a.shape();
    let p = m.min(n);
    if p == 0 {
        return Ok(QsvdResult {
            u: QuaternionMatrix::identity(m),
            sigma: Vec::new(),
            v: QuaternionMatrix::identity(n),
        });
    }
    let chi = complex_adjoint(a);
    let svd = SVD::try_new(chi, true, true, f64::EPSILON * 5.0, 1000 * (2 * p).max(10))
        .ok_or(AlgebraError::ConvergenceFailure)?;
    let uc = svd.u.ok_or(AlgebraError::ConvergenceFailure)?;
    let vt = svd.v_t.ok_or(AlgebraError::ConvergenceFailure)?;
    let s = svd.singular_values;
    let s_max = s[0];
    let zero_tol = 2.0 * (m.max(n) as f64) * f64::EPSILON * s_max;

    let mut left: Vec<Vec<Quaternion>> = Vec::with_capacity(m);
    let mut right: Vec<Vec<Quaternion>> = Vec::with_capacity(n);
    let mut sigma = Vec::with_capacity(p);
    for c in 0..s.len() {
        if sigma.len() == p || s[c] <= zero_tol {
            break;
        }
        let ucol: Vec<_> = uc.column(c).iter().copied().collect();
        let vcol: Vec<_> = vt.row(c).iter().map(|z| z.conj()).collect();
        let x = complex_to_vector(&ucol);
        let y = complex_to_vector(&vcol);
        // Same coefficients on both sides keep A y = s x.
        let mut xr = x.clone();
        let mut yr = y;
        for _ in 0..2 {
            for (bx, by) in left.iter().zip(&right) {
                let h = inner(bx, &xr);
                for (xi, bi) in xr.iter_mut().zip(bx) {
                    *xi -= *bi * h;
                }
                for (yi, bi) in yr.iter_mut().zip(by) {
                    *yi -= *bi * h;
                }
            }
        }
        let nx = vec_norm(&xr);
        if nx <= 0.5 {
            continue;
        }
        let ny = vec_norm(&yr);
        let mut xr: Vec<_> = xr.into_iter().map(|q| q / nx).collect();
        let mut yr: Vec<_> = yr.into_iter().map(|q| q / ny).collect();
        let ph = canonical_phase(&xr);
        right_scale(&mut xr, ph);
        right_scale(&mut yr, ph);
        left.push(xr);
        right.push(yr);
        sigma.push(s[c]);
    }
    sigma.resize(p, 0.0);
    let left = complete_basis(left, m);
    let right = complete_basis(right, n);
    Ok(QsvdResult {
        u: columns_to_matrix(&left, m),
        sigma,
        v: columns_to_matrix(&right, n),
    })
}
