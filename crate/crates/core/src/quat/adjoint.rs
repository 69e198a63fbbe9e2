//! Complex adjoint representation and the q-determinant.
//!
//! Writing `A = A_a + A_b j` with complex `A_a = A1 + A2 i` and
//! `A_b = A3 + A4 i`, the adjoint is the `2m x 2n` complex block matrix
//!
//! ```text
//! [  A_a        A_b     ]
//! [ -conj(A_b)  conj(A_a) ]
//! ```
//!
//! It is an injective ring homomorphism, so products, sums and singular
//! values carry over. A quaternion vector `x = x_a + x_b j` corresponds to
//! the complex vector `[x_a; -conj(x_b)]` under the same map.

use nalgebra::DMatrix;
use num_complex::Complex64;

use super::matrix::QuaternionMatrix;
use super::quaternion::Quaternion;
use crate::error::AlgebraError;

pub type ComplexMatrix = DMatrix<Complex64>;

pub fn complex_adjoint(a: &QuaternionMatrix) -> ComplexMatrix {
    let (m, n) = a.shape();
    let mut out = ComplexMatrix::zeros(2 * m, 2 * n);
    for r in 0..m {
        for c in 0..n {
            let q = a[(r, c)];
            let alpha = Complex64::new(q.w, q.x);
            let beta = Complex64::new(q.y, q.z);
            out[(r, c)] = alpha;
            out[(r, n + c)] = beta;
            out[(m + r, c)] = -beta.conj();
            out[(m + r, n + c)] = alpha.conj();
        }
    }
    out
}

/// Determinant of the complex adjoint; real and nonnegative.
pub fn q_determinant(a: &QuaternionMatrix) -> Result<f64, AlgebraError> {
    if !a.is_square() {
        return Err(AlgebraError::DimensionMismatch {
            op: "q_determinant",
            left: a.shape(),
            right: a.shape(),
        });
    }
    if a.rows() == 0 {
        return Ok(1.0);
    }
    Ok(complex_adjoint(a).determinant().re)
}

/// Complex vector `[x_a; -conj(x_b)]` for a quaternion vector.
pub fn vector_to_complex(x: &[Quaternion]) -> Vec<Complex64> {
    let n = x.len();
    let mut out = vec![Complex64::new(0.0, 0.0); 2 * n];
    for (t, q) in x.iter().enumerate() {
        out[t] = Complex64::new(q.w, q.x);
        out[n + t] = -Complex64::new(q.y, q.z).conj();
    }
    out
}

/// Inverse of [`vector_to_complex`]; `v` must have even length.
pub fn complex_to_vector(v: &[Complex64]) -> Vec<Quaternion> {
    let n = v.len() / 2;
    (0..n)
        .map(|t| {
            let a = v[t];
            let b = -v[n + t].conj();
            Quaternion::new(a.re, a.im, b.re, b.im)
        })
        .collect()
}
