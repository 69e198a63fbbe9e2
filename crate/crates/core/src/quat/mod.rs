//! Quaternion scalars, matrices and their standard-part factorizations.

pub mod adjoint;
pub mod decomp;
pub mod matrix;
pub mod quaternion;

pub use adjoint::{complex_adjoint, q_determinant, ComplexMatrix};
pub use decomp::{qlu, qlu_with_tol, qqr, qsvd, QluResult, QqrResult, QsvdResult};
pub use matrix::{qmat_mul, QuaternionMatrix};
pub use quaternion::{qinv, qmul, Quaternion};
