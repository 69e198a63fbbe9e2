//! Dual-quaternion LU, QR and SVD. Their dual parts form the zero-watermark.

pub mod lu;
pub mod qr;
pub mod svd;

pub use lu::{dqlu, dqlu_with_tol, lu_dual_part, DqluFactors};
pub use qr::{dqqr, dqqr_with_tol, qr_dual_part, DqqrFactors};
pub use svd::{dqsvd, dqsvd_with_tol, svd_dual_part, svd_standard_with_keys, DqsvdFactors, SvdStandard};
