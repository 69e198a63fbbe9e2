//! Dual numbers, dual quaternions and dual-quaternion matrices.

pub mod matrix;
pub mod number;
pub mod quaternion;

pub use matrix::DualQuaternionMatrix;
pub use number::{dual_cmp, dual_div, dual_mul, dual_sqrt, DualNumber};
pub use quaternion::{dq_inverse, dq_magnitude, dq_mul, dqvec_norm2, DualQuaternion};
