//! Dual quaternions `q_s + q_i ε`.

use std::ops::{Add, Mul, Neg, Sub};

use super::number::{dual_mul, dual_sqrt, DualNumber};
use crate::error::AlgebraError;
use crate::quat::Quaternion;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DualQuaternion {
    pub s: Quaternion,
    pub i: Quaternion,
}

impl DualQuaternion {
    pub const ZERO: Self = Self::new(Quaternion::ZERO, Quaternion::ZERO);
    pub const ONE: Self = Self::new(Quaternion::ONE, Quaternion::ZERO);

    pub const fn new(s: Quaternion, i: Quaternion) -> Self {
        Self { s, i }
    }

    pub fn is_appreciable(self) -> bool {
        self.s != Quaternion::ZERO
    }

    pub fn conj(self) -> Self {
        Self::new(self.s.conj(), self.i.conj())
    }

    pub fn inverse(self) -> Result<Self, AlgebraError> {
        dq_inverse(self)
    }

    pub fn magnitude(self) -> DualNumber {
        dq_magnitude(self)
    }
}

pub fn dq_mul(q: DualQuaternion, p: DualQuaternion) -> DualQuaternion {
    DualQuaternion::new(q.s * p.s, q.s * p.i + q.i * p.s)
}

/// `q_s⁻¹ - (q_s⁻¹ q_i q_s⁻¹) ε`.
pub fn dq_inverse(q: DualQuaternion) -> Result<DualQuaternion, AlgebraError> {
    if !q.is_appreciable() {
        return Err(AlgebraError::NotAppreciable);
    }
    let si = q.s.inv()?;
    Ok(DualQuaternion::new(si, -(si * q.i * si)))
}

/// Dual-number magnitude.
///
/// For appreciable `q` the infinitesimal part is
/// `(q_s conj(q_i) + q_i conj(q_s)) / (2 |q_s|)`, which is real; for
/// infinitesimal `q` the magnitude is `|q_i| ε`.
///
/// Panics if the quaternion numerator carries an imaginary residue, which
/// would mean the arithmetic itself is broken.
pub fn dq_magnitude(q: DualQuaternion) -> DualNumber {
    if !q.is_appreciable() {
        return DualNumber::new(0.0, q.i.abs());
    }
    let ns = q.s.abs();
    let e = q.s * q.i.conj() + q.i * q.s.conj();
    let scale = 2.0 * ns * q.i.abs();
    assert!(
        e.imag().abs() <= 1e-12 * scale.max(f64::MIN_POSITIVE),
        "internal consistency: magnitude numerator {e} is not real"
    );
    DualNumber::new(ns, e.w / (2.0 * ns))
}

/// Dual-number 2-norm of a dual-quaternion vector.
pub fn dqvec_norm2(p: &[DualQuaternion]) -> DualNumber {
    if p.iter().any(|q| q.is_appreciable()) {
        let sum = p
            .iter()
            .map(|q| {
                let m = dq_magnitude(*q);
                dual_mul(m, m)
            })
            .fold(DualNumber::ZERO, |a, b| a + b);
        dual_sqrt(sum).expect("sum of squares has positive standard part")
    } else {
        let s: f64 = p.iter().map(|q| q.i.norm_sqr()).sum();
        DualNumber::new(0.0, s.sqrt())
    }
}

impl Add for DualQuaternion {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.s + o.s, self.i + o.i)
    }
}

impl Sub for DualQuaternion {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.s - o.s, self.i - o.i)
    }
}

impl Neg for DualQuaternion {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.s, -self.i)
    }
}

impl Mul for DualQuaternion {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        dq_mul(self, o)
    }
}
