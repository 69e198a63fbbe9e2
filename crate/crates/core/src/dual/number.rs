//! Dual numbers `s + i ε` with `ε² = 0`.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DualNumber {
    /// Standard part.
    pub s: f64,
    /// Infinitesimal part.
    pub i: f64,
}

impl DualNumber {
    pub const ZERO: Self = Self::new(0.0, 0.0);
    pub const ONE: Self = Self::new(1.0, 0.0);
    pub const EPSILON: Self = Self::new(0.0, 1.0);

    pub const fn new(s: f64, i: f64) -> Self {
        Self { s, i }
    }

    pub fn is_appreciable(self) -> bool {
        self.s != 0.0
    }
}

pub fn dual_mul(d: DualNumber, b: DualNumber) -> DualNumber {
    DualNumber::new(d.s * b.s, d.s * b.i + d.i * b.s)
}

/// `d / b`. When both standard parts vanish the quotient is only defined up
/// to a free infinitesimal part, supplied as `c`.
pub fn dual_div(d: DualNumber, b: DualNumber, c: f64) -> Result<DualNumber, AlgebraError> {
    if b.s != 0.0 {
        let q = d.s / b.s;
        return Ok(DualNumber::new(q, d.i / b.s - q * b.i / b.s));
    }
    if d.s == 0.0 && b.i != 0.0 {
        return Ok(DualNumber::new(d.i / b.i, c));
    }
    Err(AlgebraError::UndefinedDivision)
}

/// Total order: standard parts first, then infinitesimal parts.
pub fn dual_cmp(d: DualNumber, b: DualNumber) -> Ordering {
    d.s.total_cmp(&b.s).then(d.i.total_cmp(&b.i))
}

pub fn dual_sqrt(d: DualNumber) -> Result<DualNumber, AlgebraError> {
    if d.s > 0.0 {
        let r = d.s.sqrt();
        Ok(DualNumber::new(r, d.i / (2.0 * r)))
    } else if d.s == 0.0 && d.i == 0.0 {
        Ok(DualNumber::ZERO)
    } else {
        Err(AlgebraError::DomainError(d.s))
    }
}

impl Add for DualNumber {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.s + o.s, self.i + o.i)
    }
}

impl Sub for DualNumber {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.s - o.s, self.i - o.i)
    }
}

impl Neg for DualNumber {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.s, -self.i)
    }
}

impl Mul for DualNumber {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        dual_mul(self, o)
    }
}

impl PartialOrd for DualNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(dual_cmp(*self, *other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const D: fn(f64, f64) -> DualNumber = DualNumber::new;

    #[test]
    fn multiplication_examples() {
        assert_eq!(dual_mul(D(1.0, 2.0), D(3.0, 4.0)), D(3.0, 10.0));
        assert_eq!(dual_mul(DualNumber::EPSILON, DualNumber::EPSILON), DualNumber::ZERO);
        assert_eq!(dual_mul(D(5.5, -2.0), DualNumber::ONE), D(5.5, -2.0));
    }

    #[test]
    fn division_examples() {
        assert_eq!(dual_div(D(3.0, 10.0), D(3.0, 4.0), 0.0).unwrap(), D(1.0, 2.0));
        assert_eq!(dual_div(D(0.0, 4.0), D(0.0, 2.0), 0.0).unwrap(), D(2.0, 0.0));
        assert_eq!(dual_div(D(0.0, 4.0), D(0.0, 2.0), 7.0).unwrap(), D(2.0, 7.0));
        assert_eq!(dual_div(D(1.5, -3.0), DualNumber::ONE, 0.0).unwrap(), D(1.5, -3.0));
        assert_eq!(dual_div(D(1.0, 0.0), D(0.0, 2.0), 0.0), Err(AlgebraError::UndefinedDivision));
        assert_eq!(dual_div(D(0.0, 1.0), DualNumber::ZERO, 0.0), Err(AlgebraError::UndefinedDivision));
    }

    #[test]
    fn total_order_examples() {
        assert_eq!(dual_cmp(D(1.0, 9.0), D(2.0, 0.0)), Ordering::Less);
        assert_eq!(dual_cmp(D(1.0, 1.0), D(1.0, 2.0)), Ordering::Less);
        assert_eq!(dual_cmp(D(1.0, 1.0), D(1.0, 1.0)), Ordering::Equal);
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(dual_sqrt(D(4.0, 4.0)).unwrap(), D(2.0, 1.0));
        assert_eq!(dual_sqrt(DualNumber::ZERO).unwrap(), DualNumber::ZERO);
        assert_eq!(dual_sqrt(DualNumber::ONE).unwrap(), DualNumber::ONE);
        assert!(matches!(dual_sqrt(D(-1.0, 0.0)), Err(AlgebraError::DomainError(_))));
        assert!(dual_sqrt(D(0.0, 1.0)).is_err());
    }

    proptest! {
        #[test]
        fn div_undoes_mul(ds in -1e3..1e3f64, di in -1e3..1e3f64, bs in 0.1..1e3f64, bi in -1e3..1e3f64) {
            let d = D(ds, di);
            let b = D(bs, bi);
            let back = dual_div(dual_mul(d, b), b, 0.0).unwrap();
            prop_assert!((back.s - d.s).abs() <= 1e-12 * (1.0 + d.s.abs()));
            prop_assert!((back.i - d.i).abs() <= 1e-12 * (1.0 + d.i.abs() + d.s.abs() * (bi / bs).abs()));
        }

        #[test]
        fn sqrt_squares_back(s in 1e-3..1e3f64, i in -1e3..1e3f64) {
            let r = dual_sqrt(D(s, i)).unwrap();
            let sq = dual_mul(r, r);
            prop_assert!((sq.s - s).abs() <= 1e-12 * s);
            prop_assert!((sq.i - i).abs() <= 1e-12 * (1.0 + i.abs()));
        }
    }
}
