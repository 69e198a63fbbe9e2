//! Dual numbers and dual quaternions: products, division, order, square
//! roots, magnitudes and norms.

use dqzw::dual::{dual_cmp, dual_div, dual_sqrt, dq_magnitude, dqvec_norm2, DualNumber, DualQuaternion};
use dqzw::quat::Quaternion;

fn main() -> Result<(), dqzw::AlgebraError> {
    let eps = DualNumber::EPSILON;
    println!("eps^2 = {:?}", eps * eps);

    let d = DualNumber::new(3.0, 2.0);
    let b = DualNumber::new(2.0, 1.0);
    let q = dual_div(d, b, 0.0)?;
    println!("{d:?} / {b:?} = {q:?}, back: {:?}", q * b);
    // Infinitesimal by infinitesimal: defined up to a free real constant.
    println!("2eps / eps = {:?}", dual_div(DualNumber::new(0.0, 2.0), eps, 0.0)?);

    let r = dual_sqrt(DualNumber::new(4.0, 1.0))?;
    println!("sqrt(4 + eps) = {r:?}, squared = {:?}", r * r);
    println!("sqrt(0 + eps) -> {:?}", dual_sqrt(eps));

    let mut xs = vec![DualNumber::new(1.0, 5.0), DualNumber::new(1.0, -2.0), DualNumber::new(0.0, 9.0)];
    xs.sort_by(|a, b| dual_cmp(*a, *b));
    println!("sorted: {xs:?}");

    let p = DualQuaternion::new(Quaternion::new(1.0, 1.0, 0.0, 0.0), Quaternion::new(0.0, 0.0, 2.0, 1.0));
    println!("|p| = {:?}", dq_magnitude(p));
    println!("p p^-1 = {:?}", p * p.inverse()?);
    println!("||(p, p)||_2 = {:?}", dqvec_norm2(&[p, p]));
    Ok(())
}
