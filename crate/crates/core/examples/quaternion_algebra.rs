//! Quaternion arithmetic, the complex adjoint, and the q-determinant.

use dqzw::quat::{complex_adjoint, q_determinant, qinv, Quaternion, QuaternionMatrix};
use dqzw::synth::random_qmatrix;

fn main() -> Result<(), dqzw::AlgebraError> {
    let (i, j, k) = (Quaternion::I, Quaternion::J, Quaternion::K);
    println!("ij = {}, ji = {}, ijk = {}", i * j, j * i, i * j * k);
    println!("(i + j)(i - j) = {}", (i + j) * (i - j));

    let g = Quaternion::new(1.0, 2.0, -1.0, 0.5);
    let inv = qinv(g)?;
    println!("g = {g}, g^-1 = {inv}, g g^-1 = {}", g * inv);

    // The adjoint turns quaternion products into complex matrix products.
    let a = random_qmatrix(3, 3, 1);
    let b = random_qmatrix(3, 3, 2);
    let lhs = complex_adjoint(&a.try_mul(&b)?);
    let rhs = complex_adjoint(&a) * complex_adjoint(&b);
    println!("|chi(AB) - chi(A) chi(B)| = {:.2e}", (lhs - rhs).norm());

    println!("qdet(I3) = {}", q_determinant(&QuaternionMatrix::identity(3))?);
    let da = q_determinant(&a)?;
    let db = q_determinant(&b)?;
    let dab = q_determinant(&a.try_mul(&b)?)?;
    println!("qdet(A) qdet(B) = {:.6}, qdet(AB) = {:.6}", da * db, dab);
    Ok(())
}
