//! DQLU, DQQR and DQSVD of a random dual-quaternion matrix, with the
//! residuals of each factor identity.

use dqzw::dual::DualQuaternionMatrix;
use dqzw::factor::{dqlu, dqqr, dqsvd};
use dqzw::quat::QuaternionMatrix;
use dqzw::synth::{dominant_dq_matrix, random_qmatrix};

/// Relative residuals of the standard and dual parts.
fn rel(a: &DualQuaternionMatrix, b: &DualQuaternionMatrix) -> String {
    let d = a.try_sub(b).unwrap();
    format!(
        "({:.2e}, {:.2e})",
        d.standard().frobenius_norm() / a.standard().frobenius_norm(),
        d.dual().frobenius_norm() / a.dual().frobenius_norm(),
    )
}

fn main() -> Result<(), dqzw::AlgebraError> {
    let n = 12;
    let a = dominant_dq_matrix(n, 7);

    let lu = dqlu(&a)?;
    println!("DQLU  residual (standard, dual) = {}", rel(&a, &lu.reconstruct()));

    let qr = dqqr(&a)?;
    let qhq = qr.q.conj_transpose().try_mul(&qr.q)?;
    let unitarity = qhq.standard().try_sub(&QuaternionMatrix::identity(n))?.frobenius_norm()
        + qhq.dual().frobenius_norm();
    let anti = qr.p.try_add(&qr.p.conj_transpose())?.frobenius_norm();
    println!("DQQR  residual = {}, |Q^H Q - I| = {unitarity:.2e}, |P + P^H| = {anti:.2e}", rel(&a, &qr.reconstruct()));

    let svd = dqsvd(&a)?;
    println!("DQSVD residual = {}, rank {}", rel(&a, &svd.reconstruct()), svd.rank);
    for (k, s) in svd.sigma.iter().take(4).enumerate() {
        println!("  sigma_{k} = {:.6} + {:.6} eps", s.s, s.i);
    }

    // First-order check: sigma(A_s + t A_i) ~ sigma_s + t sigma_i.
    let t = 1e-6;
    let shifted = a.standard().try_add(&a.dual().scale(t))?;
    let fd = dqsvd(&DualQuaternionMatrix::from_standard(shifted))?;
    let s0 = &svd.sigma[0];
    println!(
        "  finite difference: sigma_0(A_s + tA_i) = {:.12}, sigma_s + t sigma_i = {:.12}",
        fd.sigma[0].s,
        s0.s + t * s0.i
    );

    // Rank-deficient standard part: trailing block keys W1, W2 appear.
    let b = random_qmatrix(5, 3, 1).try_mul(&random_qmatrix(3, 5, 2))?;
    let rd = DualQuaternionMatrix::new(b, random_qmatrix(5, 5, 3))?;
    let f = dqsvd(&rd)?;
    println!(
        "rank-deficient: rank {}, W1 {:?}, W2 {:?}, residual {}",
        f.rank,
        f.w1.shape(),
        f.w2.shape(),
        rel(&rd, &f.reconstruct())
    );
    Ok(())
}
