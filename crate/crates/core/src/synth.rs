//! Seeded synthetic inputs: random quaternion matrices and test images.
//!
//! Used by the examples, the acceptance suite, and anywhere a reproducible
//! stand-in for real data is needed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dual::{DualQuaternion, DualQuaternionMatrix};
use crate::imaging::RgbImage;
use crate::quat::{Quaternion, QuaternionMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Quaternion with components uniform in `[-1, 1)`.
pub fn random_quaternion<R: Rng>(rng: &mut R) -> Quaternion {
    Quaternion::new(
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
        rng.random_range(-1.0..1.0),
    )
}

pub fn random_dual_quaternion<R: Rng>(rng: &mut R) -> DualQuaternion {
    DualQuaternion::new(random_quaternion(rng), random_quaternion(rng))
}

pub fn random_qmatrix(rows: usize, cols: usize, seed: u64) -> QuaternionMatrix {
    let mut r = rng(seed);
    QuaternionMatrix::from_fn(rows, cols, |_, _| random_quaternion(&mut r))
}

/// Random square matrix with `n` added to the real part of the diagonal, so
/// every leading minor is safely nonsingular and the matrix is well
/// conditioned.
pub fn dominant_qmatrix(n: usize, seed: u64) -> QuaternionMatrix {
    let mut a = random_qmatrix(n, n, seed);
    for k in 0..n {
        a[(k, k)] += Quaternion::real(n as f64);
    }
    a
}

/// Dual-quaternion matrix with a diagonally dominant standard part and a
/// random dual part.
pub fn dominant_dq_matrix(n: usize, seed: u64) -> DualQuaternionMatrix {
    DualQuaternionMatrix::new(
        dominant_qmatrix(n, seed),
        random_qmatrix(n, n, seed.wrapping_add(0x9e37_79b9)),
    )
    .expect("shapes agree")
}

/// Smooth synthetic "scan": a few Gaussian blobs and a gradient with mild
/// seeded texture, distinct per seed.
pub fn synthetic_carrier(size: u32, seed: u64) -> RgbImage {
    let mut r = rng(seed);
    let blobs: Vec<(f64, f64, f64, [f64; 3])> = (0..5)
        .map(|_| {
            (
                r.random_range(0.1..0.9) * size as f64,
                r.random_range(0.1..0.9) * size as f64,
                r.random_range(0.08..0.3) * size as f64,
                [
                    r.random_range(60.0..200.0),
                    r.random_range(60.0..200.0),
                    r.random_range(60.0..200.0),
                ],
            )
        })
        .collect();
    let tilt = [r.random_range(-0.5..0.5), r.random_range(-0.5..0.5)];
    RgbImage::from_fn(size, size, |x, y| {
        let mut px = [20.0 + tilt[0] * x as f64 + tilt[1] * y as f64; 3];
        for (cx, cy, rad, amp) in &blobs {
            let d2 = (x as f64 - cx).powi(2) + (y as f64 - cy).powi(2);
            let g = (-d2 / (2.0 * rad * rad)).exp();
            for ch in 0..3 {
                px[ch] += amp[ch] * g;
            }
        }
        let noise: f64 = r.random_range(-6.0..6.0);
        px.map(|v| (v + noise).round().clamp(0.0, 255.0) as u8)
    })
}

/// High-contrast watermark: a colored checker with a diagonal band, the kind
/// of binary-ish identity image a registration authority would bind.
pub fn synthetic_watermark(size: u32) -> RgbImage {
    let cell = (size / 8).max(1);
    RgbImage::from_fn(size, size, |x, y| {
        let checker = ((x / cell) + (y / cell)).is_multiple_of(2);
        let band = (x as i64 - y as i64).abs() < (size as i64 / 6);
        match (checker, band) {
            (true, false) => [230, 40, 40],
            (false, false) => [20, 20, 200],
            (true, true) => [250, 250, 250],
            (false, true) => [10, 160, 30],
        }
    })
}

/// Uniform random pixels.
pub fn noise_image(width: u32, height: u32, seed: u64) -> RgbImage {
    let mut r = rng(seed);
    RgbImage::from_fn(width, height, |_, _| [r.random(), r.random(), r.random()])
}
