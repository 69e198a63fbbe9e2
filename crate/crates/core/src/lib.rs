//! Dual-quaternion matrix algebra and a fragile zero-watermarking scheme for
//! color images.
//!
//! A carrier's frequency features and a scrambled watermark are packed into
//! one dual-quaternion matrix `A_s + A_i ε`. Factoring it (LU, QR or SVD)
//! and publishing only the dual parts of the factors yields a
//! zero-watermark: the carrier itself is never modified. Verification
//! recomputes the standard factors from a suspect image, combines them with
//! the stored dual parts, and decodes the watermark. Any change to the
//! carrier perturbs the standard factors and destroys the recovered mark.
//!
//! Modules, bottom up:
//!
//! - [`quat`]: quaternions, quaternion matrices, the complex adjoint, and
//!   the quaternion LU / QR / SVD.
//! - [`dual`]: dual numbers, dual quaternions and dual-quaternion matrices.
//! - [`factor`]: DQLU, DQQR and DQSVD.
//! - [`imaging`]: RGB images, Arnold scrambling, FFT features, the color
//!   model and the PSNR / SSIM / BER / NC metrics.
//! - [`attacks`]: seeded image attacks.
//! - [`pipeline`]: generation, verification, file formats, experiments.
//!
//! The `examples/` directory has one runnable program per capability:
//!
//! ```text
//! cargo run --release --example quaternion_algebra
//! cargo run --release --example dual_algebra
//! cargo run --release --example factorizations
//! cargo run --release --example arnold_scrambling
//! cargo run --release --example fft_features
//! cargo run --release --example metrics
//! cargo run --release --example watermark_roundtrip
//! cargo run --release --example tamper_detection
//! cargo run --release --example experiment
//! ```
//!
//! ```
//! use dqzw::pipeline::{generate, verify, GenerateConfig, Method};
//! use dqzw::synth::{synthetic_carrier, synthetic_watermark};
//!
//! let carrier = synthetic_carrier(16, 7);
//! let mark = synthetic_watermark(16);
//! let (zw, key) = generate(&carrier, &mark, &GenerateConfig::new(Method::Qr)).unwrap();
//! let v = verify(&carrier, &zw, &key, &mark).unwrap();
//! assert!(v.report.authentic && v.report.ber == 0.0);
//! ```

pub mod attacks;
pub mod dual;
pub mod error;
pub mod factor;
pub mod imaging;
pub mod pipeline;
pub mod quat;
pub mod synth;

pub use error::{AlgebraError, Error, Result};
