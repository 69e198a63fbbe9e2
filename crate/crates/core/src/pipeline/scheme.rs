//! Zero-watermark generation and verification.

use super::format::{Payload, ZeroWatermark};
use super::key::{KeyFile, MatrixComponents, ResizeRecord, KEY_VERSION};
use super::method::Method;
use crate::error::{Error, Result};
use crate::factor::{dqlu, dqqr, dqsvd, lu_dual_part, qr_dual_part, svd_dual_part, svd_standard_with_keys};
use crate::imaging::{
    arnold_scramble, arnold_unscramble, decode_dual_part, encode_feature, encode_pair, fft_feature, ArnoldKey,
    FeatureParams, MetricsReport, RgbImage,
};
use crate::quat::{qlu, qqr, QuaternionMatrix};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenerateConfig {
    pub method: Method,
    /// `[a, b, c, d]` of the scrambling matrix.
    pub arnold_matrix: [i64; 4],
    pub arnold_iterations: u32,
    /// Resize the carrier to `size x size` first.
    pub size: Option<u32>,
    pub feature: FeatureParams,
}

impl GenerateConfig {
    pub fn new(method: Method) -> Self {
        Self {
            method,
            arnold_matrix: [1, 1, 1, 2],
            arnold_iterations: 10,
            size: None,
            feature: FeatureParams::default(),
        }
    }
}

/// Resized carrier, or `NotSquare` when no size is requested.
fn working_carrier(carrier: &RgbImage, side: Option<u32>) -> Result<RgbImage> {
    match side {
        Some(0) => Err(Error::BadParameters("size must be positive".into())),
        Some(n) => Ok(carrier.resize_bicubic(n, n)),
        None if carrier.is_square() => Ok(carrier.clone()),
        None => Err(Error::NotSquare {
            width: carrier.width(),
            height: carrier.height(),
        }),
    }
}

fn fit_watermark(wm: &RgbImage, dims: (u32, u32)) -> RgbImage {
    wm.resize_bicubic(dims.0, dims.1)
}

pub fn generate(carrier: &RgbImage, watermark: &RgbImage, config: &GenerateConfig) -> Result<(ZeroWatermark, KeyFile)> {
    let work = working_carrier(carrier, config.size)?;
    let n = work.width();
    let [a, b, c, d] = config.arnold_matrix;
    let arnold = ArnoldKey {
        a,
        b,
        c,
        d,
        iterations: config.arnold_iterations,
        n,
    };
    arnold.validate()?;

    let wm = fit_watermark(watermark, work.dims());
    let feature = fft_feature(&work, &config.feature);
    let encrypted = arnold_scramble(&wm, &arnold)?;
    let a_mat = encode_pair(&feature, &encrypted)?;

    let method = config.method;
    let (payload, w1, w2) = match method {
        Method::Lu => {
            let f = dqlu(&a_mat).map_err(|e| method.fail(e))?;
            let (_, l_i) = f.l.into_parts();
            let (_, u_i) = f.u.into_parts();
            (Payload::Lu { l_i, u_i }, None, None)
        }
        Method::Qr => {
            let f = dqqr(&a_mat).map_err(|e| method.fail(e))?;
            let (_, q_i) = f.q.into_parts();
            let (_, r_i) = f.r.into_parts();
            (Payload::Qr { q_i, r_i }, None, None)
        }
        Method::Svd => {
            let f = dqsvd(&a_mat).map_err(|e| method.fail(e))?;
            let sigma_i = f.sigma_dual();
            let full = f.w1.rows() == 0 && f.w2.rows() == 0;
            let (w1, w2) = if full {
                (None, None)
            } else {
                (Some(MatrixComponents::from(&f.w1)), Some(MatrixComponents::from(&f.w2)))
            };
            let (_, u_i) = f.u.into_parts();
            let (_, v_i) = f.v.into_parts();
            (Payload::Svd { u_i, sigma_i, v_i }, w1, w2)
        }
    };

    let zw = ZeroWatermark {
        rows: n,
        cols: n,
        payload,
    };
    let key = KeyFile {
        version: KEY_VERSION,
        method,
        arnold,
        feature: config.feature,
        carrier_dims: carrier.dims(),
        watermark_dims: watermark.dims(),
        resize: ResizeRecord {
            carrier_side: config.size,
            watermark_resized: watermark.dims() != work.dims(),
        },
        w1,
        w2,
    };
    Ok((zw, key))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verification {
    pub report: MetricsReport,
    /// Descrambled watermark.
    pub recovered: RgbImage,
    /// Largest `|real part|` of the reconstructed dual part.
    pub real_residual: f64,
}

/// Rebuilds `A_i` from the suspect's standard factors and the stored dual
/// factors.
pub fn reconstruct_dual_part(a_s: &QuaternionMatrix, zw: &ZeroWatermark, key: &KeyFile) -> Result<QuaternionMatrix> {
    let method = zw.method();
    let fail = |e| method.fail(e);
    let a_i = match &zw.payload {
        Payload::Lu { l_i, u_i } => {
            let s = qlu(a_s).map_err(fail)?;
            lu_dual_part(&s.l, &s.u, l_i, u_i).map_err(fail)?
        }
        Payload::Qr { q_i, r_i } => {
            let s = qqr(a_s).map_err(fail)?;
            qr_dual_part(&s.q, &s.r, q_i, r_i).map_err(fail)?
        }
        Payload::Svd { u_i, sigma_i, v_i } => {
            let (w1, w2) = key.svd_keys()?;
            let s = svd_standard_with_keys(a_s, &w1, &w2).map_err(fail)?;
            svd_dual_part(&s.u, &s.sigma, &s.v, u_i, sigma_i, v_i).map_err(fail)?
        }
    };
    Ok(a_i)
}

/// Verification with the strict threshold: authentic only when BER is 0.
pub fn verify(suspect: &RgbImage, zw: &ZeroWatermark, key: &KeyFile, reference_wm: &RgbImage) -> Result<Verification> {
    verify_with_tau(suspect, zw, key, reference_wm, 0.0)
}

pub fn verify_with_tau(
    suspect: &RgbImage,
    zw: &ZeroWatermark,
    key: &KeyFile,
    reference_wm: &RgbImage,
    tau: f64,
) -> Result<Verification> {
    if zw.method() != key.method {
        return Err(Error::BadKey(format!(
            "key is for {} but the zero-watermark holds {}",
            key.method,
            zw.method()
        )));
    }
    zw.validate()?;
    let work = match key.resize.carrier_side {
        Some(n) => suspect.resize_bicubic(n, n),
        None => suspect.clone(),
    };
    if work.dims() != (zw.cols, zw.rows) {
        return Err(Error::DimensionMismatch(work.dims(), (zw.cols, zw.rows)));
    }
    let a_s = encode_feature(&fft_feature(&work, &key.feature));
    let a_i = reconstruct_dual_part(&a_s, zw, key)?;
    let decoded = decode_dual_part(&a_i);
    let recovered = arnold_unscramble(&decoded.image, &key.arnold)?;
    let reference = fit_watermark(reference_wm, work.dims());
    let report = MetricsReport::score(&reference, &recovered, tau)?;
    Ok(Verification {
        report,
        recovered,
        real_residual: decoded.real_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::{synthetic_carrier, synthetic_watermark};

    #[test]
    fn untouched_carrier_verifies_for_every_method() {
        let carrier = synthetic_carrier(16, 1);
        let wm = synthetic_watermark(16);
        for m in Method::ALL {
            let (zw, key) = generate(&carrier, &wm, &GenerateConfig::new(m)).unwrap();
            let v = verify(&carrier, &zw, &key, &wm).unwrap();
            assert!(v.report.is_perfect(), "{m}: {:?}", v.report);
            assert!(v.report.authentic);
            assert_eq!(v.recovered, wm);
            assert!(v.real_residual < 1e-6, "{m}: {}", v.real_residual);
        }
    }

    #[test]
    fn black_watermark_gives_zero_payload() {
        let carrier = synthetic_carrier(8, 2);
        let wm = RgbImage::new(8, 8);
        let (zw, _) = generate(&carrier, &wm, &GenerateConfig::new(Method::Lu)).unwrap();
        match zw.payload {
            Payload::Lu { l_i, u_i } => {
                assert_eq!(l_i.max_abs(), 0.0);
                assert_eq!(u_i.max_abs(), 0.0);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn non_square_carrier_needs_size() {
        let carrier = crate::synth::noise_image(12, 10, 5);
        let wm = synthetic_watermark(8);
        let cfg = GenerateConfig::new(Method::Qr);
        assert!(matches!(generate(&carrier, &wm, &cfg), Err(Error::NotSquare { .. })));
        let cfg = GenerateConfig {
            size: Some(8),
            ..cfg
        };
        let (zw, key) = generate(&carrier, &wm, &cfg).unwrap();
        assert_eq!(key.resize.carrier_side, Some(8));
        assert!(!key.resize.watermark_resized);
        let v = verify(&carrier, &zw, &key, &wm).unwrap();
        assert!(v.report.is_perfect());
    }

    #[test]
    fn method_mismatch_is_rejected() {
        let carrier = synthetic_carrier(8, 3);
        let wm = synthetic_watermark(8);
        let (zw, _) = generate(&carrier, &wm, &GenerateConfig::new(Method::Lu)).unwrap();
        let (_, key) = generate(&carrier, &wm, &GenerateConfig::new(Method::Qr)).unwrap();
        assert!(matches!(verify(&carrier, &zw, &key, &wm), Err(Error::BadKey(_))));
    }

    #[test]
    fn constant_carrier_fails_lu_with_method_named() {
        // Flat spectrum floor: every off-center feature entry equals 1, so
        // the second leading minor vanishes.
        let carrier = RgbImage::filled(8, 8, [40, 40, 40]);
        let wm = synthetic_watermark(8);
        match generate(&carrier, &wm, &GenerateConfig::new(Method::Lu)) {
            Err(Error::Factorization { method, .. }) => assert_eq!(method, "DQLU"),
            other => panic!("{other:?}"),
        }
    }
}
