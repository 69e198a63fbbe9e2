//! Packing a feature image and a watermark into one dual-quaternion matrix.
//!
//! Entry `(y, x)` carries the three channels of pixel `(x, y)` in the
//! `i, j, k` slots; the real slot is zero.

use super::feature::FeatureImage;
use super::image::RgbImage;
use crate::dual::DualQuaternionMatrix;
use crate::error::{Error, Result};
use crate::quat::{Quaternion, QuaternionMatrix};

pub fn encode_feature(feature: &FeatureImage) -> QuaternionMatrix {
    let (w, h) = feature.dims();
    QuaternionMatrix::from_fn(h as usize, w as usize, |r, c| {
        let (x, y) = (c as u32, r as u32);
        Quaternion::pure(feature.get(x, y, 0), feature.get(x, y, 1), feature.get(x, y, 2))
    })
}

pub fn encode_image(img: &RgbImage) -> QuaternionMatrix {
    QuaternionMatrix::from_fn(img.height() as usize, img.width() as usize, |r, c| {
        let [red, green, blue] = img.pixel(c as u32, r as u32);
        Quaternion::pure(red as f64, green as f64, blue as f64)
    })
}

pub fn encode_pair(feature: &FeatureImage, encrypted_wm: &RgbImage) -> Result<DualQuaternionMatrix> {
    if feature.dims() != encrypted_wm.dims() {
        return Err(Error::DimensionMismatch(feature.dims(), encrypted_wm.dims()));
    }
    Ok(DualQuaternionMatrix::new(encode_feature(feature), encode_image(encrypted_wm))?)
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodedImage {
    pub image: RgbImage,
    /// Largest `|real part|` seen; near zero for a faithful reconstruction.
    pub real_residual: f64,
}

fn to_u8(v: f64) -> u8 {
    if v.is_nan() {
        0
    } else {
        v.round().clamp(0.0, 255.0) as u8
    }
}

pub fn decode_dual_part(a_i: &QuaternionMatrix) -> DecodedImage {
    let mut real_residual: f64 = 0.0;
    let image = RgbImage::from_fn(a_i.cols() as u32, a_i.rows() as u32, |x, y| {
        let q = a_i[(y as usize, x as usize)];
        real_residual = real_residual.max(q.w.abs());
        [to_u8(q.x), to_u8(q.y), to_u8(q.z)]
    });
    DecodedImage { image, real_residual }
}

/// Inverse of [`encode_feature`].
pub fn decode_standard_part(a_s: &QuaternionMatrix) -> FeatureImage {
    let (h, w) = a_s.shape();
    let pick = |f: fn(&Quaternion) -> f64| -> Vec<f64> { a_s.as_slice().iter().map(f).collect() };
    FeatureImage::from_channels(w as u32, h as u32, [pick(|q| q.x), pick(|q| q.y), pick(|q| q.z)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::imaging::{fft_feature, FeatureParams};
    use crate::synth::noise_image;

    #[test]
    fn single_pixel_packing() {
        let f = FeatureImage::from_channels(1, 1, [vec![3.0], vec![4.0], vec![5.0]]);
        let w = RgbImage::filled(1, 1, [7, 8, 9]);
        let a = encode_pair(&f, &w).unwrap();
        assert_eq!(a.standard()[(0, 0)], Quaternion::pure(3.0, 4.0, 5.0));
        assert_eq!(a.dual()[(0, 0)], Quaternion::pure(7.0, 8.0, 9.0));
    }

    #[test]
    fn black_watermark_gives_zero_dual_part() {
        let f = fft_feature(&noise_image(4, 4, 1), &FeatureParams::default());
        let a = encode_pair(&f, &RgbImage::new(4, 4)).unwrap();
        assert_eq!(a.dual(), &QuaternionMatrix::zeros(4, 4));
    }

    #[test]
    fn round_trip_is_lossless() {
        let img = noise_image(7, 5, 9);
        let f = fft_feature(&noise_image(7, 5, 10), &FeatureParams::default());
        let a = encode_pair(&f, &img).unwrap();
        let d = decode_dual_part(a.dual());
        assert_eq!(d.image, img);
        assert_eq!(d.real_residual, 0.0);
        assert_eq!(decode_standard_part(a.standard()), f);
    }

    #[test]
    fn rounding_absorbs_small_perturbations() {
        let img = noise_image(6, 6, 4);
        let mut a = encode_image(&img);
        for (n, q) in a.as_mut_slice().iter_mut().enumerate() {
            let d = if n % 2 == 0 { 0.49 } else { -0.49 };
            *q += Quaternion::new(1e-3, d, -d, d * 0.5);
        }
        let d = decode_dual_part(&a);
        assert_eq!(d.image, img);
        assert!((d.real_residual - 1e-3).abs() < 1e-15);
    }

    #[test]
    fn mismatched_dims_are_rejected() {
        let f = fft_feature(&noise_image(4, 4, 1), &FeatureParams::default());
        assert!(matches!(
            encode_pair(&f, &RgbImage::new(4, 5)),
            Err(Error::DimensionMismatch(..))
        ));
    }
}
