//! Watermark quality metrics: PSNR, SSIM, BER and NC.

use serde::{Deserialize, Serialize};

use super::image::RgbImage;
use crate::error::{Error, Result};

pub const DEFAULT_BER_THRESHOLD: u8 = 128;

const C1: f64 = (0.01 * 255.0) * (0.01 * 255.0);
const C2: f64 = (0.03 * 255.0) * (0.03 * 255.0);

/// Peak signal-to-noise ratio in dB over all three channels;
/// `f64::INFINITY` for identical images.
pub fn psnr(a: &RgbImage, b: &RgbImage) -> Result<f64> {
    a.check_same_dims(b)?;
    let sse: f64 = a
        .as_raw()
        .iter()
        .zip(b.as_raw())
        .map(|(x, y)| {
            let d = *x as f64 - *y as f64;
            d * d
        })
        .sum();
    if sse == 0.0 {
        return Ok(f64::INFINITY);
    }
    let peak = a.as_raw().len() as f64 * 255.0 * 255.0;
    Ok(10.0 * (peak / sse).log10())
}

fn ssim_plane(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut vx, mut vy, mut cov) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        vx += da * da;
        vy += db * db;
        cov += da * db;
    }
    vx /= n;
    vy /= n;
    cov /= n;
    ((2.0 * mx * my + C1) * (2.0 * cov + C2)) / ((mx * mx + my * my + C1) * (vx + vy + C2))
}

/// SSIM from global per-channel statistics, averaged over channels.
pub fn ssim(a: &RgbImage, b: &RgbImage) -> Result<f64> {
    a.check_same_dims(b)?;
    if a.as_raw().is_empty() {
        return Ok(1.0);
    }
    let total: f64 = (0..3)
        .map(|ch| ssim_plane(&a.channel_plane(ch), &b.channel_plane(ch)))
        .sum();
    Ok(total / 3.0)
}

/// Fraction of pixel-channels whose bit (`value >= threshold`) differs.
pub fn ber(a: &RgbImage, b: &RgbImage, threshold: u8) -> Result<f64> {
    a.check_same_dims(b)?;
    let n = a.as_raw().len();
    if n == 0 {
        return Ok(0.0);
    }
    let wrong = a
        .as_raw()
        .iter()
        .zip(b.as_raw())
        .filter(|(x, y)| (**x >= threshold) != (**y >= threshold))
        .count();
    Ok(wrong as f64 / n as f64)
}

/// Normalized correlation (cosine similarity of the raw pixel values).
pub fn nc(a: &RgbImage, b: &RgbImage) -> Result<f64> {
    a.check_same_dims(b)?;
    let (mut ab, mut aa, mut bb) = (0.0, 0.0, 0.0);
    for (x, y) in a.as_raw().iter().zip(b.as_raw()) {
        let (x, y) = (*x as f64, *y as f64);
        ab += x * y;
        aa += x * x;
        bb += y * y;
    }
    if aa == 0.0 || bb == 0.0 {
        return Err(Error::ZeroImage);
    }
    Ok(ab / (aa * bb).sqrt())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricsReport {
    #[serde(with = "inf_as_string")]
    pub psnr: f64,
    pub ssim: f64,
    pub ber: f64,
    pub nc: f64,
    pub authentic: bool,
}

impl MetricsReport {
    /// Scores `recovered` against `reference`; authentic when `ber <= tau`.
    ///
    /// An all-black recovery has no defined correlation and scores `nc = 0`.
    pub fn score(reference: &RgbImage, recovered: &RgbImage, tau: f64) -> Result<Self> {
        let ber = ber(reference, recovered, DEFAULT_BER_THRESHOLD)?;
        let nc = match nc(reference, recovered) {
            Ok(v) => v,
            Err(Error::ZeroImage) => {
                if reference.as_raw() == recovered.as_raw() {
                    1.0
                } else {
                    0.0
                }
            }
            Err(e) => return Err(e),
        };
        Ok(Self {
            psnr: psnr(reference, recovered)?,
            ssim: ssim(reference, recovered)?,
            ber,
            nc,
            authentic: ber <= tau,
        })
    }

    pub fn is_perfect(&self) -> bool {
        self.psnr == f64::INFINITY && self.ssim == 1.0 && self.ber == 0.0 && self.nc == 1.0
    }
}

/// Serializes `+inf` as the string `"inf"`.
pub mod inf_as_string {
    use serde::de::Error as _;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if *v == f64::INFINITY {
            s.serialize_str("inf")
        } else {
            s.serialize_f64(*v)
        }
    }

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Num(f64),
        Str(String),
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        match Repr::deserialize(d)? {
            Repr::Num(v) => Ok(v),
            Repr::Str(s) if s == "inf" => Ok(f64::INFINITY),
            Repr::Str(s) => Err(D::Error::custom(format!("expected a number or \"inf\", got {s:?}"))),
        }
    }
}
