//! Seedable image attacks for fragility testing.

use std::fmt;
use std::io::Cursor;
use std::path::Path;

use image::codecs::jpeg::JpegEncoder;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::imaging::RgbImage;
use crate::synth::rng;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AttackSpec {
    /// No-op; the reference row of an experiment.
    Identity,
    /// Additive `N(0, variance)` noise on the `[0, 1]` intensity scale.
    GaussianNoise {
        #[serde(default = "default_variance")]
        variance: f64,
        #[serde(default)]
        seed: u64,
    },
    JpegCompress {
        #[serde(default = "default_quality")]
        quality: u8,
    },
    /// Counterclockwise rotation about the center, bilinear, black fill.
    Rotate {
        #[serde(default = "default_angle")]
        degrees: f64,
    },
    /// Zeroes the central rectangle covering `fraction` of the area.
    CenterCrop {
        #[serde(default = "default_crop")]
        fraction: f64,
    },
    Brighten {
        #[serde(default = "default_brightness")]
        delta: i32,
    },
    /// Sets one pixel-channel to `value`, or shifts it by `delta` when no
    /// value is given. A shift that would leave `[0, 255]` goes the other way.
    PixelEdit {
        #[serde(default)]
        x: u32,
        #[serde(default)]
        y: u32,
        #[serde(default)]
        channel: usize,
        #[serde(default)]
        value: Option<u8>,
        #[serde(default = "default_delta")]
        delta: i32,
    },
}

fn default_variance() -> f64 {
    0.01
}
fn default_quality() -> u8 {
    10
}
fn default_angle() -> f64 {
    3.0
}
fn default_crop() -> f64 {
    0.25
}
fn default_brightness() -> i32 {
    30
}
fn default_delta() -> i32 {
    1
}

impl AttackSpec {
    pub fn gaussian(variance: f64, seed: u64) -> Self {
        Self::GaussianNoise { variance, seed }
    }

    pub fn jpeg(quality: u8) -> Self {
        Self::JpegCompress { quality }
    }

    pub fn rotate(degrees: f64) -> Self {
        Self::Rotate { degrees }
    }

    pub fn center_crop(fraction: f64) -> Self {
        Self::CenterCrop { fraction }
    }

    pub fn brighten(delta: i32) -> Self {
        Self::Brighten { delta }
    }

    pub fn pixel_delta(x: u32, y: u32, channel: usize, delta: i32) -> Self {
        Self::PixelEdit {
            x,
            y,
            channel,
            value: None,
            delta,
        }
    }

    pub fn pixel_set(x: u32, y: u32, channel: usize, value: u8) -> Self {
        Self::PixelEdit {
            x,
            y,
            channel,
            value: Some(value),
            delta: 0,
        }
    }

    /// Short label used in reports.
    pub fn name(&self) -> String {
        match self {
            Self::Identity => "identity".into(),
            Self::GaussianNoise { variance, .. } => format!("gaussian({variance})"),
            Self::JpegCompress { quality } => format!("jpeg(q={quality})"),
            Self::Rotate { degrees } => format!("rotate({degrees}deg)"),
            Self::CenterCrop { fraction } => format!("crop({fraction})"),
            Self::Brighten { delta } => format!("brighten({delta:+})"),
            Self::PixelEdit {
                x, y, channel, value, delta,
            } => match value {
                Some(v) => format!("pixel({x},{y},{channel}={v})"),
                None => format!("pixel({x},{y},{channel}{delta:+})"),
            },
        }
    }
}

impl fmt::Display for AttackSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

/// The six attacks with their default parameters. The pixel edit targets the
/// image center.
pub fn default_suite(width: u32, height: u32, seed: u64) -> Vec<AttackSpec> {
    vec![
        AttackSpec::gaussian(0.01, seed),
        AttackSpec::jpeg(10),
        AttackSpec::rotate(3.0),
        AttackSpec::center_crop(0.25),
        AttackSpec::brighten(30),
        AttackSpec::pixel_delta(width / 2, height / 2, 0, 1),
    ]
}

/// Reads a JSON array of attack specs.
pub fn load_suite(path: impl AsRef<Path>) -> Result<Vec<AttackSpec>> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn apply_attack(img: &RgbImage, spec: &AttackSpec) -> Result<RgbImage> {
    match *spec {
        AttackSpec::Identity => Ok(img.clone()),
        AttackSpec::GaussianNoise { variance, seed } => gaussian_noise(img, variance, seed),
        AttackSpec::JpegCompress { quality } => jpeg_compress(img, quality),
        AttackSpec::Rotate { degrees } => rotate(img, degrees),
        AttackSpec::CenterCrop { fraction } => center_crop(img, fraction),
        AttackSpec::Brighten { delta } => Ok(brighten(img, delta)),
        AttackSpec::PixelEdit {
            x, y, channel, value, delta,
        } => pixel_edit(img, x, y, channel, value, delta),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParameters(msg.into())
}

fn gaussian_noise(img: &RgbImage, variance: f64, seed: u64) -> Result<RgbImage> {
    if !variance.is_finite() || variance < 0.0 {
        return Err(bad(format!("variance must be finite and >= 0, got {variance}")));
    }
    if variance == 0.0 {
        return Ok(img.clone());
    }
    let normal = Normal::new(0.0, variance.sqrt()).map_err(|e| bad(e.to_string()))?;
    let mut r = rng(seed);
    let mut out = img.clone();
    for v in out.as_raw_mut() {
        let f = (*v as f64 / 255.0 + normal.sample(&mut r)).clamp(0.0, 1.0);
        *v = (f * 255.0).round() as u8;
    }
    Ok(out)
}

fn jpeg_compress(img: &RgbImage, quality: u8) -> Result<RgbImage> {
    if !(1..=100).contains(&quality) {
        return Err(bad(format!("JPEG quality must be in 1..=100, got {quality}")));
    }
    let mut buf = Vec::new();
    JpegEncoder::new_with_quality(&mut buf, quality).encode_image(&img.to_image_buffer())?;
    let decoded = image::load(Cursor::new(buf), image::ImageFormat::Jpeg)?.to_rgb8();
    Ok(decoded.into())
}

fn rotate(img: &RgbImage, degrees: f64) -> Result<RgbImage> {
    if !degrees.is_finite() {
        return Err(bad("rotation angle must be finite"));
    }
    let (w, h) = img.dims();
    let (sin, cos) = degrees.to_radians().sin_cos();
    let (cx, cy) = ((w as f64 - 1.0) / 2.0, (h as f64 - 1.0) / 2.0);
    let (wmax, hmax) = (w as f64 - 1.0, h as f64 - 1.0);
    Ok(RgbImage::from_fn(w, h, |x, y| {
        // Rows grow downward, so a visual counterclockwise turn maps each
        // output pixel back through the opposite sign on the y axis.
        let (dx, dy) = (x as f64 - cx, y as f64 - cy);
        let sx = cx + dx * cos - dy * sin;
        let sy = cy + dx * sin + dy * cos;
        if sx < -1e-9 || sy < -1e-9 || sx > wmax + 1e-9 || sy > hmax + 1e-9 {
            return [0; 3];
        }
        let (sx, sy) = (sx.clamp(0.0, wmax), sy.clamp(0.0, hmax));
        let (x0, y0) = (sx.floor() as u32, sy.floor() as u32);
        let (x1, y1) = ((x0 + 1).min(w - 1), (y0 + 1).min(h - 1));
        let (fx, fy) = (sx - x0 as f64, sy - y0 as f64);
        let mut px = [0u8; 3];
        for (ch, out) in px.iter_mut().enumerate() {
            let p = |xx, yy| img.channel(xx, yy, ch) as f64;
            let top = p(x0, y0) * (1.0 - fx) + p(x1, y0) * fx;
            let bottom = p(x0, y1) * (1.0 - fx) + p(x1, y1) * fx;
            *out = (top * (1.0 - fy) + bottom * fy).round().clamp(0.0, 255.0) as u8;
        }
        px
    }))
}

fn center_crop(img: &RgbImage, fraction: f64) -> Result<RgbImage> {
    if !(fraction > 0.0 && fraction < 1.0) {
        return Err(bad(format!("crop fraction must be in (0, 1), got {fraction}")));
    }
    let (w, h) = img.dims();
    let side = fraction.sqrt();
    let cw = ((w as f64 * side).round() as u32).min(w);
    let ch = ((h as f64 * side).round() as u32).min(h);
    let (x0, y0) = ((w - cw) / 2, (h - ch) / 2);
    let mut out = img.clone();
    for y in y0..y0 + ch {
        for x in x0..x0 + cw {
            out.put_pixel(x, y, [0; 3]);
        }
    }
    Ok(out)
}

fn brighten(img: &RgbImage, delta: i32) -> RgbImage {
    let mut out = img.clone();
    for v in out.as_raw_mut() {
        *v = (*v as i32 + delta).clamp(0, 255) as u8;
    }
    out
}

fn pixel_edit(img: &RgbImage, x: u32, y: u32, channel: usize, value: Option<u8>, delta: i32) -> Result<RgbImage> {
    if x >= img.width() || y >= img.height() || channel > 2 {
        return Err(bad(format!(
            "pixel ({x}, {y}) channel {channel} outside a {}x{} RGB image",
            img.width(),
            img.height()
        )));
    }
    let old = img.channel(x, y, channel) as i32;
    let new = match value {
        Some(v) => v as i32,
        None => {
            let up = old + delta;
            if (0..=255).contains(&up) {
                up
            } else {
                old - delta
            }
        }
    };
    if !(0..=255).contains(&new) {
        return Err(bad(format!("edit delta {delta} does not fit channel value {old}")));
    }
    let mut out = img.clone();
    out.set_channel(x, y, channel, new as u8);
    Ok(out)
}
