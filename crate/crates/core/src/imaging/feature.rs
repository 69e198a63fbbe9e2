//! Frequency-domain feature image.
//!
//! Each channel goes through a 2-D DFT; the magnitude is log-compressed,
//! the zero frequency is moved to the center, and the result is stretched
//! affinely onto `[low, high]`.

use num_complex::Complex64;
use rustfft::FftPlanner;
use serde::{Deserialize, Serialize};

use super::image::RgbImage;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FeatureParams {
    /// Apply `log(1 + |F|)` before normalization.
    pub log_magnitude: bool,
    /// Move the zero frequency to `(w / 2, h / 2)`.
    pub center_shift: bool,
    pub low: f64,
    pub high: f64,
}

impl Default for FeatureParams {
    fn default() -> Self {
        Self {
            log_magnitude: true,
            center_shift: true,
            low: 1.0,
            high: 255.0,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct FeatureImage {
    width: u32,
    height: u32,
    channels: [Vec<f64>; 3],
}

impl FeatureImage {
    pub fn from_channels(width: u32, height: u32, channels: [Vec<f64>; 3]) -> Self {
        let len = width as usize * height as usize;
        assert!(channels.iter().all(|c| c.len() == len), "channel length");
        Self {
            width,
            height,
            channels,
        }
    }

    pub fn width(&self) -> u32 {
        self.width
    }

    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn dims(&self) -> (u32, u32) {
        (self.width, self.height)
    }

    #[inline]
    pub fn get(&self, x: u32, y: u32, ch: usize) -> f64 {
        self.channels[ch][y as usize * self.width as usize + x as usize]
    }

    pub fn channel(&self, ch: usize) -> &[f64] {
        &self.channels[ch]
    }
}

/// Unnormalized 2-D DFT of a row-major `width x height` plane.
pub fn spectrum(plane: &[f64], width: usize, height: usize) -> Vec<Complex64> {
    assert_eq!(plane.len(), width * height);
    let mut buf: Vec<Complex64> = plane.iter().map(|v| Complex64::new(*v, 0.0)).collect();
    let mut planner = FftPlanner::<f64>::new();
    if width > 0 {
        let row_fft = planner.plan_fft_forward(width);
        for row in buf.chunks_exact_mut(width) {
            row_fft.process(row);
        }
    }
    if height > 1 {
        let col_fft = planner.plan_fft_forward(height);
        let mut col = vec![Complex64::new(0.0, 0.0); height];
        for x in 0..width {
            for y in 0..height {
                col[y] = buf[y * width + x];
            }
            col_fft.process(&mut col);
            for y in 0..height {
                buf[y * width + x] = col[y];
            }
        }
    }
    buf
}

fn channel_feature(plane: &[f64], width: usize, height: usize, params: &FeatureParams) -> Vec<f64> {
    let spec = spectrum(plane, width, height);
    let mag = |c: &Complex64| {
        let m = c.norm();
        if params.log_magnitude {
            m.ln_1p()
        } else {
            m
        }
    };
    let mut out = vec![0.0; plane.len()];
    for y in 0..height {
        for x in 0..width {
            let (dx, dy) = if params.center_shift {
                ((x + width / 2) % width, (y + height / 2) % height)
            } else {
                (x, y)
            };
            out[dy * width + dx] = mag(&spec[y * width + x]);
        }
    }
    let (lo, hi) = out
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(*v), hi.max(*v)));
    let range = hi - lo;
    for v in out.iter_mut() {
        *v = if range > 0.0 {
            params.low + (*v - lo) / range * (params.high - params.low)
        } else {
            params.low
        };
    }
    out
}

pub fn fft_feature(img: &RgbImage, params: &FeatureParams) -> FeatureImage {
    let (w, h) = (img.width() as usize, img.height() as usize);
    let channels = [0, 1, 2].map(|ch| channel_feature(&img.channel_plane(ch), w, h, params));
    FeatureImage::from_channels(img.width(), img.height(), channels)
}
