//! 8-bit RGB raster used throughout the pipeline.

use std::path::Path;

use image::imageops::FilterType;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RgbImage {
    width: u32,
    height: u32,
    /// Row-major, interleaved RGB.
    data: Vec<u8>,
}

impl RgbImage {
    pub fn new(width: u32, height: u32) -> Self {
        Self {
            width,
            height,
            data: vec![0; width as usize * height as usize * 3],
        }
    }

    pub fn from_raw(width: u32, height: u32, data: Vec<u8>) -> Result<Self> {
        if data.len() != width as usize * height as usize * 3 {
            return Err(Error::Format {
                offset: data.len(),
                msg: format!("expected {} bytes for {width}x{height} RGB", width as usize * height as usize * 3),
            });
        }
        Ok(Self { width, height, data })
    }

    pub fn from_fn(width: u32, height: u32, mut f: impl FnMut(u32, u32) -> [u8; 3]) -> Self {
        let mut data = Vec::with_capacity(width as usize * height as usize * 3);
        for y in 0..height {
            for x in 0..width {
                data.extend_from_slice(&f(x, y));
            }
        }
        Self { width, height, data }
    }

    pub fn filled(width: u32, height: u32, px: [u8; 3]) -> Self {
        Self::from_fn(width, height, |_, _| px)
    }

    #[inline]
    pub fn width(&self) -> u32 {
        self.width
    }

    #[inline]
    pub fn height(&self) -> u32 {
        self.height
    }

    pub fn dims(&self) -> (u32, u32) {
        (self.width, self.height)
    }

    pub fn is_square(&self) -> bool {
        self.width == self.height
    }

    #[inline]
    fn offset(&self, x: u32, y: u32) -> usize {
        (y as usize * self.width as usize + x as usize) * 3
    }

    #[inline]
    pub fn pixel(&self, x: u32, y: u32) -> [u8; 3] {
        let o = self.offset(x, y);
        [self.data[o], self.data[o + 1], self.data[o + 2]]
    }

    #[inline]
    pub fn put_pixel(&mut self, x: u32, y: u32, px: [u8; 3]) {
        let o = self.offset(x, y);
        self.data[o..o + 3].copy_from_slice(&px);
    }

    #[inline]
    pub fn channel(&self, x: u32, y: u32, ch: usize) -> u8 {
        self.data[self.offset(x, y) + ch]
    }

    #[inline]
    pub fn set_channel(&mut self, x: u32, y: u32, ch: usize, v: u8) {
        let o = self.offset(x, y) + ch;
        self.data[o] = v;
    }

    pub fn as_raw(&self) -> &[u8] {
        &self.data
    }

    pub fn as_raw_mut(&mut self) -> &mut [u8] {
        &mut self.data
    }

    /// One channel as row-major `f64`.
    pub fn channel_plane(&self, ch: usize) -> Vec<f64> {
        self.data.iter().skip(ch).step_by(3).map(|v| *v as f64).collect()
    }

    pub fn check_same_dims(&self, other: &Self) -> Result<()> {
        if self.dims() != other.dims() {
            return Err(Error::DimensionMismatch(self.dims(), other.dims()));
        }
        Ok(())
    }

    /// Loads PNG or BMP (or anything else the codec stack recognizes).
    /// Grayscale and alpha inputs are converted to plain RGB.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let img = image::open(path)?.to_rgb8();
        Ok(img.into())
    }

    /// Writes a PNG.
    pub fn save_png(&self, path: impl AsRef<Path>) -> Result<()> {
        let buf = self.to_image_buffer();
        buf.save_with_format(path, image::ImageFormat::Png)?;
        Ok(())
    }

    pub fn to_image_buffer(&self) -> image::RgbImage {
        image::RgbImage::from_raw(self.width, self.height, self.data.clone())
            .expect("buffer length matches dimensions")
    }

    /// Bicubic (Catmull-Rom) resize.
    pub fn resize_bicubic(&self, width: u32, height: u32) -> Self {
        if self.dims() == (width, height) {
            return self.clone();
        }
        image::imageops::resize(&self.to_image_buffer(), width, height, FilterType::CatmullRom).into()
    }
}

impl From<image::RgbImage> for RgbImage {
    fn from(img: image::RgbImage) -> Self {
        let (width, height) = img.dimensions();
        Self {
            width,
            height,
            data: img.into_raw(),
        }
    }
}
