//! Images, scrambling, frequency features, the color model, and metrics.

pub mod arnold;
pub mod feature;
pub mod image;
pub mod metrics;
pub mod model;

pub use arnold::{arnold_period, arnold_scramble, arnold_unscramble, ArnoldKey};
pub use feature::{fft_feature, spectrum, FeatureImage, FeatureParams};
pub use image::RgbImage;
pub use metrics::{ber, nc, psnr, ssim, MetricsReport, DEFAULT_BER_THRESHOLD};
pub use model::{decode_dual_part, decode_standard_part, encode_feature, encode_image, encode_pair, DecodedImage};
