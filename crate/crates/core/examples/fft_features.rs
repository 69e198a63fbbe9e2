//! Frequency-domain feature image of a carrier and its sensitivity to a
//! single-pixel change.

use dqzw::attacks::{apply_attack, AttackSpec};
use dqzw::imaging::{fft_feature, spectrum, FeatureParams, RgbImage};
use dqzw::synth::synthetic_carrier;

fn main() -> dqzw::Result<()> {
    let params = FeatureParams::default();
    let flat = fft_feature(&RgbImage::filled(8, 8, [100, 100, 100]), &params);
    println!("constant 8x8: center = {}, elsewhere = {}", flat.get(4, 4, 0), flat.get(0, 0, 0));

    let carrier = synthetic_carrier(64, 3);
    let plane = carrier.channel_plane(0);
    let f = spectrum(&plane, 64, 64);
    let energy_freq: f64 = f.iter().map(|c| c.norm_sqr()).sum();
    let energy_space: f64 = 64.0 * 64.0 * plane.iter().map(|v| v * v).sum::<f64>();
    println!("Parseval: {energy_freq:.6e} vs {energy_space:.6e}");

    let feat = fft_feature(&carrier, &params);
    let edited = apply_attack(&carrier, &AttackSpec::pixel_delta(10, 20, 0, 1))?;
    let feat2 = fft_feature(&edited, &params);
    let changed = feat
        .channel(0)
        .iter()
        .zip(feat2.channel(0))
        .filter(|(a, b)| a != b)
        .count();
    let max = feat
        .channel(0)
        .iter()
        .zip(feat2.channel(0))
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    println!("one +1 pixel edit changes {changed} of 4096 red features, max by {max:.3}");

    if let Some(dir) = std::env::args().nth(1) {
        let img = RgbImage::from_fn(64, 64, |x, y| [0, 1, 2].map(|c| feat.get(x, y, c).round() as u8));
        img.save_png(format!("{dir}/feature.png"))?;
        println!("wrote {dir}/feature.png");
    }
    Ok(())
}
