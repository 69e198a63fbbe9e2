//! PSNR, SSIM, BER and NC on a few reference cases.

use dqzw::attacks::{apply_attack, AttackSpec};
use dqzw::imaging::{ber, nc, psnr, ssim, RgbImage};
use dqzw::synth::synthetic_watermark;

fn row(label: &str, a: &RgbImage, b: &RgbImage) -> dqzw::Result<()> {
    println!(
        "{label:<22} psnr {:>8.3}  ssim {:>7.4}  ber {:.4}  nc {:.4}",
        psnr(a, b)?,
        ssim(a, b)?,
        ber(a, b, 128)?,
        nc(a, b)?
    );
    Ok(())
}

fn main() -> dqzw::Result<()> {
    let wm = synthetic_watermark(64);
    row("identical", &wm, &wm)?;
    let plus1 = RgbImage::from_fn(64, 64, |x, y| wm.pixel(x, y).map(|v| v.saturating_add(1)));
    row("every channel +1", &wm, &plus1)?;
    row("gaussian 0.01", &wm, &apply_attack(&wm, &AttackSpec::gaussian(0.01, 1))?)?;
    row("jpeg q10", &wm, &apply_attack(&wm, &AttackSpec::jpeg(10))?)?;
    let inverted = RgbImage::from_fn(64, 64, |x, y| wm.pixel(x, y).map(|v| 255 - v));
    row("inverted", &wm, &inverted)?;
    Ok(())
}
