//! Arnold scrambling of a watermark: periods, round trips, and custom keys.

use dqzw::imaging::{arnold_period, arnold_scramble, arnold_unscramble, ArnoldKey};
use dqzw::synth::synthetic_watermark;

fn main() -> dqzw::Result<()> {
    for n in [3, 8, 32, 64, 128] {
        println!("classic cat map period for N = {n}: {}", arnold_period(&ArnoldKey::classic(n))?);
    }

    let wm = synthetic_watermark(64);
    let key = ArnoldKey::classic(64);
    let scrambled = arnold_scramble(&wm, &key)?;
    let restored = arnold_unscramble(&scrambled, &key)?;
    println!("k = {}: round trip exact = {}", key.iterations, restored == wm);

    // Iterating a full period is the identity.
    let full = key.with_iterations(arnold_period(&key)? as u32);
    println!("k = period: scramble is identity = {}", arnold_scramble(&wm, &full)? == wm);

    let custom = ArnoldKey { a: 2, b: 1, c: 1, d: 1, iterations: 7, n: 64 };
    let s = arnold_scramble(&wm, &custom)?;
    println!("[[2,1],[1,1]] x7: round trip exact = {}", arnold_unscramble(&s, &custom)? == wm);

    let bad = ArnoldKey { a: 2, b: 0, c: 0, d: 1, iterations: 1, n: 64 };
    println!("det 2 key: {}", arnold_scramble(&wm, &bad).unwrap_err());

    if let Some(dir) = std::env::args().nth(1) {
        scrambled.save_png(format!("{dir}/scrambled.png"))?;
        println!("wrote {dir}/scrambled.png");
    }
    Ok(())
}
