//! Generalized Arnold (cat map) scrambling on an `N x N` grid.
//!
//! Pixel `(x, y)` moves to `M (x, y)^T mod N` with `M = [[a, b], [c, d]]`,
//! `ad - bc = ±1`. Unimodularity makes the map a bijection and gives it a
//! finite period.

use serde::{Deserialize, Serialize};

use super::image::RgbImage;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArnoldKey {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    pub iterations: u32,
    /// Side length of the grid.
    pub n: u32,
}

impl ArnoldKey {
    /// Classic cat map `[[1, 1], [1, 2]]`, 10 iterations.
    pub fn classic(n: u32) -> Self {
        Self {
            a: 1,
            b: 1,
            c: 1,
            d: 2,
            iterations: 10,
            n,
        }
    }

    pub fn with_iterations(mut self, k: u32) -> Self {
        self.iterations = k;
        self
    }

    pub fn determinant(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn validate(&self) -> Result<()> {
        let det = self.determinant();
        if det.abs() != 1 {
            return Err(Error::BadKey(format!("ad - bc = {det}, expected ±1")));
        }
        if self.n == 0 {
            return Err(Error::BadKey("grid size must be positive".into()));
        }
        Ok(())
    }

    /// Integer inverse matrix; exact because the determinant is ±1.
    fn inverse_matrix(&self) -> [i64; 4] {
        let det = self.determinant();
        [det * self.d, -det * self.b, -det * self.c, det * self.a]
    }

    fn forward_matrix(&self) -> [i64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// Destination index of every source pixel under `m^k mod n`.
fn permutation(m: [i64; 4], n: u32, k: u32) -> Vec<usize> {
    let n64 = n as i64;
    let mut p = mat_pow_mod(m, k, n64);
    for v in p.iter_mut() {
        *v = v.rem_euclid(n64);
    }
    let mut dest = Vec::with_capacity(n as usize * n as usize);
    for y in 0..n64 {
        for x in 0..n64 {
            let nx = (p[0] * x + p[1] * y).rem_euclid(n64);
            let ny = (p[2] * x + p[3] * y).rem_euclid(n64);
            dest.push((ny * n64 + nx) as usize);
        }
    }
    dest
}

fn mat_mul_mod(a: [i64; 4], b: [i64; 4], n: i64) -> [i64; 4] {
    [
        (a[0] * b[0] + a[1] * b[2]).rem_euclid(n),
        (a[0] * b[1] + a[1] * b[3]).rem_euclid(n),
        (a[2] * b[0] + a[3] * b[2]).rem_euclid(n),
        (a[2] * b[1] + a[3] * b[3]).rem_euclid(n),
    ]
}

fn mat_pow_mod(m: [i64; 4], mut k: u32, n: i64) -> [i64; 4] {
    let mut base = m.map(|v| v.rem_euclid(n));
    let mut acc = [1 % n, 0, 0, 1 % n];
    while k > 0 {
        if k & 1 == 1 {
            acc = mat_mul_mod(acc, base, n);
        }
        base = mat_mul_mod(base, base, n);
        k >>= 1;
    }
    acc
}

fn apply(img: &RgbImage, key: &ArnoldKey, m: [i64; 4]) -> Result<RgbImage> {
    key.validate()?;
    if !img.is_square() {
        return Err(Error::NotSquare {
            width: img.width(),
            height: img.height(),
        });
    }
    if img.width() != key.n {
        return Err(Error::BadKey(format!(
            "key is for {0}x{0}, image is {1}x{1}",
            key.n,
            img.width()
        )));
    }
    let dest = permutation(m, key.n, key.iterations);
    let src = img.as_raw();
    let mut out = RgbImage::new(img.width(), img.height());
    let raw = out.as_raw_mut();
    for (s, d) in dest.iter().enumerate() {
        raw[d * 3..d * 3 + 3].copy_from_slice(&src[s * 3..s * 3 + 3]);
    }
    Ok(out)
}

pub fn arnold_scramble(img: &RgbImage, key: &ArnoldKey) -> Result<RgbImage> {
    apply(img, key, key.forward_matrix())
}

pub fn arnold_unscramble(img: &RgbImage, key: &ArnoldKey) -> Result<RgbImage> {
    apply(img, key, key.inverse_matrix())
}

/// Smallest `k >= 1` with `M^k = I (mod n)`.
pub fn arnold_period(key: &ArnoldKey) -> Result<u64> {
    key.validate()?;
    let n = key.n as i64;
    let id = [1 % n, 0, 0, 1 % n];
    let m = key.forward_matrix().map(|v| v.rem_euclid(n));
    let mut acc = m;
    let mut k = 1u64;
    // The period of a unimodular map mod n never exceeds 3n.
    while acc != id {
        acc = mat_mul_mod(acc, m, n);
        k += 1;
        if k > 6 * n as u64 + 6 {
            return Err(Error::BadKey("period search did not terminate".into()));
        }
    }
    Ok(k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::synth::noise_image;
    use proptest::prelude::*;

    /// Pixel-level iteration of the map, independent of the matrix-power
    /// shortcut used by the implementation.
    fn brute_force_period(n: u32) -> u64 {
        let idx = |x: i64, y: i64| (y * n as i64 + x) as usize;
        let start: Vec<usize> = (0..(n * n) as usize).collect();
        let mut cur = start.clone();
        let mut k = 0;
        loop {
            let mut next = vec![0; cur.len()];
            for y in 0..n as i64 {
                for x in 0..n as i64 {
                    let nx = (x + y).rem_euclid(n as i64);
                    let ny = (x + 2 * y).rem_euclid(n as i64);
                    next[idx(nx, ny)] = cur[idx(x, y)];
                }
            }
            cur = next;
            k += 1;
            if cur == start {
                return k;
            }
        }
    }

    #[test]
    fn zero_iterations_is_identity() {
        let img = noise_image(8, 8, 1);
        let key = ArnoldKey::classic(8).with_iterations(0);
        assert_eq!(arnold_scramble(&img, &key).unwrap(), img);
        assert_eq!(arnold_unscramble(&img, &key).unwrap(), img);
    }

    #[test]
    fn origin_is_fixed() {
        let img = noise_image(7, 7, 2);
        for k in [1, 3, 9] {
            let s = arnold_scramble(&img, &ArnoldKey::classic(7).with_iterations(k)).unwrap();
            assert_eq!(s.pixel(0, 0), img.pixel(0, 0));
        }
    }

    #[test]
    fn period_matches_brute_force() {
        for n in [3u32, 4, 5, 8, 10] {
            let expected = brute_force_period(n);
            assert_eq!(arnold_period(&ArnoldKey::classic(n)).unwrap(), expected, "n={n}");
            let img = noise_image(n, n, n as u64);
            let key = ArnoldKey::classic(n).with_iterations(expected as u32);
            assert_eq!(arnold_scramble(&img, &key).unwrap(), img);
        }
        assert_eq!(brute_force_period(3), 4);
    }

    #[test]
    fn round_trip_8x8_k5() {
        let img = noise_image(8, 8, 3);
        let key = ArnoldKey::classic(8).with_iterations(5);
        let s = arnold_scramble(&img, &key).unwrap();
        assert_ne!(s, img);
        assert_eq!(arnold_unscramble(&s, &key).unwrap(), img);
    }

    #[test]
    fn rejects_bad_inputs() {
        let img = noise_image(4, 4, 0);
        let mut key = ArnoldKey::classic(4);
        key.d = 3;
        assert!(matches!(arnold_scramble(&img, &key), Err(Error::BadKey(_))));
        let rect = noise_image(4, 3, 0);
        assert!(matches!(
            arnold_scramble(&rect, &ArnoldKey::classic(4)),
            Err(Error::NotSquare { .. })
        ));
    }

    proptest! {
        #[test]
        fn round_trip_for_random_unimodular_keys(
            a in -5i64..6, b in -5i64..6, k in 0u32..40, n in 2u32..12, seed in any::<u64>(), flip in any::<bool>()
        ) {
            // Build a unimodular matrix from a product of shears.
            let (a2, b2, c2, d2) = (1, a, b, 1 + a * b);
            let (c2, d2) = if flip { (-c2, -d2) } else { (c2, d2) };
            let key = ArnoldKey { a: a2, b: b2, c: c2, d: d2, iterations: k, n };
            prop_assert_eq!(key.determinant().abs(), 1);
            let img = noise_image(n, n, seed);
            let s = arnold_scramble(&img, &key).unwrap();
            let mut before = img.as_raw().to_vec();
            let mut after = s.as_raw().to_vec();
            before.sort_unstable();
            after.sort_unstable();
            prop_assert_eq!(before, after);
            prop_assert_eq!(arnold_unscramble(&s, &key).unwrap(), img);
        }
    }
}
