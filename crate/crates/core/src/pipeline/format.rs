//! Binary zero-watermark files.
//!
//! Layout, little-endian throughout:
//!
//! ```text
//! "DQZW"  version:u8  method:u8  rows:u32  cols:u32  blocks:u8
//! per block: tag:u8  rows:u32  cols:u32  rows*cols entries
//! ```
//!
//! Matrix entries are four `f64` components (`w, x, y, z`); the singular
//! value block stores one `f64` per entry with `cols = 1`.

use std::path::Path;

use super::method::Method;
use crate::error::{Error, Result};
use crate::quat::{Quaternion, QuaternionMatrix};

pub const MAGIC: &[u8; 4] = b"DQZW";
pub const FORMAT_VERSION: u8 = 1;

const TAG_L: u8 = b'L';
const TAG_U: u8 = b'U';
const TAG_Q: u8 = b'Q';
const TAG_R: u8 = b'R';
const TAG_SVD_U: u8 = b'u';
const TAG_SIGMA: u8 = b's';
const TAG_SVD_V: u8 = b'v';

/// Dual parts of the factors of the carrier/watermark matrix.
#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Lu {
        l_i: QuaternionMatrix,
        u_i: QuaternionMatrix,
    },
    Qr {
        q_i: QuaternionMatrix,
        r_i: QuaternionMatrix,
    },
    Svd {
        u_i: QuaternionMatrix,
        sigma_i: Vec<f64>,
        v_i: QuaternionMatrix,
    },
}

impl Payload {
    pub fn method(&self) -> Method {
        match self {
            Payload::Lu { .. } => Method::Lu,
            Payload::Qr { .. } => Method::Qr,
            Payload::Svd { .. } => Method::Svd,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ZeroWatermark {
    pub rows: u32,
    pub cols: u32,
    pub payload: Payload,
}

impl ZeroWatermark {
    pub fn method(&self) -> Method {
        self.payload.method()
    }

    /// Checks factor shapes against `rows x cols`.
    pub fn validate(&self) -> Result<()> {
        let (m, n) = (self.rows as usize, self.cols as usize);
        let check = |name: &str, got: (usize, usize), want: (usize, usize)| {
            if got == want {
                Ok(())
            } else {
                Err(Error::Format {
                    offset: 0,
                    msg: format!("factor {name} is {got:?}, expected {want:?}"),
                })
            }
        };
        match &self.payload {
            Payload::Lu { l_i, u_i } => {
                check("L_i", l_i.shape(), (m, m))?;
                check("U_i", u_i.shape(), (m, n))
            }
            Payload::Qr { q_i, r_i } => {
                check("Q_i", q_i.shape(), (m, m))?;
                check("R_i", r_i.shape(), (m, n))
            }
            Payload::Svd { u_i, sigma_i, v_i } => {
                check("U_i", u_i.shape(), (m, m))?;
                check("V_i", v_i.shape(), (n, n))?;
                check("sigma_i", (sigma_i.len(), 1), (m.min(n), 1))
            }
        }
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(MAGIC);
        out.push(FORMAT_VERSION);
        out.push(self.method().tag());
        out.extend_from_slice(&self.rows.to_le_bytes());
        out.extend_from_slice(&self.cols.to_le_bytes());
        match &self.payload {
            Payload::Lu { l_i, u_i } => {
                out.push(2);
                put_matrix(&mut out, TAG_L, l_i);
                put_matrix(&mut out, TAG_U, u_i);
            }
            Payload::Qr { q_i, r_i } => {
                out.push(2);
                put_matrix(&mut out, TAG_Q, q_i);
                put_matrix(&mut out, TAG_R, r_i);
            }
            Payload::Svd { u_i, sigma_i, v_i } => {
                out.push(3);
                put_matrix(&mut out, TAG_SVD_U, u_i);
                put_reals(&mut out, TAG_SIGMA, sigma_i);
                put_matrix(&mut out, TAG_SVD_V, v_i);
            }
        }
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self> {
        let mut r = Reader { bytes, pos: 0 };
        let magic = r.take(4)?;
        if magic != MAGIC {
            return Err(r.error_at(0, format!("bad magic {magic:?}, expected \"DQZW\"")));
        }
        let version = r.u8()?;
        if version != FORMAT_VERSION {
            return Err(r.error_at(4, format!("unsupported version {version}, expected {FORMAT_VERSION}")));
        }
        let tag = r.u8()?;
        let method = Method::from_tag(tag).ok_or_else(|| r.error_at(5, format!("unknown method tag {tag}")))?;
        let rows = r.u32()?;
        let cols = r.u32()?;
        let count = r.u8()?;
        let expected: &[u8] = match method {
            Method::Lu => &[TAG_L, TAG_U],
            Method::Qr => &[TAG_Q, TAG_R],
            Method::Svd => &[TAG_SVD_U, TAG_SIGMA, TAG_SVD_V],
        };
        if count as usize != expected.len() {
            return Err(r.error_at(r.pos - 1, format!("expected {} factor blocks, found {count}", expected.len())));
        }
        let mut mats = Vec::new();
        let mut reals = Vec::new();
        for want in expected {
            let at = r.pos;
            let tag = r.u8()?;
            if tag != *want {
                return Err(r.error_at(at, format!("expected factor tag {:?}, found {:?}", *want as char, tag as char)));
            }
            if tag == TAG_SIGMA {
                reals = r.reals()?;
            } else {
                mats.push(r.matrix()?);
            }
        }
        if r.pos != bytes.len() {
            return Err(r.error_at(r.pos, format!("{} trailing bytes", bytes.len() - r.pos)));
        }
        let mut mats = mats.into_iter();
        let mut next = || mats.next().expect("block count checked");
        let payload = match method {
            Method::Lu => Payload::Lu { l_i: next(), u_i: next() },
            Method::Qr => Payload::Qr { q_i: next(), r_i: next() },
            Method::Svd => Payload::Svd {
                u_i: next(),
                sigma_i: reals,
                v_i: next(),
            },
        };
        let zw = ZeroWatermark { rows, cols, payload };
        zw.validate()?;
        Ok(zw)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_bytes())?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_bytes(&std::fs::read(path)?)
    }
}

fn put_dims(out: &mut Vec<u8>, tag: u8, rows: usize, cols: usize) {
    out.push(tag);
    out.extend_from_slice(&(rows as u32).to_le_bytes());
    out.extend_from_slice(&(cols as u32).to_le_bytes());
}

fn put_matrix(out: &mut Vec<u8>, tag: u8, m: &QuaternionMatrix) {
    put_dims(out, tag, m.rows(), m.cols());
    for q in m.as_slice() {
        for c in q.components() {
            out.extend_from_slice(&c.to_le_bytes());
        }
    }
}

fn put_reals(out: &mut Vec<u8>, tag: u8, v: &[f64]) {
    put_dims(out, tag, v.len(), 1);
    for c in v {
        out.extend_from_slice(&c.to_le_bytes());
    }
}

struct Reader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Reader<'a> {
    fn error_at(&self, offset: usize, msg: String) -> Error {
        Error::Format { offset, msg }
    }

    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(n).filter(|e| *e <= self.bytes.len());
        match end {
            Some(end) => {
                let s = &self.bytes[self.pos..end];
                self.pos = end;
                Ok(s)
            }
            None => Err(self.error_at(
                self.pos,
                format!("truncated: need {n} bytes, {} left", self.bytes.len() - self.pos),
            )),
        }
    }

    fn u8(&mut self) -> Result<u8> {
        Ok(self.take(1)?[0])
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.take(4)?.try_into().expect("4 bytes")))
    }

    fn f64(&mut self) -> Result<f64> {
        Ok(f64::from_le_bytes(self.take(8)?.try_into().expect("8 bytes")))
    }

    fn dims(&mut self) -> Result<(usize, usize)> {
        let (r, c) = (self.u32()? as usize, self.u32()? as usize);
        let left = self.bytes.len() - self.pos;
        // Reject sizes that cannot fit before allocating.
        if r.saturating_mul(c) > left / 8 {
            return Err(self.error_at(self.pos, format!("truncated: block {r}x{c} exceeds remaining {left} bytes")));
        }
        Ok((r, c))
    }

    fn matrix(&mut self) -> Result<QuaternionMatrix> {
        let (rows, cols) = self.dims()?;
        let mut data = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            data.push(Quaternion::from_components([self.f64()?, self.f64()?, self.f64()?, self.f64()?]));
        }
        Ok(QuaternionMatrix::from_vec(rows, cols, data))
    }

    fn reals(&mut self) -> Result<Vec<f64>> {
        let at = self.pos;
        let (rows, cols) = self.dims()?;
        if cols != 1 {
            return Err(self.error_at(at, format!("singular value block must be a column, got {rows}x{cols}")));
        }
        (0..rows).map(|_| self.f64()).collect()
    }
}
