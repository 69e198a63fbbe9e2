//! JSON key file: everything verification needs besides the payload.

use std::path::Path;

use serde::{Deserialize, Serialize};

use super::method::Method;
use crate::error::{Error, Result};
use crate::imaging::{ArnoldKey, FeatureParams};
use crate::quat::{Quaternion, QuaternionMatrix};

pub const KEY_VERSION: u32 = 1;

/// Quaternion matrix as `[w, x, y, z]` rows in row-major order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixComponents {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<[f64; 4]>,
}

impl From<&QuaternionMatrix> for MatrixComponents {
    fn from(m: &QuaternionMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            data: m.as_slice().iter().map(|q| q.components()).collect(),
        }
    }
}

impl TryFrom<&MatrixComponents> for QuaternionMatrix {
    type Error = Error;

    fn try_from(m: &MatrixComponents) -> Result<Self> {
        if m.data.len() != m.rows * m.cols {
            return Err(Error::BadKey(format!(
                "matrix claims {}x{} but holds {} entries",
                m.rows,
                m.cols,
                m.data.len()
            )));
        }
        Ok(QuaternionMatrix::from_vec(
            m.rows,
            m.cols,
            m.data.iter().map(|c| Quaternion::from_components(*c)).collect(),
        ))
    }
}

/// How inputs were brought to the working size.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResizeRecord {
    /// Carrier resized (bicubic) to this square side before feature
    /// extraction. Suspects are resized the same way.
    pub carrier_side: Option<u32>,
    /// Watermark was resized (bicubic) to the carrier dimensions.
    pub watermark_resized: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KeyFile {
    pub version: u32,
    pub method: Method,
    pub arnold: ArnoldKey,
    pub feature: FeatureParams,
    /// `(width, height)` of the carrier as supplied.
    pub carrier_dims: (u32, u32),
    /// `(width, height)` of the watermark as supplied.
    pub watermark_dims: (u32, u32),
    pub resize: ResizeRecord,
    /// Trailing-block rotations from a rank-deficient DQSVD; absent means
    /// full rank (identity).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w1: Option<MatrixComponents>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w2: Option<MatrixComponents>,
}

impl KeyFile {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let key: KeyFile = serde_json::from_str(text)?;
        if key.version != KEY_VERSION {
            return Err(Error::BadKey(format!(
                "unsupported key version {}, expected {KEY_VERSION}",
                key.version
            )));
        }
        key.arnold.validate()?;
        Ok(key)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_json()?)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// `(W1, W2)`, with `0x0` identities for a full-rank factorization.
    pub fn svd_keys(&self) -> Result<(QuaternionMatrix, QuaternionMatrix)> {
        let get = |m: &Option<MatrixComponents>| match m {
            Some(m) => QuaternionMatrix::try_from(m),
            None => Ok(QuaternionMatrix::identity(0)),
        };
        Ok((get(&self.w1)?, get(&self.w2)?))
    }
}
