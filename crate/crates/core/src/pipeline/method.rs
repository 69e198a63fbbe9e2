use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, Error};

/// Which dual-quaternion factorization produces the zero-watermark.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Lu,
    Qr,
    Svd,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Lu, Method::Qr, Method::Svd];

    pub fn as_str(self) -> &'static str {
        match self {
            Method::Lu => "lu",
            Method::Qr => "qr",
            Method::Svd => "svd",
        }
    }

    /// Name of the factorization, e.g. `DQLU`.
    pub fn factorization(self) -> &'static str {
        match self {
            Method::Lu => "DQLU",
            Method::Qr => "DQQR",
            Method::Svd => "DQSVD",
        }
    }

    pub(crate) fn tag(self) -> u8 {
        match self {
            Method::Lu => 1,
            Method::Qr => 2,
            Method::Svd => 3,
        }
    }

    pub(crate) fn from_tag(tag: u8) -> Option<Self> {
        match tag {
            1 => Some(Method::Lu),
            2 => Some(Method::Qr),
            3 => Some(Method::Svd),
            _ => None,
        }
    }

    pub(crate) fn fail(self, source: AlgebraError) -> Error {
        Error::Factorization {
            method: self.factorization(),
            source,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "lu" | "dqlu" => Ok(Method::Lu),
            "qr" | "dqqr" => Ok(Method::Qr),
            "svd" | "dqsvd" => Ok(Method::Svd),
            other => Err(format!("unknown method {other:?}, expected lu, qr or svd")),
        }
    }
}

/// Parses a comma-separated method list such as `lu,qr,svd`.
pub fn parse_methods(list: &str) -> Result<Vec<Method>, String> {
    list.split(',').filter(|s| !s.trim().is_empty()).map(str::parse).collect()
}
