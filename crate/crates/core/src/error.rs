use std::io;

use thiserror::Error;

/// Failures of the quaternion / dual-quaternion algebra and factorizations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("division by a zero quaternion")]
    ZeroDivisor,
    #[error("dual division is undefined for these operands")]
    UndefinedDivision,
    #[error("square root undefined for dual number with standard part {0}")]
    DomainError(f64),
    #[error("dual quaternion is infinitesimal (zero standard part)")]
    NotAppreciable,
    #[error("dimension mismatch: {op} got {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Leading principal minor of order `t` (1-based) vanished.
    #[error("leading minor of order {0} is singular")]
    SingularMinor(usize),
    #[error("standard part is rank deficient at column {0}")]
    RankDeficient(usize),
    #[error("appreciable singular values {0} and {1} coincide")]
    DegenerateSpectrum(usize, usize),
    #[error("complex SVD did not converge")]
    ConvergenceFailure,
}

/// Top-level error for imaging, attacks, file formats and the pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("{method} factorization failed: {source}")]
    Factorization {
        method: &'static str,
        source: AlgebraError,
    },
    #[error("image is {width}x{height}, expected a square image")]
    NotSquare { width: u32, height: u32 },
    #[error("image dimensions differ: {0:?} vs {1:?}")]
    DimensionMismatch((u32, u32), (u32, u32)),
    #[error("invalid Arnold key: {0}")]
    BadKey(String),
    #[error("invalid attack parameters: {0}")]
    BadParameters(String),
    #[error("image is entirely zero")]
    ZeroImage,
    #[error("format error at byte {offset}: {msg}")]
    Format { offset: usize, msg: String },
    #[error(transparent)]
    Image(#[from] image::ImageError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
