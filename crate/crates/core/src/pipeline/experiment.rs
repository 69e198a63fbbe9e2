//! Batch attack experiments over a corpus.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::method::Method;
use super::scheme::{generate, verify, GenerateConfig};
use crate::attacks::{apply_attack, AttackSpec};
use crate::error::Result;
use crate::imaging::metrics::inf_as_string;
use crate::imaging::RgbImage;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRow {
    pub image: String,
    pub method: Method,
    pub attack: String,
    #[serde(with = "inf_as_string")]
    pub psnr: f64,
    pub ssim: f64,
    pub ber: f64,
    pub nc: f64,
    pub authentic: bool,
    /// Set when generation or verification failed for this cell; the
    /// metrics are then NaN.
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub rows: Vec<ExperimentRow>,
}

pub struct Carrier {
    pub name: String,
    pub image: RgbImage,
}

/// Runs every `(image, method, attack)` cell in that order. An empty suite
/// runs the identity attack instead. Cell failures are recorded, not raised.
pub fn run_experiment(
    corpus: &[Carrier],
    watermark: &RgbImage,
    suite: &[AttackSpec],
    methods: &[Method],
    base: &GenerateConfig,
) -> ExperimentReport {
    let identity = [AttackSpec::Identity];
    let suite = if suite.is_empty() { &identity[..] } else { suite };
    let mut rows = Vec::with_capacity(corpus.len() * methods.len() * suite.len());
    for carrier in corpus {
        for &method in methods {
            let cfg = GenerateConfig { method, ..*base };
            let generated = generate(&carrier.image, watermark, &cfg);
            for attack in suite {
                let outcome = generated.as_ref().map_err(|e| e.to_string()).and_then(|(zw, key)| {
                    let suspect = apply_attack(&carrier.image, attack).map_err(|e| e.to_string())?;
                    verify(&suspect, zw, key, watermark).map_err(|e| e.to_string())
                });
                let mut row = ExperimentRow {
                    image: carrier.name.clone(),
                    method,
                    attack: attack.name(),
                    psnr: f64::NAN,
                    ssim: f64::NAN,
                    ber: f64::NAN,
                    nc: f64::NAN,
                    authentic: false,
                    error: None,
                };
                match outcome {
                    Ok(v) => {
                        row.psnr = v.report.psnr;
                        row.ssim = v.report.ssim;
                        row.ber = v.report.ber;
                        row.nc = v.report.nc;
                        row.authentic = v.report.authentic;
                    }
                    Err(e) => row.error = Some(e),
                }
                rows.push(row);
            }
        }
    }
    ExperimentReport { rows }
}

impl ExperimentReport {
    pub fn write_csv(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["image", "method", "attack", "psnr", "ssim", "ber", "nc", "authentic", "error"])?;
        for r in &self.rows {
            let psnr = if r.psnr == f64::INFINITY {
                "inf".to_string()
            } else {
                r.psnr.to_string()
            };
            w.write_record([
                r.image.clone(),
                r.method.to_string(),
                r.attack.clone(),
                psnr,
                r.ssim.to_string(),
                r.ber.to_string(),
                r.nc.to_string(),
                r.authentic.to_string(),
                r.error.clone().unwrap_or_default(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn write_json(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }

    /// Writes `results.csv` and `results.json` into `dir`.
    pub fn write_all(&self, dir: impl AsRef<Path>) -> Result<(PathBuf, PathBuf)> {
        let dir = dir.as_ref();
        std::fs::create_dir_all(dir)?;
        let (csv_path, json_path) = (dir.join("results.csv"), dir.join("results.json"));
        self.write_csv(&csv_path)?;
        self.write_json(&json_path)?;
        Ok((csv_path, json_path))
    }
}

/// Loads every PNG/BMP in `dir`, sorted by file name. A file whose stem is
/// `watermark` is returned separately.
pub fn load_corpus(dir: impl AsRef<Path>) -> Result<(Vec<Carrier>, Option<RgbImage>)> {
    let mut paths: Vec<PathBuf> = std::fs::read_dir(dir)?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            p.extension()
                .and_then(|e| e.to_str())
                .is_some_and(|e| matches!(e.to_ascii_lowercase().as_str(), "png" | "bmp"))
        })
        .collect();
    paths.sort();
    let mut carriers = Vec::new();
    let mut watermark = None;
    for p in paths {
        let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or_default().to_string();
        let image = RgbImage::load(&p)?;
        if stem.eq_ignore_ascii_case("watermark") {
            watermark = Some(image);
        } else {
            let name = p.file_name().and_then(|s| s.to_str()).unwrap_or_default().to_string();
            carriers.push(Carrier { name, image });
        }
    }
    Ok((carriers, watermark))
}
