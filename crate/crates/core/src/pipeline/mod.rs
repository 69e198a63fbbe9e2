//! Zero-watermark generation, verification, file formats and experiments.

pub mod experiment;
pub mod format;
pub mod key;
pub mod method;
pub mod scheme;

pub use experiment::{load_corpus, run_experiment, Carrier, ExperimentReport, ExperimentRow};
pub use format::{Payload, ZeroWatermark, FORMAT_VERSION, MAGIC};
pub use key::{KeyFile, MatrixComponents, ResizeRecord, KEY_VERSION};
pub use method::{parse_methods, Method};
pub use scheme::{generate, reconstruct_dual_part, verify, verify_with_tau, GenerateConfig, Verification};
