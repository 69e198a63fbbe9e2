//! `zwm`: generate, verify, attack and batch-evaluate zero-watermarks.
//!
//! Exit codes: 0 success / authentic, 1 not authentic, 2 usage error,
//! 3 processing error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dqzw::attacks::{apply_attack, load_suite, AttackSpec};
use dqzw::imaging::metrics::inf_as_string;
use dqzw::imaging::RgbImage;
use dqzw::pipeline::{
    generate, load_corpus, parse_methods, run_experiment, verify, GenerateConfig, KeyFile, Method, ZeroWatermark,
};
use dqzw::synth::synthetic_watermark;

#[derive(Parser)]
#[command(name = "zwm", version, about = "Dual-quaternion fragile zero-watermarking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a zero-watermark and key file from a carrier and a watermark.
    Generate(GenerateArgs),
    /// Recover the watermark from a suspect image and score it.
    Verify(VerifyArgs),
    /// Apply one attack to an image.
    Attack(AttackArgs),
    /// Run every (image, method, attack) cell and write CSV and JSON.
    Experiment(ExperimentArgs),
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long, value_parser = parse_method)]
    method: Method,
    #[arg(long)]
    carrier: PathBuf,
    #[arg(long)]
    watermark: PathBuf,
    #[arg(long)]
    zw_out: PathBuf,
    #[arg(long)]
    key_out: PathBuf,
    /// Arnold iteration count.
    #[arg(long, default_value_t = 10)]
    arnold_k: u32,
    /// Arnold matrix entries `a,b,c,d` with `ad - bc = ±1`.
    #[arg(long, value_parser = parse_matrix, default_value = "1,1,1,2")]
    arnold_matrix: [i64; 4],
    /// Resize the carrier to `N x N` (bicubic) first.
    #[arg(long)]
    size: Option<u32>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = parse_method)]
    method: Method,
    #[arg(long)]
    suspect: PathBuf,
    #[arg(long)]
    zw: PathBuf,
    #[arg(long)]
    key: PathBuf,
    #[arg(long)]
    watermark_ref: PathBuf,
    /// Write the JSON report here as well as to stdout.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Save the recovered watermark as PNG.
    #[arg(long)]
    recovered_out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum AttackType {
    Gaussian,
    Jpeg,
    Rotate,
    Crop,
    Brighten,
    Pixel,
}

#[derive(Args)]
struct AttackArgs {
    #[arg(long = "type", value_enum)]
    kind: AttackType,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    out: PathBuf,
    /// Noise seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Gaussian variance on the [0, 1] scale.
    #[arg(long, default_value_t = 0.01)]
    variance: f64,
    /// JPEG quality 1..=100.
    #[arg(long, default_value_t = 10)]
    quality: u8,
    /// Counterclockwise rotation in degrees.
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    angle: f64,
    /// Fraction of the area zeroed by the center crop.
    #[arg(long, default_value_t = 0.25)]
    fraction: f64,
    /// Brightness offset per channel.
    #[arg(long, default_value_t = 30, allow_negative_numbers = true)]
    delta: i32,
    /// Pixel edit column; defaults to the image center.
    #[arg(long)]
    x: Option<u32>,
    /// Pixel edit row; defaults to the image center.
    #[arg(long)]
    y: Option<u32>,
    #[arg(long, default_value_t = 0)]
    channel: usize,
    /// New channel value; without it the channel is shifted by --pixel-delta.
    #[arg(long)]
    value: Option<u8>,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    pixel_delta: i32,
}

#[derive(Args)]
struct ExperimentArgs {
    /// Directory of PNG/BMP carriers. A file named `watermark.png` (or
    /// `.bmp`) is used as the watermark; otherwise a built-in one is used.
    #[arg(long)]
    corpus: PathBuf,
    /// JSON array of attack specs.
    #[arg(long)]
    suite: PathBuf,
    #[arg(long, value_parser = parse_method_list, default_value = "lu,qr,svd")]
    methods: MethodList,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Clone)]
struct MethodList(Vec<Method>);

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse()
}

fn parse_method_list(s: &str) -> Result<MethodList, String> {
    let v = parse_methods(s)?;
    if v.is_empty() {
        return Err("no methods given".into());
    }
    Ok(MethodList(v))
}

fn parse_matrix(s: &str) -> Result<[i64; 4], String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    v.try_into().map_err(|v: Vec<i64>| format!("expected 4 entries, got {}", v.len()))
}

#[derive(Serialize)]
struct Report<'a> {
    #[serde(with = "inf_as_string")]
    psnr: f64,
    ssim: f64,
    ber: f64,
    nc: f64,
    authentic: bool,
    method: &'a str,
    attack: &'a str,
}

enum Failure {
    Usage(String),
    Processing(dqzw::Error),
}

impl From<dqzw::Error> for Failure {
    fn from(e: dqzw::Error) -> Self {
        Failure::Processing(e)
    }
}

fn run_generate(a: GenerateArgs) -> Result<ExitCode, Failure> {
    let carrier = RgbImage::load(&a.carrier)?;
    let watermark = RgbImage::load(&a.watermark)?;
    let config = GenerateConfig {
        method: a.method,
        arnold_matrix: a.arnold_matrix,
        arnold_iterations: a.arnold_k,
        size: a.size,
        ..GenerateConfig::new(a.method)
    };
    let (zw, key) = generate(&carrier, &watermark, &config)?;
    zw.save(&a.zw_out)?;
    key.save(&a.key_out)?;
    eprintln!(
        "wrote {} ({}x{}, {}) and {}",
        a.zw_out.display(),
        zw.cols,
        zw.rows,
        zw.method().factorization(),
        a.key_out.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn run_verify(a: VerifyArgs) -> Result<ExitCode, Failure> {
    let suspect = RgbImage::load(&a.suspect)?;
    let zw = ZeroWatermark::load(&a.zw)?;
    let key = KeyFile::load(&a.key)?;
    let reference = RgbImage::load(&a.watermark_ref)?;
    if key.method != a.method {
        return Err(Failure::Usage(format!(
            "--method {} does not match the key file ({})",
            a.method, key.method
        )));
    }
    let v = verify(&suspect, &zw, &key, &reference)?;
    let report = Report {
        psnr: v.report.psnr,
        ssim: v.report.ssim,
        ber: v.report.ber,
        nc: v.report.nc,
        authentic: v.report.authentic,
        method: a.method.as_str(),
        attack: "none",
    };
    let json = serde_json::to_string_pretty(&report).map_err(dqzw::Error::from)?;
    println!("{json}");
    if let Some(p) = &a.report {
        std::fs::write(p, &json).map_err(dqzw::Error::from)?;
    }
    if let Some(p) = &a.recovered_out {
        v.recovered.save_png(p)?;
    }
    Ok(if v.report.authentic {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_attack(a: AttackArgs) -> Result<ExitCode, Failure> {
    let img = RgbImage::load(&a.input)?;
    let spec = match a.kind {
        AttackType::Gaussian => AttackSpec::gaussian(a.variance, a.seed),
        AttackType::Jpeg => AttackSpec::jpeg(a.quality),
        AttackType::Rotate => AttackSpec::rotate(a.angle),
        AttackType::Crop => AttackSpec::center_crop(a.fraction),
        AttackType::Brighten => AttackSpec::brighten(a.delta),
        AttackType::Pixel => {
            let x = a.x.unwrap_or(img.width() / 2);
            let y = a.y.unwrap_or(img.height() / 2);
            match a.value {
                Some(v) => AttackSpec::pixel_set(x, y, a.channel, v),
                None => AttackSpec::pixel_delta(x, y, a.channel, a.pixel_delta),
            }
        }
    };
    let out = apply_attack(&img, &spec).map_err(|e| match e {
        dqzw::Error::BadParameters(m) => Failure::Usage(m),
        other => Failure::Processing(other),
    })?;
    out.save_png(&a.out)?;
    eprintln!("{} -> {}", spec, a.out.display());
    Ok(ExitCode::SUCCESS)
}

fn run_experiment_cmd(a: ExperimentArgs) -> Result<ExitCode, Failure> {
    let suite = load_suite(&a.suite)?;
    let (corpus, watermark) = load_corpus(&a.corpus)?;
    if corpus.is_empty() {
        return Err(Failure::Usage(format!("no PNG/BMP carriers in {}", a.corpus.display())));
    }
    let watermark = watermark.unwrap_or_else(|| synthetic_watermark(corpus[0].image.width().max(8)));
    let report = run_experiment(&corpus, &watermark, &suite, &a.methods.0, &GenerateConfig::new(Method::Lu));
    let (csv, json) = report.write_all(&a.out)?;
    let failed = report.rows.iter().filter(|r| r.error.is_some()).count();
    eprintln!(
        "{} rows ({} failed cells) -> {}, {}",
        report.rows.len(),
        failed,
        csv.display(),
        json.display()
    );
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Generate(a) => run_generate(a),
        Command::Verify(a) => run_verify(a),
        Command::Attack(a) => run_attack(a),
        Command::Experiment(a) => run_experiment_cmd(a),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Processing(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
