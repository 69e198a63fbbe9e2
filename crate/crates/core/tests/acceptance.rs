//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.
//!
//! Run alone with `cargo test --release --test acceptance`.

use std::cmp::Ordering;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;

use dqzw::attacks::{apply_attack, AttackSpec};
use dqzw::dual::{dual_cmp, dual_sqrt, dq_magnitude, DualNumber, DualQuaternion, DualQuaternionMatrix};
use dqzw::factor::{dqlu, dqqr, dqsvd};
use dqzw::imaging::{arnold_scramble, arnold_unscramble, ArnoldKey};
use dqzw::pipeline::{generate, verify, GenerateConfig, Method, Payload, ZeroWatermark};
use dqzw::quat::{qsvd, Quaternion, QuaternionMatrix};
use dqzw::synth::{
    dominant_dq_matrix, noise_image, random_dual_quaternion, random_qmatrix, random_quaternion, rng,
    synthetic_carrier, synthetic_watermark,
};

const SIZE: u32 = 64;

type Criterion = (&'static str, u64, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn new(passed: bool, detail: impl Into<String>) -> Self {
        Self {
            passed,
            detail: detail.into(),
        }
    }
}

fn carriers(n: u64) -> Vec<(u64, dqzw::imaging::RgbImage)> {
    (1..=n).map(|s| (s, synthetic_carrier(SIZE, s))).collect()
}

// 1. Untouched carriers recover the watermark exactly.
fn no_attack_recovery() -> Outcome {
    let mark = synthetic_watermark(SIZE);
    let mut bad = Vec::new();
    let mut cells = 0;
    for (seed, carrier) in carriers(5) {
        for method in Method::ALL {
            cells += 1;
            let result = generate(&carrier, &mark, &GenerateConfig::new(method))
                .and_then(|(zw, key)| verify(&carrier, &zw, &key, &mark));
            match result {
                Ok(v) if v.report.is_perfect() && v.report.authentic => {}
                Ok(v) => bad.push(format!("carrier {seed} {method}: {:?}", v.report)),
                Err(e) => bad.push(format!("carrier {seed} {method}: {e}")),
            }
        }
    }
    if bad.is_empty() {
        Outcome::new(true, format!("{cells} cells: PSNR inf, SSIM 1, NC 1, BER 0"))
    } else {
        Outcome::new(false, bad.join("; "))
    }
}

fn rel(a: &QuaternionMatrix, b: &QuaternionMatrix) -> f64 {
    a.try_sub(b).unwrap().frobenius_norm() / a.frobenius_norm().max(f64::MIN_POSITIVE)
}

fn unitarity(q: &DualQuaternionMatrix) -> f64 {
    let n = q.shape().1;
    let qhq = q.conj_transpose().try_mul(q).unwrap();
    let s = qhq.standard().try_sub(&QuaternionMatrix::identity(n)).unwrap().frobenius_norm();
    s.max(qhq.dual().frobenius_norm())
}

fn anti_hermitian(p: &QuaternionMatrix) -> f64 {
    p.try_add(&p.conj_transpose()).unwrap().frobenius_norm()
}

// 2. Factor identities on random well-conditioned matrices.
fn factorization_identities() -> Outcome {
    let (mut res, mut unit, mut anti) = (0.0f64, 0.0f64, 0.0f64);
    let mut errors = Vec::new();
    for seed in 0..50u64 {
        let a = dominant_dq_matrix(16, 1000 + seed);
        let check = |f: &DualQuaternionMatrix| (rel(a.standard(), f.standard()), rel(a.dual(), f.dual()));
        match dqlu(&a) {
            Ok(f) => {
                let (s, i) = check(&f.reconstruct());
                res = res.max(s).max(i);
            }
            Err(e) => errors.push(format!("lu {seed}: {e}")),
        }
        match dqqr(&a) {
            Ok(f) => {
                let (s, i) = check(&f.reconstruct());
                res = res.max(s).max(i);
                unit = unit.max(unitarity(&f.q));
                anti = anti.max(anti_hermitian(&f.p));
            }
            Err(e) => errors.push(format!("qr {seed}: {e}")),
        }
        match dqsvd(&a) {
            Ok(f) => {
                let (s, i) = check(&f.reconstruct());
                res = res.max(s).max(i);
                unit = unit.max(unitarity(&f.u)).max(unitarity(&f.v));
                anti = anti.max(anti_hermitian(&f.p_u)).max(anti_hermitian(&f.p_v));
            }
            Err(e) => errors.push(format!("svd {seed}: {e}")),
        }
    }
    let passed = errors.is_empty() && res <= 1e-8 && unit <= 1e-10 && anti <= 1e-10;
    let mut detail = format!("150 factorizations: max residual {res:.2e}, unitarity {unit:.2e}, anti-Hermitian {anti:.2e}");
    if !errors.is_empty() {
        detail.push_str(&format!("; errors: {}", errors.join(", ")));
    }
    Outcome::new(passed, detail)
}

// 3. Dual singular values are the first-order change of the singular values.
fn dqsvd_first_order() -> Outcome {
    let t = 1e-6;
    let mut worst_deriv = 0.0f64;
    let mut worst_value = 0.0f64;
    let mut accepted = 0;
    let mut seed = 0u64;
    let mut errors = Vec::new();
    while accepted < 20 && seed < 500 {
        seed += 1;
        let a_s = random_qmatrix(8, 8, 2 * seed);
        let a_i = random_qmatrix(8, 8, 2 * seed + 1);
        let base = qsvd(&a_s).unwrap();
        let gaps_ok = base.sigma.windows(2).all(|w| w[0] - w[1] > 1e-2) && *base.sigma.last().unwrap() > 1e-2;
        if !gaps_ok {
            continue;
        }
        accepted += 1;
        let f = match dqsvd(&DualQuaternionMatrix::new(a_s.clone(), a_i.clone()).unwrap()) {
            Ok(f) => f,
            Err(e) => {
                errors.push(format!("seed {seed}: {e}"));
                continue;
            }
        };
        let moved = qsvd(&a_s.try_add(&a_i.scale(t)).unwrap()).unwrap();
        for (k, d) in f.sigma.iter().enumerate() {
            let predicted = d.s + t * d.i;
            worst_value = worst_value.max((moved.sigma[k] - predicted).abs() / predicted.abs());
            let fd = (moved.sigma[k] - d.s) / t;
            worst_deriv = worst_deriv.max((fd - d.i).abs() / d.i.abs().max(1.0));
        }
    }
    let passed = errors.is_empty() && accepted == 20 && worst_value <= 1e-4 && worst_deriv <= 1e-4;
    Outcome::new(
        passed,
        format!(
            "{accepted} matrices, t = {t:e}: max rel error of sigma_s + t sigma_i {worst_value:.2e}, \
             of the difference quotient {worst_deriv:.2e}{}",
            if errors.is_empty() { String::new() } else { format!("; errors: {}", errors.join(", ")) }
        ),
    )
}

fn fragility_cells(attacks: &[(u64, dqzw::imaging::RgbImage, Vec<AttackSpec>)]) -> (usize, Vec<String>, [f64; 3]) {
    let mark = synthetic_watermark(SIZE);
    let mut misses = Vec::new();
    let mut worst = [f64::INFINITY; 3];
    let mut cells = 0;
    for (seed, carrier, suite) in attacks {
        for (mi, method) in Method::ALL.into_iter().enumerate() {
            let (zw, key) = match generate(carrier, &mark, &GenerateConfig::new(method)) {
                Ok(v) => v,
                Err(e) => {
                    misses.push(format!("carrier {seed} {method}: generate failed: {e}"));
                    continue;
                }
            };
            for spec in suite {
                cells += 1;
                let suspect = apply_attack(carrier, spec).unwrap();
                match verify(&suspect, &zw, &key, &mark) {
                    Ok(v) => {
                        worst[mi] = worst[mi].min(v.report.ber);
                        if v.report.ber < 0.3 || v.report.authentic {
                            misses.push(format!(
                                "carrier {seed} {method} {spec}: BER {:.4}{}",
                                v.report.ber,
                                if v.report.authentic { " (authentic)" } else { "" }
                            ));
                        }
                    }
                    // A suspect whose standard part cannot be factored is
                    // rejected outright.
                    Err(_) => worst[mi] = worst[mi].min(1.0),
                }
            }
        }
    }
    (cells, misses, worst)
}

fn summarize(cells: usize, misses: Vec<String>, worst: [f64; 3]) -> Outcome {
    let head = format!(
        "{cells} cells, min BER lu {:.4} qr {:.4} svd {:.4}",
        worst[0], worst[1], worst[2]
    );
    if misses.is_empty() {
        Outcome::new(true, head)
    } else {
        let shown: Vec<_> = misses.iter().take(8).cloned().collect();
        Outcome::new(
            false,
            format!(
                "{head}; {} cells below BER 0.3 or authentic, e.g. {}",
                misses.len(),
                shown.join("; ")
            ),
        )
    }
}

// 4. Every attack, down to a single +-1 channel edit, breaks verification.
fn fragility_bands() -> Outcome {
    let plan: Vec<_> = carriers(3)
        .into_iter()
        .map(|(seed, img)| {
            let suite = vec![
                AttackSpec::gaussian(0.01, seed),
                AttackSpec::jpeg(10),
                AttackSpec::rotate(3.0),
                AttackSpec::center_crop(0.25),
                AttackSpec::brighten(30),
                AttackSpec::pixel_delta(SIZE / 2, SIZE / 2, 0, 1),
                AttackSpec::pixel_delta(5, 9, 2, -1),
                AttackSpec::pixel_delta(60, 3, 1, 1),
            ];
            (seed, img, suite)
        })
        .collect();
    let (cells, misses, worst) = fragility_cells(&plan);
    summarize(cells, misses, worst)
}

// 5. A near-identical image does not unlock the watermark.
fn similar_image_rejection() -> Outcome {
    let plan: Vec<_> = carriers(5)
        .into_iter()
        .map(|(seed, img)| (seed, img, vec![AttackSpec::gaussian(1e-4, 100 + seed)]))
        .collect();
    let (cells, misses, worst) = fragility_cells(&plan);
    summarize(cells, misses, worst)
}

fn close_q(a: Quaternion, b: Quaternion, tol: f64) -> bool {
    (a - b).abs() <= tol * (1.0 + a.abs().max(b.abs()))
}

fn close_d(a: DualNumber, b: DualNumber, tol: f64) -> bool {
    (a.s - b.s).abs() <= tol * (1.0 + a.s.abs()) && (a.i - b.i).abs() <= tol * (1.0 + a.i.abs())
}

// 6. Randomized algebra laws.
fn algebra_laws() -> Outcome {
    let mut r = rng(6);
    let per_law = 2000;
    let mut failures: Vec<String> = Vec::new();
    let mut checks = 0;

    for n in 0..per_law {
        checks += 1;
        let (a, b) = (r.random_range(-10.0..10.0), r.random_range(-10.0..10.0));
        let e = DualNumber::new(0.0, a) * DualNumber::new(0.0, b);
        let p = DualQuaternion::new(Quaternion::ZERO, random_quaternion(&mut r));
        let q = DualQuaternion::new(Quaternion::ZERO, random_quaternion(&mut r));
        if e != DualNumber::ZERO || p * q != DualQuaternion::ZERO {
            failures.push(format!("nilpotency #{n}"));
        }
    }
    for n in 0..per_law {
        checks += 1;
        let (p, q) = (random_quaternion(&mut r), random_quaternion(&mut r));
        let (dp, dq) = (random_dual_quaternion(&mut r), random_dual_quaternion(&mut r));
        let lhs = (dp * dq).conj();
        let rhs = dq.conj() * dp.conj();
        if !close_q((p * q).conj(), q.conj() * p.conj(), 1e-14)
            || !close_q(lhs.s, rhs.s, 1e-14)
            || !close_q(lhs.i, rhs.i, 1e-14)
        {
            failures.push(format!("conjugation #{n}"));
        }
    }
    for n in 0..per_law {
        checks += 1;
        let d = DualNumber::new(r.random_range(1e-3..100.0), r.random_range(-100.0..100.0));
        let root = dual_sqrt(d).unwrap();
        let back = dual_sqrt(d * d).unwrap();
        if !close_d(root * root, d, 1e-12) || !close_d(back, d, 1e-12) {
            failures.push(format!("sqrt #{n}: {d:?}"));
        }
    }
    for n in 0..per_law {
        checks += 1;
        let (p, q) = (random_dual_quaternion(&mut r), random_dual_quaternion(&mut r));
        let lhs = dq_magnitude(p * q);
        let rhs = dq_magnitude(p) * dq_magnitude(q);
        if !close_d(lhs, rhs, 1e-10) {
            failures.push(format!("magnitude #{n}: {lhs:?} vs {rhs:?}"));
        }
    }
    for n in 0..per_law {
        checks += 1;
        // Coarse values so ties in the standard part are common.
        let mut pick = || DualNumber::new(r.random_range(-2i32..3) as f64, r.random_range(-2i32..3) as f64);
        let (a, b, c) = (pick(), pick(), pick());
        let le = |x, y| dual_cmp(x, y) != Ordering::Greater;
        let transitive = !(le(a, b) && le(b, c)) || le(a, c);
        let antisymmetric = !(le(a, b) && le(b, a)) || a == b;
        let total = le(a, b) || le(b, a);
        if !(transitive && antisymmetric && total) {
            failures.push(format!("order #{n}: {a:?} {b:?} {c:?}"));
        }
    }
    if failures.is_empty() {
        Outcome::new(true, format!("{checks} checks across 5 laws"))
    } else {
        Outcome::new(
            false,
            format!("{} of {checks} failed: {}", failures.len(), failures.iter().take(5).cloned().collect::<Vec<_>>().join(", ")),
        )
    }
}

fn random_payload(r: &mut impl Rng, seed: u64) -> ZeroWatermark {
    let (m, n) = (r.random_range(1..=8usize), r.random_range(1..=8usize));
    let mut special = |mat: QuaternionMatrix| {
        let mut mat = mat;
        for q in mat.as_mut_slice() {
            if r.random_bool(0.1) {
                let v = [-0.0, f64::MIN_POSITIVE / 3.0, f64::MAX, f64::INFINITY, 1e-300][r.random_range(0..5)];
                q.y = v;
            }
        }
        mat
    };
    let payload = match seed % 3 {
        0 => Payload::Lu {
            l_i: special(random_qmatrix(m, m, seed)),
            u_i: special(random_qmatrix(m, n, seed + 1)),
        },
        1 => Payload::Qr {
            q_i: special(random_qmatrix(m, m, seed)),
            r_i: special(random_qmatrix(m, n, seed + 1)),
        },
        _ => Payload::Svd {
            u_i: special(random_qmatrix(m, m, seed)),
            sigma_i: (0..m.min(n)).map(|k| (k as f64 - 2.5) * 1.000000000000001).collect(),
            v_i: special(random_qmatrix(n, n, seed + 1)),
        },
    };
    ZeroWatermark {
        rows: m as u32,
        cols: n as u32,
        payload,
    }
}

// 7. Scrambling and serialization are exact.
fn arnold_and_serialization() -> Outcome {
    let mut r = rng(7);
    let mut bad = Vec::new();
    for t in 0..100u64 {
        let (s1, s2) = (r.random_range(-6i64..7), r.random_range(-6i64..7));
        let mut key = ArnoldKey {
            a: 1,
            b: s1,
            c: s2,
            d: 1 + s1 * s2,
            iterations: r.random_range(0..64),
            n: r.random_range(2..=64),
        };
        if r.random_bool(0.5) {
            key.c = -key.c;
            key.d = -key.d;
        }
        let img = noise_image(key.n, key.n, t);
        let ok = arnold_scramble(&img, &key)
            .and_then(|s| arnold_unscramble(&s, &key))
            .map(|back| back == img)
            .unwrap_or(false);
        if !ok {
            bad.push(format!("arnold {key:?}"));
        }
    }
    for t in 0..100u64 {
        let zw = random_payload(&mut r, 10 * t);
        let bytes = zw.to_bytes();
        match ZeroWatermark::from_bytes(&bytes) {
            Ok(back) if back.to_bytes() == bytes && back == zw => {}
            Ok(_) => bad.push(format!("payload {t} changed")),
            Err(e) => bad.push(format!("payload {t}: {e}")),
        }
    }
    if bad.is_empty() {
        Outcome::new(true, "100 keys and 100 payloads round-trip bit-exactly")
    } else {
        Outcome::new(false, bad.join("; "))
    }
}

fn main() -> ExitCode {
    let criteria: [Criterion; 7] = [
        ("no-attack recovery", 10, no_attack_recovery),
        ("factorization identities", 30, factorization_identities),
        ("DQSVD first-order oracle", 10, dqsvd_first_order),
        ("fragility bands", 60, fragility_bands),
        ("similar-image rejection", 20, similar_image_rejection),
        ("algebra law suite", 10, algebra_laws),
        ("Arnold and serialization exactness", 10, arnold_and_serialization),
    ];
    let mut failed = 0;
    for (n, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Outcome::new(false, format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let in_time = elapsed <= Duration::from_secs(budget);
        let passed = outcome.passed && in_time;
        if !passed {
            failed += 1;
        }
        println!(
            "{} criterion {}: {name}: {} [{:.2} s of {budget} s{}]",
            if passed { "PASS" } else { "FAIL" },
            n + 1,
            outcome.detail,
            elapsed.as_secs_f64(),
            if in_time { "" } else { ", over budget" }
        );
    }
    println!("acceptance: {} passed, {failed} failed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
