//! Seeded random frames and pairwise agreement between kernel
//! representations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::{GeometricFrame, PlaneValue};
use crate::error::Result;
use crate::genfun::MAX_COEFFS;
use crate::kernel::{is_standard_angle, kernel, KernelRequest, Strategy};
use crate::parallel::{map_collect, Execution};

/// Brute force is only compared for `t` up to this value.
pub const BRUTEFORCE_TMAX: f64 = 1.5;
/// Brute force is only compared in dimensions up to this value.
pub const BRUTEFORCE_MAX_DIM: usize = 6;

/// `count` frames with `t` uniform on `[0, tmax]` and `cos θ` uniform on
/// `[-1, 1]`.
pub fn random_frames(seed: u64, count: usize, tmax: f64) -> Vec<GeometricFrame> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let t = tmax * rng.random::<f64>();
            let c = rng.random_range(-1.0..=1.0);
            let s = (1.0f64 - c * c).max(0.0).sqrt();
            GeometricFrame::from_uv(t * c, t * s).expect("finite frame")
        })
        .collect()
}

/// Random vector pair in `R^m` with entries uniform on `[-r, r]`.
pub fn random_vectors(rng: &mut ChaCha8Rng, m: usize, r: f64) -> (Vec<f64>, Vec<f64>) {
    let mut draw = || (0..m).map(|_| rng.random_range(-r..=r)).collect::<Vec<f64>>();
    let x = draw();
    let y = draw();
    (x, y)
}

/// Representations that apply to `(m, p)` at a frame.
pub fn applicable_strategies(m: usize, p: f64, frame: &GeometricFrame) -> Vec<Strategy> {
    let standard = is_standard_angle(p);
    let mut out = Vec::new();
    if m == 2 {
        out.push(Strategy::Dim2);
    } else {
        out.push(Strategy::Series);
        if standard {
            out.push(Strategy::Integral);
        }
    }
    if m.is_multiple_of(4) && standard {
        out.push(Strategy::ClosedEven);
    }
    if m.is_multiple_of(2) && m / 2 - 1 <= MAX_COEFFS {
        out.push(Strategy::Genfun);
    }
    if frame.t <= BRUTEFORCE_TMAX && m <= BRUTEFORCE_MAX_DIM {
        out.push(Strategy::Bruteforce);
    }
    out
}

/// Largest componentwise difference between two representations.
#[derive(Debug, Clone, Copy)]
pub struct Disagreement {
    pub first: Strategy,
    pub second: Strategy,
    pub frame: GeometricFrame,
    pub diff: f64,
}

/// Outcome of a pairwise validation run.
#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub m: usize,
    pub p: f64,
    pub trials: usize,
    pub tolerance: f64,
    pub comparisons: usize,
    pub failures: usize,
    pub worst: Option<Disagreement>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// All applicable representations at one frame, evaluated at `tol`.
pub fn evaluate_all(m: usize, p: f64, frame: &GeometricFrame, tol: f64) -> Result<Vec<(Strategy, PlaneValue)>> {
    applicable_strategies(m, p, frame)
        .into_iter()
        .map(|s| {
            let req = KernelRequest::new(m, p, *frame).with_tol(tol).with_strategy(s);
            Ok((s, kernel(&req)?.value))
        })
        .collect()
}

/// Worst pairwise disagreement at one frame.
pub fn compare_at(m: usize, p: f64, frame: &GeometricFrame, tol: f64) -> Result<(usize, Option<Disagreement>)> {
    let values = evaluate_all(m, p, frame, (tol * 1e-2).max(1e-14))?;
    let mut worst: Option<Disagreement> = None;
    let mut count = 0;
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            count += 1;
            let diff = values[i].1.max_abs_diff(&values[j].1);
            if worst.is_none_or(|w| diff > w.diff) {
                worst = Some(Disagreement {
                    first: values[i].0,
                    second: values[j].0,
                    frame: *frame,
                    diff,
                });
            }
        }
    }
    Ok((count, worst))
}

/// Compares every applicable pair on `trials` seeded frames with
/// `t ≤ tmax`. An evaluation error counts as a failure with infinite
/// difference.
pub fn validate(
    m: usize,
    p: f64,
    trials: usize,
    seed: u64,
    tmax: f64,
    tol: f64,
    exec: Execution,
) -> ValidationReport {
    let frames = random_frames(seed, trials, tmax);
    let results = map_collect(exec, &frames, |f| compare_at(m, p, f, tol));
    let mut report = ValidationReport {
        m,
        p,
        trials,
        tolerance: tol,
        comparisons: 0,
        failures: 0,
        worst: None,
    };
    for (frame, r) in frames.iter().zip(results) {
        let (count, worst) = match r {
            Ok(x) => x,
            Err(_) => (
                1,
                Some(Disagreement {
                    first: Strategy::Auto,
                    second: Strategy::Auto,
                    frame: *frame,
                    diff: f64::INFINITY,
                }),
            ),
        };
        report.comparisons += count;
        if let Some(w) = worst {
            if !(w.diff <= tol) {
                report.failures += 1;
            }
            if report.worst.is_none_or(|cur| !(w.diff <= cur.diff)) {
                report.worst = Some(w);
            }
        }
    }
    report
}
