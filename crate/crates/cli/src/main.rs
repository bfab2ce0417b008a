#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod input;
mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use cfk_core::genfun::genfun_coeffs;
use cfk_core::laplace::{default_horizon, laplace_kernel, numeric_laplace_check, LaplaceVariant};
use cfk_core::parallel::{map_range, Execution};
use cfk_core::transform::{cft_apply, SampledFunction};
use cfk_core::validation::validate;
use cfk_core::{frame_of, kernel, Complex64, GeometricFrame, KernelRequest, PlaneValue, Strategy};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use input::TransformInput;
use report::{num, to_json, KernelReport};

/// Evaluate and cross-check fractional Clifford-Fourier kernels.
#[derive(Parser)]
#[command(name = "cfk", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the kernel at one pair of vectors or one frame.
    Eval(EvalArgs),
    /// Compare every applicable representation on random frames.
    Validate(ValidateArgs),
    /// Even-dimensional kernels from the generating function.
    Coeffs(CoeffsArgs),
    /// Laplace-domain kernel, closed form against quadrature.
    Laplace(LaplaceArgs),
    /// Transform a sampled function given as JSON.
    Transform(TransformArgs),
    /// Kernel values on a (u, v) grid, one CSV per component.
    Grid(GridArgs),
}

/// Accepts a number, `pi`, `pi/N` or `K*pi/N`.
fn parse_angle(s: &str) -> Result<f64, String> {
    if let Ok(x) = s.parse::<f64>() {
        return Ok(x);
    }
    let lower = s.to_ascii_lowercase();
    let (num_part, den) = match lower.split_once('/') {
        Some((a, b)) => (a, b.parse::<f64>().map_err(|_| format!("bad angle `{s}`"))?),
        None => (lower.as_str(), 1.0),
    };
    let k = match num_part.strip_suffix("pi") {
        Some("") => 1.0,
        Some("-") => -1.0,
        Some(k) => k.trim_end_matches('*').parse::<f64>().map_err(|_| format!("bad angle `{s}`"))?,
        None => return Err(format!("bad angle `{s}`")),
    };
    Ok(k * std::f64::consts::PI / den)
}

#[derive(Args)]
struct Common {
    /// Dimension m.
    #[arg(long)]
    m: usize,
    /// Fractional angle p, e.g. 1.5707963267948966 or pi/2.
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    p: f64,
}

#[derive(Args)]
struct EvalArgs {
    #[command(flatten)]
    common: Common,
    /// First vector, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "y", conflicts_with_all = ["u", "v"])]
    x: Option<Vec<f64>>,
    /// Second vector, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, requires = "x")]
    y: Option<Vec<f64>>,
    /// Inner product (x, y).
    #[arg(long, allow_hyphen_values = true, requires = "v", required_unless_present = "x")]
    u: Option<f64>,
    /// Wedge magnitude |x ∧ y|.
    #[arg(long, requires = "u")]
    v: Option<f64>,
    /// auto, series, closed, integral, genfun, bruteforce or dim2.
    #[arg(long, default_value = "auto")]
    rep: String,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    /// Print one JSON object instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct ValidateArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Largest |x||y| sampled.
    #[arg(long, default_value_t = 3.0)]
    tmax: f64,
    /// Largest accepted componentwise disagreement.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct CoeffsArgs {
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    p: f64,
    #[arg(long, allow_hyphen_values = true)]
    u: f64,
    #[arg(long)]
    v: f64,
    /// Largest even dimension to report.
    #[arg(long)]
    max_m: usize,
    /// One JSON object per line.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct LaplaceArgs {
    #[command(flatten)]
    common: Common,
    /// Laplace variable as `RE,IM` or `RE`.
    #[arg(long, allow_hyphen_values = true)]
    s: String,
    #[arg(long, allow_hyphen_values = true)]
    u: f64,
    #[arg(long)]
    v: f64,
    /// oscillatory or exponential.
    #[arg(long, default_value = "oscillatory")]
    variant: String,
    /// Quadrature nodes for the direct check.
    #[arg(long, default_value_t = 512)]
    nodes: usize,
    /// Largest accepted gap between closed form and quadrature.
    #[arg(long, default_value_t = 1e-5)]
    tol: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TransformArgs {
    /// Function description (JSON).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_parser = parse_angle, allow_hyphen_values = true)]
    p: f64,
    /// JSON array of target points.
    #[arg(long)]
    targets: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    sequential: bool,
}

#[derive(Args)]
struct GridArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, allow_hyphen_values = true)]
    umin: f64,
    #[arg(long, allow_hyphen_values = true)]
    umax: f64,
    #[arg(long)]
    vmin: f64,
    #[arg(long)]
    vmax: f64,
    #[arg(long)]
    nu: usize,
    #[arg(long)]
    nv: usize,
    /// Output prefix; writes PREFIX_scalar_re.csv and so on.
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value = "auto")]
    rep: String,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long)]
    sequential: bool,
}

/// How a command ended.
enum Outcome {
    Done,
    /// Numbers were produced but a check failed.
    Mismatch,
}

type CmdResult = Result<Outcome, String>;

fn exec(sequential: bool) -> Execution {
    if sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    }
}

fn complex(z: Complex64) -> String {
    format!("{} {} {}i", num(z.re), if z.im < 0.0 { '-' } else { '+' }, num(z.im.abs()))
}

fn eval(a: EvalArgs) -> CmdResult {
    let Common { m, p } = a.common;
    let frame = match (&a.x, &a.y) {
        (Some(x), Some(y)) => {
            if x.len() != m || y.len() != m {
                return Err(format!("--x and --y need {m} components"));
            }
            frame_of(x, y).map_err(|e| e.to_string())?
        }
        _ => GeometricFrame::from_uv(a.u.unwrap_or_default(), a.v.unwrap_or_default()).map_err(|e| e.to_string())?,
    };
    let strategy: Strategy = a.rep.parse().map_err(|e: cfk_core::Error| e.to_string())?;
    let k = kernel(&KernelRequest::new(m, p, frame).with_tol(a.tol).with_strategy(strategy)).map_err(|e| e.to_string())?;
    let mut r = KernelReport::new(m, p, &frame, &k);
    r.x = a.x;
    r.y = a.y;
    if a.json {
        println!("{}", to_json(&r).map_err(|e| e.to_string())?);
    } else {
        println!("m = {m}, p = {}, u = {}, v = {}, t = {}", num(p), num(frame.u), num(frame.v), num(frame.t));
        println!("representation  {}", r.rep);
        println!("scalar          {}", complex(k.value.scalar));
        println!("x∧y coefficient {}", complex(k.value.bivector));
        println!("error estimate  {}", num(k.err_est));
    }
    Ok(Outcome::Done)
}

fn run_validate(a: ValidateArgs) -> CmdResult {
    let Common { m, p } = a.common;
    if m < 2 || !(a.tmax >= 0.0) || a.trials == 0 {
        return Err("validate needs m >= 2, tmax >= 0 and at least one trial".into());
    }
    let r = validate(m, p, a.trials, a.seed, a.tmax, a.tol, exec(a.sequential));
    println!(
        "m = {m}, p = {}, {} trials, {} comparisons, {} frames outside tolerance {:e}",
        num(p),
        r.trials,
        r.comparisons,
        r.failures,
        r.tolerance
    );
    match r.worst {
        Some(w) => println!(
            "worst pair      {} vs {}: {:e} at u = {}, v = {}",
            w.first,
            w.second,
            w.diff,
            num(w.frame.u),
            num(w.frame.v)
        ),
        None => println!("worst pair      none (a single representation applies)"),
    }
    Ok(if r.passed() { Outcome::Done } else { Outcome::Mismatch })
}

fn coeffs(a: CoeffsArgs) -> CmdResult {
    if a.max_m < 2 || !a.max_m.is_multiple_of(2) {
        return Err("--max-m must be an even number >= 2".into());
    }
    let frame = GeometricFrame::from_uv(a.u, a.v).map_err(|e| e.to_string())?;
    let values = genfun_coeffs(a.p, &frame, a.max_m / 2 - 1).map_err(|e| e.to_string())?;
    for (j, value) in values.into_iter().enumerate() {
        let m = 2 * j + 2;
        let k = cfk_core::KernelValue {
            value,
            strategy: Strategy::Genfun,
            err_est: 1e-12 * value.scalar.norm().max(value.bivector.norm()).max(1.0),
        };
        if a.json {
            println!("{}", to_json(&KernelReport::new(m, a.p, &frame, &k)).map_err(|e| e.to_string())?);
        } else {
            println!("m = {m:>2}  scalar {}  x∧y {}", complex(value.scalar), complex(value.bivector));
        }
    }
    Ok(Outcome::Done)
}

fn parse_s(s: &str) -> Result<Complex64, String> {
    let bad = || format!("--s expects RE,IM or RE, got `{s}`");
    let mut parts = s.split(',').map(|t| t.trim().parse::<f64>());
    let re = parts.next().ok_or_else(bad)?.map_err(|_| bad())?;
    let im = match parts.next() {
        Some(x) => x.map_err(|_| bad())?,
        None => 0.0,
    };
    if parts.next().is_some() {
        return Err(bad());
    }
    Ok(Complex64::new(re, im))
}

#[derive(Serialize)]
struct PlaneJson {
    scalar_re: f64,
    scalar_im: f64,
    bivec_re: f64,
    bivec_im: f64,
}

impl From<PlaneValue> for PlaneJson {
    fn from(v: PlaneValue) -> Self {
        Self {
            scalar_re: v.scalar.re,
            scalar_im: v.scalar.im,
            bivec_re: v.bivector.re,
            bivec_im: v.bivector.im,
        }
    }
}

#[derive(Serialize)]
struct LaplaceReport {
    m: usize,
    p: f64,
    u: f64,
    v: f64,
    t: f64,
    s_re: f64,
    s_im: f64,
    variant: String,
    principal_branch_only: bool,
    closed: PlaneJson,
    quadrature: Option<PlaneJson>,
    diff: Option<f64>,
}

fn laplace(a: LaplaceArgs) -> CmdResult {
    let Common { m, p } = a.common;
    let s = parse_s(&a.s)?;
    let variant: LaplaceVariant = a.variant.parse().map_err(|e: cfk_core::Error| e.to_string())?;
    let frame = GeometricFrame::from_uv(a.u, a.v).map_err(|e| e.to_string())?;
    let closed = laplace_kernel(m, p, s, &frame, variant).map_err(|e| e.to_string())?;
    let quad = match variant {
        LaplaceVariant::Oscillatory => Some(
            numeric_laplace_check(m, p, s, &frame, default_horizon(m, s, &frame), a.nodes).map_err(|e| e.to_string())?,
        ),
        LaplaceVariant::Exponential => None,
    };
    let diff = quad.map(|q| q.max_abs_diff(&closed.value));
    if a.json {
        let r = LaplaceReport {
            m,
            p,
            u: frame.u,
            v: frame.v,
            t: frame.t,
            s_re: s.re,
            s_im: s.im,
            variant: variant.to_string(),
            principal_branch_only: closed.principal_branch_only,
            closed: closed.value.into(),
            quadrature: quad.map(Into::into),
            diff,
        };
        println!("{}", to_json(&r).map_err(|e| e.to_string())?);
    } else {
        println!("closed      scalar {}  x∧y {}", complex(closed.value.scalar), complex(closed.value.bivector));
        match (quad, diff) {
            (Some(q), Some(d)) => {
                println!("quadrature  scalar {}  x∧y {}", complex(q.scalar), complex(q.bivector));
                println!("difference  {d:e} (tolerance {:e})", a.tol);
            }
            _ => println!("quadrature  not available for the exponential variant"),
        }
        if closed.principal_branch_only {
            println!("note        odd m: half-integer powers on the principal branch");
        }
    }
    Ok(match diff {
        Some(d) if !(d <= a.tol) => Outcome::Mismatch,
        _ => Outcome::Done,
    })
}

#[derive(Serialize)]
struct TransformPoint {
    y: Vec<f64>,
    re: Vec<f64>,
    im: Vec<f64>,
}

#[derive(Serialize)]
struct TransformOutput {
    dim: usize,
    p: f64,
    grid_order: usize,
    nodes: usize,
    results: Vec<TransformPoint>,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn transform(a: TransformArgs) -> CmdResult {
    let func: TransformInput = read_json(&a.input)?;
    func.validate()?;
    let targets: Vec<Vec<f64>> = read_json(&a.targets)?;
    let f = SampledFunction::tensor_hermite(func.dim, func.grid_order, |x| func.sample(x)).map_err(|e| e.to_string())?;
    let out = cft_apply(&f, a.p, &targets, exec(a.sequential)).map_err(|e| e.to_string())?;
    let results = targets
        .into_iter()
        .zip(out)
        .map(|(y, g)| TransformPoint {
            y,
            re: g.coeffs().iter().map(|c| c.re).collect(),
            im: g.coeffs().iter().map(|c| c.im).collect(),
        })
        .collect();
    let doc = TransformOutput {
        dim: func.dim,
        p: a.p,
        grid_order: func.grid_order,
        nodes: f.len(),
        results,
    };
    fs::write(&a.out, to_json(&doc).map_err(|e| e.to_string())? + "\n").map_err(|e| format!("{}: {e}", a.out.display()))?;
    Ok(Outcome::Done)
}

fn axis(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![lo];
    }
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

fn grid(a: GridArgs) -> CmdResult {
    let Common { m, p } = a.common;
    if a.nu == 0 || a.nv == 0 {
        return Err("--nu and --nv must be positive".into());
    }
    if !(a.vmin >= 0.0) || !(a.vmax >= a.vmin) || !(a.umax >= a.umin) {
        return Err("need umin <= umax and 0 <= vmin <= vmax".into());
    }
    let strategy: Strategy = a.rep.parse().map_err(|e: cfk_core::Error| e.to_string())?;
    let us = axis(a.umin, a.umax, a.nu);
    let vs = axis(a.vmin, a.vmax, a.nv);
    let rows = map_range(exec(a.sequential), us.len(), |i| -> Result<Vec<PlaneValue>, String> {
        vs.iter()
            .map(|&v| {
                let frame = GeometricFrame::from_uv(us[i], v).map_err(|e| e.to_string())?;
                let req = KernelRequest::new(m, p, frame).with_tol(a.tol).with_strategy(strategy);
                kernel(&req).map(|k| k.value).map_err(|e| format!("u = {}, v = {v}: {e}", us[i]))
            })
            .collect()
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let base = a.out.to_string_lossy();
    let base = base.strip_suffix(".csv").unwrap_or(&base);
    type Pick = fn(&PlaneValue) -> f64;
    let parts: [(&str, Pick); 4] = [
        ("scalar_re", |k| k.scalar.re),
        ("scalar_im", |k| k.scalar.im),
        ("bivec_re", |k| k.bivector.re),
        ("bivec_im", |k| k.bivector.im),
    ];
    for (name, pick) in parts {
        let mut text = String::from("u\\v");
        for v in &vs {
            text.push(',');
            text.push_str(&num(*v));
        }
        text.push('\n');
        for (u, row) in us.iter().zip(&rows) {
            text.push_str(&num(*u));
            for k in row {
                text.push(',');
                text.push_str(&num(pick(k)));
            }
            text.push('\n');
        }
        let path = format!("{base}_{name}.csv");
        fs::write(&path, text).map_err(|e| format!("{path}: {e}"))?;
    }
    Ok(Outcome::Done)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => eval(a),
        Command::Validate(a) => run_validate(a),
        Command::Coeffs(a) => coeffs(a),
        Command::Laplace(a) => laplace(a),
        Command::Transform(a) => transform(a),
        Command::Grid(a) => grid(a),
    };
    match result {
        Ok(Outcome::Done) => ExitCode::SUCCESS,
        Ok(Outcome::Mismatch) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
