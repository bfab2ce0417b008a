//! Laplace-domain kernel `L(τ^{m/2-1} K_m^p(τx, y))(s)` in closed form and by
//! direct quadrature.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::clifford::{GeometricFrame, PlaneValue};
use crate::error::{Error, Result};
use crate::kernel::{kernel, KernelRequest};
use crate::parallel::{chunked_sum, Execution};
use crate::special::{composite_legendre, gamma};

/// Which exponential the transformed kernel starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LaplaceVariant {
    /// `e^{ipΓ} e^{-iτ(x,y)}`, the Clifford–Fourier kernel.
    #[default]
    Oscillatory,
    /// `e^{ipΓ} e^{τ(x,y)}`.
    Exponential,
}

impl fmt::Display for LaplaceVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LaplaceVariant::Oscillatory => "oscillatory",
            LaplaceVariant::Exponential => "exponential",
        })
    }
}

impl FromStr for LaplaceVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oscillatory" => Ok(LaplaceVariant::Oscillatory),
            "exponential" => Ok(LaplaceVariant::Exponential),
            _ => Err(Error::InvalidArgument(format!("unknown Laplace variant '{s}'"))),
        }
    }
}

/// A Laplace-domain kernel value.
#[derive(Debug, Clone, Copy)]
pub struct LaplaceDomainValue {
    pub s: Complex64,
    pub value: PlaneValue,
    /// Set for odd `m`, where the half-integer power is taken on the
    /// principal branch without an independent guarantee.
    pub principal_branch_only: bool,
}

/// Frame data with possibly complex entries: `(x,y) = u`, `|x|²|y|² = t2`
/// and `yx = -u - w·W`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct ComplexFrame {
    pub u: Complex64,
    pub t2: Complex64,
    pub w: Complex64,
}

impl ComplexFrame {
    pub fn real(frame: &GeometricFrame) -> Self {
        Self {
            u: frame.u.into(),
            t2: (frame.t * frame.t).into(),
            w: 1.0.into(),
        }
    }
}

fn check_abscissa(s: Complex64, frame: &GeometricFrame) -> Result<()> {
    if !(s.re > frame.t) || !s.im.is_finite() {
        return Err(Error::Abscissa { re_s: s.re, t: frame.t });
    }
    Ok(())
}

/// The oscillatory two-term expression evaluated on a complex frame.
/// Returns the scalar part and the coefficient of `W`.
pub(crate) fn oscillatory_on(m: usize, p: f64, s: Complex64, f: ComplexFrame) -> (Complex64, Complex64) {
    let i = Complex64::i();
    let half = m as f64 / 2.0;
    let root = (s * s + f.t2).sqrt();
    let (sp, cp) = p.sin_cos();
    let eip = Complex64::from_polar(1.0, p);
    let emp = eip.conj();
    // -i e^{-ip} yx = i e^{-ip}(u + wW)
    let shift_s = i * emp * f.u;
    let shift_w = i * emp * f.w;
    let d1 = (emp * (s * cp + i * root * sp + i * f.u)).powf(half);
    let d2 = (eip * (s * cp - i * root * sp + i * f.u)).powf(half);
    let phase = Complex64::from_polar(1.0, m as f64 * p);
    let pre = gamma(half) / (2.0 * root);
    let scalar = pre * ((s + root + shift_s) / d1 - phase * (s - root + shift_s) / d2);
    let wedge = pre * shift_w * (1.0 / d1 - phase / d2);
    (scalar, wedge)
}

/// The exponential-variant expression on a real frame, written with
/// `√(s² - t²)` and `e^{-ip} yx` numerators.
fn exponential_on(m: usize, p: f64, s: Complex64, frame: &GeometricFrame) -> (Complex64, Complex64) {
    let i = Complex64::i();
    let half = m as f64 / 2.0;
    let u = Complex64::from(frame.u);
    let root = (s * s - frame.t * frame.t).sqrt();
    let (sp, cp) = p.sin_cos();
    let eip = Complex64::from_polar(1.0, p);
    let emp = eip.conj();
    // e^{-ip} yx = -e^{-ip}(u + W)
    let shift_s = -emp * u;
    let shift_w = -emp;
    let d1 = (emp * (s * cp + i * root * sp - u)).powf(half);
    let d2 = (eip * (s * cp - i * root * sp - u)).powf(half);
    let phase = Complex64::from_polar(1.0, m as f64 * p);
    let pre = gamma(half) / (2.0 * root);
    let scalar = pre * ((s + root + shift_s) / d1 - phase * (s - root + shift_s) / d2);
    let wedge = pre * shift_w * (1.0 / d1 - phase / d2);
    (scalar, wedge)
}

/// Closed-form Laplace-domain kernel. Requires `Re s > t`.
pub fn laplace_kernel(
    m: usize,
    p: f64,
    s: Complex64,
    frame: &GeometricFrame,
    variant: LaplaceVariant,
) -> Result<LaplaceDomainValue> {
    if m < 2 {
        return Err(Error::UnsupportedDimension {
            m,
            reason: "the Laplace-domain kernel needs m >= 2",
        });
    }
    check_abscissa(s, frame)?;
    let (scalar, wedge) = match variant {
        LaplaceVariant::Oscillatory => oscillatory_on(m, p, s, ComplexFrame::real(frame)),
        LaplaceVariant::Exponential => exponential_on(m, p, s, frame),
    };
    Ok(LaplaceDomainValue {
        s,
        value: PlaneValue::new(scalar, wedge, *frame),
        principal_branch_only: m % 2 == 1,
    })
}

/// Horizon for which `e^{-(Re s - t) T} ≈ e^{-(30 + m)}`.
pub fn default_horizon(m: usize, s: Complex64, frame: &GeometricFrame) -> f64 {
    (30.0 + m as f64) / (s.re - frame.t)
}

const PANEL_NODES: usize = 16;

/// `∫_0^T e^{-sτ} τ^{m/2-1} K_m^p(τ·frame) dτ` by composite Gauss–Legendre
/// with about `n` nodes, using `τ = σ²` so odd `m` has a smooth integrand.
pub fn numeric_laplace_check(
    m: usize,
    p: f64,
    s: Complex64,
    frame: &GeometricFrame,
    horizon: f64,
    n: usize,
) -> Result<PlaneValue> {
    check_abscissa(s, frame)?;
    let decay = (-(s.re - frame.t) * horizon).exp();
    if !(decay < 1e-12) {
        return Err(Error::Horizon(decay));
    }
    let panels = n.div_ceil(PANEL_NODES).max(1);
    let rule = composite_legendre(0.0, horizon.sqrt(), panels, PANEL_NODES)?;
    let values: Vec<Result<PlaneValue>> = crate::parallel::map_range(Execution::Parallel, rule.len(), |j| {
        let sigma = rule.nodes[j];
        let tau = sigma * sigma;
        let req = KernelRequest::new(m, p, frame.scaled(tau)).with_tol(1e-13);
        let k = kernel(&req)?.value;
        let weight = rule.weights[j] * 2.0 * sigma.powi(m as i32 - 1);
        let factor = (-s * tau).exp() * weight;
        // the wedge of the scaled pair is τ times the original one
        Ok(PlaneValue::new(k.scalar * factor, k.bivector * factor * tau, *frame))
    });
    let values = values.into_iter().collect::<Result<Vec<_>>>()?;
    Ok(chunked_sum(Execution::Parallel, values.len(), PlaneValue::zero(*frame), |j| values[j]))
}
