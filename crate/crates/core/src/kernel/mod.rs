//! Direct representations of `K_m^p(x, y) = e^{ipΓ_y} e^{-i(x,y)}` and a
//! dispatcher choosing among them.

mod closed;
mod dim2;
mod integral;
mod series;

use std::fmt;
use std::str::FromStr;

pub use closed::{calibration_constant, closed_form_normalization, kernel_closed_even, ClosedFormMode, CALIBRATION_FRAME};
pub use dim2::kernel_dim2;
pub use integral::{kernel_integral, kernel_integral_auto, DEFAULT_NODES};
pub use series::kernel_series;

use crate::clifford::{GeometricFrame, PlaneValue};
use crate::error::{Error, Result};
use crate::genfun::genfun_coeffs;
use crate::symbolic::bruteforce_frame;

pub const MIN_TOL: f64 = 1e-14;
pub const MAX_TOL: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Strategy {
    #[default]
    Auto,
    Series,
    ClosedEven,
    Integral,
    Genfun,
    Bruteforce,
    /// Exact two-dimensional form; only reported, chosen by `Auto`.
    Dim2,
}

impl Strategy {
    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Auto => "auto",
            Strategy::Series => "series",
            Strategy::ClosedEven => "closed",
            Strategy::Integral => "integral",
            Strategy::Genfun => "genfun",
            Strategy::Bruteforce => "bruteforce",
            Strategy::Dim2 => "dim2",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Strategy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "auto" => Strategy::Auto,
            "series" => Strategy::Series,
            "closed" | "closed_even" => Strategy::ClosedEven,
            "integral" => Strategy::Integral,
            "genfun" => Strategy::Genfun,
            "bruteforce" => Strategy::Bruteforce,
            "dim2" => Strategy::Dim2,
            other => return Err(Error::InvalidArgument(format!("unknown representation `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelRequest {
    pub m: usize,
    pub p: f64,
    pub frame: GeometricFrame,
    pub tol: f64,
    pub strategy: Strategy,
}

impl KernelRequest {
    pub fn new(m: usize, p: f64, frame: GeometricFrame) -> Self {
        Self {
            m,
            p,
            frame,
            tol: 1e-12,
            strategy: Strategy::Auto,
        }
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn with_strategy(mut self, strategy: Strategy) -> Self {
        self.strategy = strategy;
        self
    }
}

/// A kernel value with the representation that produced it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelValue {
    pub value: PlaneValue,
    pub strategy: Strategy,
    pub err_est: f64,
}

/// Whether `p` is the standard angle `π/2`.
pub fn is_standard_angle(p: f64) -> bool {
    (p - std::f64::consts::FRAC_PI_2).abs() <= 4.0 * f64::EPSILON
}

fn resolve(req: &KernelRequest) -> Strategy {
    match req.strategy {
        Strategy::Auto if req.m == 2 => Strategy::Dim2,
        Strategy::Auto if req.m.is_multiple_of(4) && is_standard_angle(req.p) => Strategy::ClosedEven,
        Strategy::Auto => Strategy::Series,
        other => other,
    }
}

/// Evaluates the kernel with the requested (or automatically chosen)
/// representation.
pub fn kernel(req: &KernelRequest) -> Result<KernelValue> {
    if !(MIN_TOL..=MAX_TOL).contains(&req.tol) {
        return Err(Error::InvalidArgument(format!(
            "tolerance {} outside [{MIN_TOL}, {MAX_TOL}]",
            req.tol
        )));
    }
    if req.m < 2 {
        return Err(Error::UnsupportedDimension {
            m: req.m,
            reason: "kernels are defined for m >= 2",
        });
    }
    let strategy = resolve(req);
    let frame = &req.frame;
    let (value, err_est) = match strategy {
        Strategy::Dim2 => {
            if req.m != 2 {
                return Err(Error::UnsupportedDimension {
                    m: req.m,
                    reason: "the exact form is two-dimensional",
                });
            }
            (kernel_dim2(req.p, frame), 4.0 * f64::EPSILON)
        }
        Strategy::Series => {
            if req.m == 2 {
                (kernel_dim2(req.p, frame), 4.0 * f64::EPSILON)
            } else {
                kernel_series(req.m, req.p, frame, req.tol)?
            }
        }
        Strategy::ClosedEven => {
            require_standard(req, "closed")?;
            let v = kernel_closed_even(req.m, frame, ClosedFormMode::Corrected)?;
            (v, 1e-14 * v.scalar.norm().max(v.bivector.norm()).max(1.0))
        }
        Strategy::Integral => {
            require_standard(req, "integral")?;
            kernel_integral_auto(req.m, frame, req.tol)?
        }
        Strategy::Genfun => {
            if !req.m.is_multiple_of(2) {
                return Err(Error::UnsupportedDimension {
                    m: req.m,
                    reason: "the generating function only produces even dimensions",
                });
            }
            let coeffs = genfun_coeffs(req.p, frame, req.m / 2 - 1)?;
            let v = coeffs[req.m / 2 - 1];
            (v, 1e-12 * v.scalar.norm().max(v.bivector.norm()).max(1.0))
        }
        Strategy::Bruteforce => {
            let b = bruteforce_frame(req.m, req.p, frame, None)?;
            (b.value, b.residual + 1e-12)
        }
        Strategy::Auto => unreachable!("resolved above"),
    };
    Ok(KernelValue {
        value,
        strategy,
        err_est,
    })
}

fn require_standard(req: &KernelRequest, name: &str) -> Result<()> {
    if is_standard_angle(req.p) {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "the {name} representation is only available at p = π/2"
        )))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn dispatch() {
        let f = GeometricFrame::from_uv(0.2, 0.9).unwrap();
        assert_eq!(kernel(&KernelRequest::new(2, FRAC_PI_2, f)).unwrap().strategy, Strategy::Dim2);
        assert_eq!(kernel(&KernelRequest::new(4, FRAC_PI_2, f)).unwrap().strategy, Strategy::ClosedEven);
        assert_eq!(kernel(&KernelRequest::new(7, 0.3, f)).unwrap().strategy, Strategy::Series);
    }

    #[test]
    fn tolerance_range() {
        let f = GeometricFrame::from_uv(0.2, 0.9).unwrap();
        assert!(kernel(&KernelRequest::new(4, 0.3, f).with_tol(1e-16)).is_err());
        assert!(kernel(&KernelRequest::new(4, 0.3, f).with_tol(0.1)).is_err());
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in ["auto", "series", "closed", "integral", "genfun", "bruteforce", "dim2"] {
            assert_eq!(s.parse::<Strategy>().unwrap().as_str(), s);
        }
    }
}
