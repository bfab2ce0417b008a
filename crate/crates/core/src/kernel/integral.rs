use num_complex::Complex64;

use crate::clifford::{GeometricFrame, PlaneValue};
use crate::error::{Error, Result};
use crate::special::{bessel_j, gauss_legendre, QuadratureRule};

/// Default node count of the finer rule.
pub const DEFAULT_NODES: usize = 64;
const MAX_NODES: usize = 512;

/// The four integrals of one exponential group, on `[0, π/2]` after
/// `s = sin²φ`.
struct Group {
    j1: f64,
    j0_low: f64,
    j0_high: f64,
}

fn group(m: usize, frame: &GeometricFrame, sigma: f64, rule: &QuadratureRule) -> Result<Group> {
    let mut g = Group {
        j1: 0.0,
        j0_low: 0.0,
        j0_high: 0.0,
    };
    let t = frame.t;
    for (&phi, &w) in rule.nodes.iter().zip(&rule.weights) {
        let (sin, cos) = phi.sin_cos();
        let s2 = sin * sin;
        let root = (1.0 + s2).sqrt();
        // √(1 - s²) with s = sin²φ
        let r = cos * root;
        let e = (sigma * frame.u * s2).exp();
        let j0 = bessel_j(0.0, t * r)?;
        let j1 = bessel_j(1.0, t * r)?;
        let sm3 = sin.powi(m as i32 - 3);
        g.j1 += w * j1 * sm3 * s2 * 2.0 / root * e;
        g.j0_low += w * j0 * 2.0 * sm3 * cos * e;
        g.j0_high += w * j0 * 2.0 * sm3 * s2 * cos * e;
    }
    Ok(g)
}

fn evaluate(m: usize, frame: &GeometricFrame, rule: &QuadratureRule) -> Result<PlaneValue> {
    let mf = m as f64;
    let t = frame.t;
    let combine = |sigma: f64, g: &Group, low_sign: f64| -> (f64, f64) {
        let scalar = 0.5 * (sigma * frame.u).exp() - 0.5 * t * g.j1 + low_sign * 0.25 * (mf - 2.0) * g.j0_low;
        (scalar, 0.5 * g.j0_high)
    };
    let minus = group(m, frame, -1.0, rule)?;
    let plus = group(m, frame, 1.0, rule)?;
    let (s1, w1) = combine(-1.0, &minus, 1.0);
    let (s2, w2) = combine(1.0, &plus, -1.0);
    let phase = Complex64::new(0.0, 0.5 * mf * std::f64::consts::PI).exp();
    Ok(PlaneValue::new(
        Complex64::new(s1, 0.0) - phase * s2,
        Complex64::new(w1, 0.0) - phase * w2,
        *frame,
    ))
}

fn phi_rule(n: usize) -> Result<QuadratureRule> {
    Ok(gauss_legendre(n)?.mapped(0.0, std::f64::consts::FRAC_PI_2))
}

/// Integral representation of the standard kernel (`p = π/2`) for `m ≥ 3`,
/// with `n` Gauss–Legendre nodes. The error estimate compares against a rule
/// with half as many nodes; it errors if that exceeds `tol`.
pub fn kernel_integral(m: usize, frame: &GeometricFrame, n: usize, tol: f64) -> Result<(PlaneValue, f64)> {
    if m == 2 {
        return Err(Error::Divergent);
    }
    if m < 2 {
        return Err(Error::UnsupportedDimension {
            m,
            reason: "the integral representation needs m >= 3",
        });
    }
    let fine = evaluate(m, frame, &phi_rule(n)?)?;
    let coarse = evaluate(m, frame, &phi_rule(n.div_ceil(2))?)?;
    let estimate = fine.max_abs_diff(&coarse);
    if estimate > tol {
        return Err(Error::QuadratureTolerance { estimate, tol });
    }
    Ok((fine, estimate))
}

/// [`kernel_integral`] with the node count doubled until the estimate
/// falls below `tol`.
pub fn kernel_integral_auto(m: usize, frame: &GeometricFrame, tol: f64) -> Result<(PlaneValue, f64)> {
    let mut n = (DEFAULT_NODES + 2 * frame.t.ceil() as usize).min(MAX_NODES);
    loop {
        match kernel_integral(m, frame, n, tol) {
            Err(Error::QuadratureTolerance { .. }) if n < MAX_NODES => n = (2 * n).min(MAX_NODES),
            other => return other,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn origin() {
        let f = GeometricFrame::from_uv(0.0, 0.0).unwrap();
        for m in 3..=8 {
            let (k, _) = kernel_integral(m, &f, 64, 1e-10).unwrap();
            assert!((k.scalar - 1.0).norm() < 1e-12, "m = {m}: {:?}", k.scalar);
        }
    }

    #[test]
    fn four_dimensional_orthogonal_frame() {
        let f = GeometricFrame::from_uv(0.0, 1.0).unwrap();
        let (k, _) = kernel_integral(4, &f, 64, 1e-10).unwrap();
        assert!((k.scalar - 1f64.sin()).norm() < 1e-13);
        assert!(k.bivector.norm() < 1e-13);
    }

    #[test]
    fn divergent_in_two_dimensions() {
        let f = GeometricFrame::from_uv(0.0, 1.0).unwrap();
        assert_eq!(kernel_integral(2, &f, 64, 1e-8).unwrap_err(), Error::Divergent);
    }
}
