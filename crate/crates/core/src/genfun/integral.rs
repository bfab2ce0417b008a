use num_complex::Complex64;

use crate::clifford::{GeometricFrame, PlaneValue};
use crate::error::{Error, Result};
use crate::special::{bessel_j, gauss_legendre, QuadratureRule};

fn evaluate(frame: &GeometricFrame, a: f64, rule: &QuadratureRule) -> Result<PlaneValue> {
    let (u, t) = (frame.u, frame.t);
    let b = u - a;
    let mut j1_cosh = 0.0;
    let mut sinh_j1 = 0.0;
    let mut j0_cosh = 0.0;
    for (&th, &w) in rule.nodes.iter().zip(&rule.weights) {
        let (s, co) = th.sin_cos();
        let ch = (b * s).cosh();
        j1_cosh += w * bessel_j(1.0, t * co)? * ch;
        sinh_j1 += w * (b * co).sinh() * bessel_j(1.0, t * s)? * co;
        j0_cosh += w * bessel_j(0.0, t * co)? * ch * co;
    }
    // the wedge enters through -yx = u + x∧y
    let scalar = (a - u).exp() - t * j1_cosh + t * sinh_j1 + u * j0_cosh;
    Ok(PlaneValue::new(
        Complex64::new(scalar, 0.0),
        Complex64::new(j0_cosh, 0.0),
        *frame,
    ))
}

/// Integral form of `G_{π/2}(x, y, a)` for real `a`, with `n` Gauss–Legendre
/// nodes on `θ ∈ [0, π/2]` and an error estimate from a half-size rule.
pub fn genfun_integral(frame: &GeometricFrame, a: f64, n: usize, tol: f64) -> Result<(PlaneValue, f64)> {
    let rule = |k: usize| -> Result<QuadratureRule> {
        Ok(gauss_legendre(k)?.mapped(0.0, std::f64::consts::FRAC_PI_2))
    };
    let fine = evaluate(frame, a, &rule(n)?)?;
    let coarse = evaluate(frame, a, &rule(n.div_ceil(2))?)?;
    let estimate = fine.max_abs_diff(&coarse);
    if estimate > tol {
        return Err(Error::QuadratureTolerance { estimate, tol });
    }
    Ok((fine, estimate))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::genfun_closed;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn orthogonal_unit_frame() {
        let f = GeometricFrame::from_uv(0.0, 1.0).unwrap();
        let (g, _) = genfun_integral(&f, 0.0, 48, 1e-10).unwrap();
        assert!((g.scalar - 1f64.cos()).norm() < 1e-8);
        assert!((g.bivector - 1f64.sin()).norm() < 1e-8);
    }

    #[test]
    fn origin_is_boundary_term() {
        let f = GeometricFrame::from_uv(0.0, 0.0).unwrap();
        let (g, _) = genfun_integral(&f, 0.5, 32, 1e-12).unwrap();
        assert!((g.scalar - 0.5f64.exp()).norm() < 1e-14);
    }

    #[test]
    fn matches_closed_form() {
        let f = GeometricFrame::from_uv(1.2, 2.0).unwrap();
        let (g, _) = genfun_integral(&f, 0.5, 64, 1e-10).unwrap();
        let closed = genfun_closed(FRAC_PI_2, &f, Complex64::new(0.5, 0.0));
        assert!(g.max_abs_diff(&closed) < 1e-7);
    }
}
