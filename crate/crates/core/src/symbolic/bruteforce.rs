use num_complex::Complex64;

use super::gamma_op::{BladeSet, GammaMatrix};
use super::poly::{Monomial, PolyField};
use crate::clifford::{frame_of, GeometricFrame, Multivector, PlaneValue};
use crate::error::{Error, Result};

/// Tail bound required of the truncated exponential series.
pub const TAIL_BOUND: f64 = 1e-12;
/// Largest out-of-plane residual accepted before reporting a bug.
pub const PLANE_TOLERANCE: f64 = 1e-10;
const MAX_TRUNCATION: usize = 60;

/// Result of the operator-exponential oracle.
#[derive(Debug, Clone, Copy)]
pub struct BruteforceValue {
    pub value: PlaneValue,
    /// Largest coefficient found outside `span{1, x∧y}`.
    pub residual: f64,
    pub truncation: usize,
}

fn tail(t: f64, n: usize) -> f64 {
    (1..=n + 1).fold(1.0, |acc, j| acc * t / j as f64)
}

/// Smallest truncation degree with `t^{N+1}/(N+1)! < TAIL_BOUND`.
pub fn truncation_for(t: f64) -> Option<usize> {
    (0..=MAX_TRUNCATION).find(|&n| tail(t, n) < TAIL_BOUND)
}

/// `e^{ipΓ_y} e^{-i(x,y)}` by expanding the plane wave in homogeneous degrees
/// of `y`, exponentiating `Γ` on each degree and projecting onto
/// `span{1, x∧y}`.
///
/// The computation runs in coordinates where `x = |x| e_1` and
/// `y ∈ span{e_1, e_2}`; the coefficient of `x∧y` is read off by dividing the
/// `e_1 e_2` part exactly by `y_2`, so collinear and zero inputs are fine.
pub fn kernel_bruteforce(
    m: usize,
    p: f64,
    x: &[f64],
    y: &[f64],
    truncation: Option<usize>,
) -> Result<BruteforceValue> {
    let frame = frame_of(x, y)?;
    bruteforce_frame(m, p, &frame, truncation)
}

/// [`kernel_bruteforce`] for a frame given directly.
pub fn bruteforce_frame(
    m: usize,
    p: f64,
    frame: &GeometricFrame,
    truncation: Option<usize>,
) -> Result<BruteforceValue> {
    if m < 2 {
        return Err(Error::UnsupportedDimension {
            m,
            reason: "the plane x∧y needs m >= 2",
        });
    }
    let t = frame.t;
    let n = match truncation {
        Some(n) if tail(t, n) < TAIL_BOUND => n,
        Some(n) => {
            return Err(Error::TailGuard {
                degree: n,
                bound: tail(t, n),
            })
        }
        None => truncation_for(t).ok_or(Error::TailGuard {
            degree: MAX_TRUNCATION,
            bound: tail(t, MAX_TRUNCATION),
        })?,
    };
    // x = s e_1, y = (y1, y2, 0, ...)
    let s = t.sqrt();
    let (y1, y2) = if s > 0.0 {
        (frame.u / s, frame.v / s)
    } else {
        (0.0, 0.0)
    };
    let e12 = 0b11usize;
    let mut alpha = Complex64::new(0.0, 0.0);
    let mut beta = Complex64::new(0.0, 0.0);
    let mut residual: f64 = 0.0;
    let mut factorial = 1.0;
    for k in 0..=n {
        if k > 0 {
            factorial *= k as f64;
        }
        // (-i)^k (e_1, y)^k / k!
        let phase = Complex64::new(0.0, -1.0).powi(k as i32) / factorial;
        let mut start = vec![0u32; m];
        start[0] = k as u32;
        let op = GammaMatrix::new(m, k, BladeSet::Even)?;
        let seed = op.encode(&PolyField::monomial(Monomial(start), Multivector::scalar(m, 1.0)))?;
        let evolved = op.exp_apply(p, &seed)?;
        let blades = op.blades();
        let nb = blades.len();
        let mut part = vec![Complex64::new(0.0, 0.0); nb];
        let mut wedge = Complex64::new(0.0, 0.0);
        let mut stray_wedge = Complex64::new(0.0, 0.0);
        for (mi, mono) in op.monomials().iter().enumerate() {
            if mono.0[2..].iter().any(|&a| a > 0) {
                continue;
            }
            let (a1, a2) = (mono.0[0] as i32, mono.0[1] as i32);
            let w = y1.powi(a1) * y2.powi(a2);
            for (slot, &b) in blades.iter().enumerate() {
                let c = evolved[mi * nb + slot];
                if b as usize == e12 {
                    if a2 >= 1 {
                        wedge += c * y1.powi(a1) * y2.powi(a2 - 1);
                    } else {
                        stray_wedge += c * w;
                    }
                } else {
                    part[slot] += c * w;
                }
            }
        }
        let scale_k = s.powi(k as i32);
        alpha += phase * part[0] * scale_k;
        // x∧y = s y_2 e_1 e_2, so the e_1e_2 part is β s y_2
        if k >= 1 {
            beta += phase * wedge * s.powi(k as i32 - 1);
        }
        let stray = part
            .iter()
            .zip(blades)
            .filter(|(_, &b)| b != 0 && b as usize != e12)
            .map(|(c, _)| c.norm())
            .fold(stray_wedge.norm(), f64::max);
        residual = residual.max(stray * scale_k / factorial);
    }
    if residual > PLANE_TOLERANCE {
        return Err(Error::OutOfPlane(residual));
    }
    Ok(BruteforceValue {
        value: PlaneValue::new(alpha, beta, *frame),
        residual,
        truncation: n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_at_p_zero() {
        let x = [0.3, -1.1, 0.4];
        let y = [0.9, 0.2, -0.5];
        let r = kernel_bruteforce(3, 0.0, &x, &y, Some(25)).unwrap();
        let u: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        assert!((r.value.scalar - Complex64::new(0.0, -u).exp()).norm() < 1e-13);
        assert!(r.value.bivector.norm() < 1e-13);
    }

    #[test]
    fn two_dimensional_standard_kernel() {
        let r = kernel_bruteforce(2, std::f64::consts::FRAC_PI_2, &[1.0, 0.0], &[0.0, 1.0], Some(25)).unwrap();
        assert!((r.value.scalar - 1f64.cos()).norm() < 1e-12);
        assert!((r.value.bivector - 1f64.sin()).norm() < 1e-12);
    }

    #[test]
    fn tail_guard() {
        assert!(matches!(
            kernel_bruteforce(3, 0.2, &[2.0, 0.0, 0.0], &[2.0, 0.0, 0.0], Some(5)),
            Err(Error::TailGuard { .. })
        ));
    }
}
