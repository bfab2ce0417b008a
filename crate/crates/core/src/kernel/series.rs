use num_complex::Complex64;

use crate::clifford::{GeometricFrame, PlaneValue};
use crate::error::{Error, Result};
use crate::special::{bessel_ratio_orders, gamma, gegenbauer_all, ln_gamma, MAX_ORDER};

/// Terms below the tolerance required in a row before the series stops.
const CONFIRMATION_WINDOW: usize = 5;

/// Gegenbauer–Bessel series for `K_m^p`, `m ≥ 3`.
///
/// Returns the value and an estimate of the truncation plus rounding error.
pub fn kernel_series(m: usize, p: f64, frame: &GeometricFrame, tol: f64) -> Result<(PlaneValue, f64)> {
    if m < 3 {
        return Err(Error::SeriesNeedsDim3);
    }
    let mf = m as f64;
    let lambda = 0.5 * mf - 1.0;
    let t = frame.t;
    let cos_theta = frame.cos_theta;

    // a-priori bound on term k: 2 (k+λ+1) (t/2)^k / (2^λ Γ(λ+k+1)) · C_k^λ(1),
    // times the largest prefactor
    let pref = 2f64.powf(0.5 * mf - 1.0) * gamma(0.5 * mf);
    let ln_t2 = if t > 0.0 { (0.5 * t).ln() } else { f64::NEG_INFINITY };
    let bound = |k: usize| -> f64 {
        let kf = k as f64;
        let scale = -lambda * std::f64::consts::LN_2 - ln_gamma(lambda + kf + 1.0);
        // scalar terms: t^k R(λ+k, t) C_k^λ
        let ln_geg = ln_gamma(kf + 2.0 * lambda) - ln_gamma(2.0 * lambda) - ln_gamma(kf + 1.0);
        let scalar = if k == 0 {
            scale.exp()
        } else {
            (kf * ln_t2 + scale + ln_geg).exp()
        };
        // wedge terms: t^{k-1} R(λ+k, t) C_{k-1}^{m/2}
        let wedge = match k {
            0 => 0.0,
            1 => 0.5 * scale.exp(),
            _ => {
                let ln_geg_c = ln_gamma(kf + mf - 1.0) - ln_gamma(mf) - ln_gamma(kf);
                ((kf - 1.0) * ln_t2 - std::f64::consts::LN_2 + scale + ln_geg_c).exp()
            }
        };
        2.0 * pref * ((kf + lambda + 1.0) * scalar + wedge)
    };
    let mut k_max = 0;
    let mut quiet = 0;
    loop {
        if bound(k_max) < tol * 1e-2 {
            quiet += 1;
            if quiet >= CONFIRMATION_WINDOW {
                break;
            }
        } else {
            quiet = 0;
        }
        k_max += 1;
        if lambda + k_max as f64 > MAX_ORDER {
            return Err(Error::Envelope {
                function: "kernel_series",
                detail: format!("t = {t} needs Bessel orders beyond {MAX_ORDER}"),
            });
        }
    }
    let tail: f64 = (k_max + 1..k_max + 40).map(bound).sum();

    let ratios = bessel_ratio_orders(lambda, k_max, t)?;
    let geg = gegenbauer_all(k_max, lambda, cos_theta);
    let geg_c = gegenbauer_all(k_max, 0.5 * mf, cos_theta);

    let a_pref = -2f64.powf(0.5 * mf - 2.0) * gamma(0.5 * mf);
    let b_pref = 2f64.powf(0.5 * mf - 2.0) * gamma(0.5 * mf - 1.0);
    let c_pref = 2f64.powf(0.5 * mf - 1.0) * gamma(0.5 * mf);

    let mut scalar = Complex64::new(0.0, 0.0);
    let mut bivector = Complex64::new(0.0, 0.0);
    let mut magnitude = 0.0;
    let minus_i = Complex64::new(0.0, -1.0);
    let mut ik = Complex64::new(1.0, 0.0);
    let mut t_pow = 1.0;
    for k in 0..=k_max {
        let kf = k as f64;
        let ph1 = Complex64::new(0.0, p * (kf + mf - 2.0)).exp();
        let ph2 = Complex64::new(0.0, -p * kf).exp();
        // t^{-λ} J_{λ+k}(t) = t^k R(λ+k, t)
        let radial = t_pow * ratios[k];
        let a = a_pref * ik * (ph1 - ph2) * radial * geg[k];
        let b = b_pref * ik * (kf + lambda) * (ph1 + ph2) * radial * geg[k];
        scalar += a + b;
        magnitude += a.norm() + b.norm();
        if k >= 1 {
            // t^{-m/2} J_{λ+k}(t) = t^{k-1} R(λ+k, t)
            let radial_c = if k == 1 { ratios[k] } else { t.powi(k as i32 - 1) * ratios[k] };
            let c = c_pref * ik * (ph1 - ph2) * radial_c * geg_c[k - 1];
            bivector += c;
            magnitude += c.norm();
        }
        ik *= minus_i;
        t_pow *= t;
    }
    let err = tail + 4.0 * f64::EPSILON * (k_max as f64 + 1.0).sqrt() * magnitude;
    Ok((PlaneValue::new(scalar, bivector, *frame), err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn p_zero_is_plane_wave() {
        for m in 3..=8 {
            let f = GeometricFrame::from_uv(1.3, 0.8).unwrap();
            let (k, _) = kernel_series(m, 0.0, &f, 1e-14).unwrap();
            assert!((k.scalar - Complex64::new(0.0, -1.3).exp()).norm() < 1e-13, "m = {m}");
            assert!(k.bivector.norm() < 1e-13);
        }
    }

    #[test]
    fn four_dimensional_orthogonal_frame() {
        let f = GeometricFrame::from_uv(0.0, 1.0).unwrap();
        let (k, _) = kernel_series(4, FRAC_PI_2, &f, 1e-14).unwrap();
        assert!((k.scalar - 1f64.sin()).norm() < 1e-14);
        assert!(k.bivector.norm() < 1e-14);
    }

    #[test]
    fn rejects_dimension_two() {
        let f = GeometricFrame::from_uv(0.0, 1.0).unwrap();
        assert_eq!(kernel_series(2, 0.3, &f, 1e-12).unwrap_err(), Error::SeriesNeedsDim3);
    }
}
