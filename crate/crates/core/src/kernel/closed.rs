use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_complex::Complex64;

use crate::clifford::{GeometricFrame, PlaneValue};
use crate::error::{Error, Result};
use crate::special::{bessel_ratio, gamma};

use super::series::kernel_series;

/// Which factorial pattern the finite Bessel sums use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ClosedFormMode {
    /// Factorials `(m/2-1)!/(m/2-2l-2)!` in `A` and `(m/2-1)!/(m/2-2l-1)!`
    /// in `B`, `C`; agrees with the series and the operator definition.
    #[default]
    Corrected,
    /// Factorials `(m/2)!/(m/2-2l-1)!` in `A` and `(m/2)!/(m/2-2l)!` in
    /// `B`, `C`. Off from the series by a factor that depends on the frame
    /// and equals 2 only when `u = 0`.
    AsPrinted,
    /// The `AsPrinted` sums with the prefactor replaced by a constant fitted
    /// to the series at the reference frame `(u, v) = (0.3, 0.7)`.
    Calibrated,
}

/// Frame at which [`ClosedFormMode::Calibrated`] is fitted.
pub const CALIBRATION_FRAME: (f64, f64) = (0.3, 0.7);

static CALIBRATION: OnceLock<Mutex<HashMap<usize, f64>>> = OnceLock::new();

/// The fitted prefactor `c_m` of [`ClosedFormMode::Calibrated`], computed
/// once per dimension.
pub fn calibration_constant(m: usize) -> Result<f64> {
    let cache = CALIBRATION.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(&c) = cache.lock().expect("calibration cache").get(&m) {
        return Ok(c);
    }
    let frame = GeometricFrame::from_uv(CALIBRATION_FRAME.0, CALIBRATION_FRAME.1)?;
    let (a, b, _) = bessel_sums(m, &frame, ClosedFormMode::AsPrinted)?;
    let (series, _) = kernel_series(m, std::f64::consts::FRAC_PI_2, &frame, 1e-14)?;
    let c = series.scalar.re / (a + b);
    cache.lock().expect("calibration cache").insert(m, c);
    Ok(c)
}

fn factorial(n: usize) -> f64 {
    gamma(n as f64 + 1.0)
}

/// Finite Bessel-sum form of the standard kernel (`p = π/2`) for `m ≡ 0 mod 4`.
pub fn kernel_closed_even(m: usize, frame: &GeometricFrame, mode: ClosedFormMode) -> Result<PlaneValue> {
    let (a, b, c) = bessel_sums(m, frame, mode)?;
    let pref = match mode {
        ClosedFormMode::Calibrated => calibration_constant(m)?,
        _ => (std::f64::consts::PI / 2.0).sqrt(),
    };
    Ok(PlaneValue::new(
        Complex64::new(pref * (a + b), 0.0),
        Complex64::new(pref * c, 0.0),
        *frame,
    ))
}

/// The three Bessel sums `A`, `B`, `C` without the prefactor.
fn bessel_sums(m: usize, frame: &GeometricFrame, mode: ClosedFormMode) -> Result<(f64, f64, f64)> {
    if m == 0 || !m.is_multiple_of(4) {
        return Err(Error::UnsupportedDimension {
            m,
            reason: "the finite Bessel sum needs m divisible by 4",
        });
    }
    let h = m / 2;
    let (u, v) = (frame.u, frame.v);
    let mut a = 0.0;
    let mut b = 0.0;
    let mut c = 0.0;
    for l in 0..m / 4 {
        let lf = l as f64;
        let weight = 1.0 / (2f64.powi(l as i32) * factorial(l));
        let (fa, fbc) = match mode {
            ClosedFormMode::Corrected => (
                factorial(h - 1) / factorial(h - 2 * l - 2),
                factorial(h - 1) / factorial(h - 2 * l - 1),
            ),
            ClosedFormMode::AsPrinted | ClosedFormMode::Calibrated => (
                factorial(h) / factorial(h - 2 * l - 1),
                factorial(h) / factorial(h - 2 * l),
            ),
        };
        let nu_ab = (m as f64 - 2.0 * lf - 3.0) / 2.0;
        let nu_c = (m as f64 - 2.0 * lf - 1.0) / 2.0;
        let r_ab = bessel_ratio(nu_ab, v)?;
        let r_c = bessel_ratio(nu_c, v)?;
        a += u.powi((h - 2 - 2 * l) as i32) * weight * fa * r_ab;
        b -= u.powi((h - 1 - 2 * l) as i32) * weight * fbc * r_ab;
        c -= u.powi((h - 1 - 2 * l) as i32) * weight * fbc * r_c;
    }
    Ok((a, b, c))
}

/// Ratio of the two modes' scalar parts, `AsPrinted / Corrected`, at a frame.
pub fn closed_form_normalization(m: usize, frame: &GeometricFrame) -> Result<f64> {
    let printed = kernel_closed_even(m, frame, ClosedFormMode::AsPrinted)?;
    let corrected = kernel_closed_even(m, frame, ClosedFormMode::Corrected)?;
    Ok(printed.scalar.re / corrected.scalar.re)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orthogonal_unit_frame() {
        let f = GeometricFrame::from_uv(0.0, 1.0).unwrap();
        let printed = kernel_closed_even(4, &f, ClosedFormMode::AsPrinted).unwrap();
        assert!((printed.scalar.re - 2.0 * 1f64.sin()).abs() < 1e-15);
        let fixed = kernel_closed_even(4, &f, ClosedFormMode::Corrected).unwrap();
        assert!((fixed.scalar.re - 1f64.sin()).abs() < 1e-15);
        assert!(fixed.bivector.norm() == 0.0);
    }

    #[test]
    fn origin_is_one() {
        let f = GeometricFrame::from_uv(0.0, 0.0).unwrap();
        for m in [4, 8, 12] {
            let k = kernel_closed_even(m, &f, ClosedFormMode::Corrected).unwrap();
            assert!((k.scalar.re - 1.0).abs() < 1e-15, "m = {m}");
        }
    }

    #[test]
    fn calibration_matches_at_reference_frame() {
        let f = GeometricFrame::from_uv(CALIBRATION_FRAME.0, CALIBRATION_FRAME.1).unwrap();
        let c = kernel_closed_even(4, &f, ClosedFormMode::Calibrated).unwrap();
        let (s, _) = kernel_series(4, std::f64::consts::FRAC_PI_2, &f, 1e-14).unwrap();
        assert!((c.scalar - s.scalar).norm() < 1e-14);
    }

    #[test]
    fn rejects_other_dimensions() {
        let f = GeometricFrame::from_uv(0.0, 1.0).unwrap();
        assert!(kernel_closed_even(6, &f, ClosedFormMode::Corrected).is_err());
    }
}
