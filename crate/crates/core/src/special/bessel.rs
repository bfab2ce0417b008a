use super::gamma::{gamma, ln_gamma};
use crate::error::{Error, Result};

/// Largest order accepted by the Bessel routines.
pub const MAX_ORDER: f64 = 250.0;
/// Largest argument accepted by the Bessel routines.
pub const MAX_ARG: f64 = 250.0;

fn check_envelope(function: &'static str, nu: f64, z: f64) -> Result<()> {
    if !((0.0..=MAX_ORDER).contains(&nu) && (0.0..=MAX_ARG).contains(&z)) {
        return Err(Error::Envelope {
            function,
            detail: format!("nu = {nu}, z = {z} outside [0, {MAX_ORDER}] x [0, {MAX_ARG}]"),
        });
    }
    Ok(())
}

/// The power series converges without harmful cancellation here.
fn use_series(nu: f64, z: f64) -> bool {
    z <= 2.0 || 0.25 * z * z <= nu + 1.0
}

/// `Σ_k (-1)^k (z²/4)^k / (k! (ν+1)_k)`, so `J_ν(z) = (z/2)^ν/Γ(ν+1) · S`.
fn reduced_series(nu: f64, z: f64) -> f64 {
    let q = -0.25 * z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..500 {
        let kf = k as f64;
        term *= q / (kf * (nu + kf));
        sum += term;
        if term.abs() <= 1e-17 * sum.abs() {
            break;
        }
    }
    sum
}

/// `1/(2^ν Γ(ν+1))`, computed in log space for large orders.
fn ratio_at_zero(nu: f64) -> f64 {
    if nu < 150.0 {
        1.0 / (2f64.powf(nu) * gamma(nu + 1.0))
    } else {
        (-nu * std::f64::consts::LN_2 - ln_gamma(nu + 1.0)).exp()
    }
}

/// Miller's backward recurrence, returning `J_{ν0+k}(z)` for `k = 0..=n`
/// with `0 ≤ ν0 < 1` and `z > 0`.
fn miller(nu0: f64, n: usize, z: f64) -> Vec<f64> {
    let top = (n as f64).max(z);
    let mut start = (top + 30.0 + 6.0 * top.cbrt() + 2.0 * top.sqrt()).ceil() as usize;
    start += start % 2;
    let mut vals = vec![0.0; start + 2];
    vals[start + 1] = 0.0;
    vals[start] = 1e-300;
    for k in (1..=start).rev() {
        let order = nu0 + k as f64;
        vals[k - 1] = 2.0 * order / z * vals[k] - vals[k + 1];
        if vals[k - 1].abs() > 1e250 {
            for v in vals[k - 1..].iter_mut() {
                *v *= 1e-250;
            }
        }
    }
    // Σ_k (ν0+2k) Γ(ν0+k)/k! J_{ν0+2k} = (z/2)^{ν0}; J_0 + 2 Σ J_{2k} = 1 at ν0 = 0.
    let mut norm = 0.0;
    if nu0 == 0.0 {
        norm = vals[0];
        for k in (2..=start).step_by(2) {
            norm += 2.0 * vals[k];
        }
    } else {
        let mut weight = gamma(nu0 + 1.0);
        norm += weight * vals[0];
        let mut ratio = gamma(nu0);
        for j in 1..=start / 2 {
            let jf = j as f64;
            ratio *= (nu0 + jf - 1.0) / jf;
            weight = (nu0 + 2.0 * jf) * ratio;
            norm += weight * vals[2 * j];
        }
        norm /= (0.5 * z).powf(nu0);
    }
    vals.truncate(n + 1);
    for v in vals.iter_mut() {
        *v /= norm;
    }
    vals
}

/// Bessel function of the first kind `J_ν(z)` for real `ν, z ≥ 0`.
pub fn bessel_j(nu: f64, z: f64) -> Result<f64> {
    check_envelope("bessel_j", nu, z)?;
    if z == 0.0 {
        return Ok(if nu == 0.0 { 1.0 } else { 0.0 });
    }
    if use_series(nu, z) {
        let lead = if nu < 150.0 && z > 1e-30 {
            (0.5 * z).powf(nu) / gamma(nu + 1.0)
        } else {
            (nu * (0.5 * z).ln() - ln_gamma(nu + 1.0)).exp()
        };
        return Ok(lead * reduced_series(nu, z));
    }
    let nu0 = nu.fract();
    let n = nu.trunc() as usize;
    Ok(miller(nu0, n, z)[n])
}

/// `J_ν(z)/z^ν`, equal to `1/(2^ν Γ(ν+1))` at the origin.
pub fn bessel_ratio(nu: f64, z: f64) -> Result<f64> {
    check_envelope("bessel_ratio", nu, z)?;
    if use_series(nu, z) {
        return Ok(ratio_at_zero(nu) * reduced_series(nu, z));
    }
    let j = bessel_j(nu, z)?;
    Ok(j * (-nu * z.ln()).exp())
}

/// `J_{ν+k}(z)` for `k = 0..=n`, sharing one recurrence.
pub fn bessel_j_orders(nu: f64, n: usize, z: f64) -> Result<Vec<f64>> {
    check_envelope("bessel_j_orders", nu + n as f64, z)?;
    check_envelope("bessel_j_orders", nu, z)?;
    if z == 0.0 || use_series(nu, z) {
        return (0..=n).map(|k| bessel_j(nu + k as f64, z)).collect();
    }
    let nu0 = nu.fract();
    let base = nu.trunc() as usize;
    let mut all = miller(nu0, base + n, z);
    Ok(all.split_off(base))
}

/// `J_{ν+k}(z)/z^{ν+k}` for `k = 0..=n`.
pub fn bessel_ratio_orders(nu: f64, n: usize, z: f64) -> Result<Vec<f64>> {
    check_envelope("bessel_ratio_orders", nu + n as f64, z)?;
    if z == 0.0 || use_series(nu, z) {
        return (0..=n).map(|k| bessel_ratio(nu + k as f64, z)).collect();
    }
    let js = bessel_j_orders(nu, n, z)?;
    Ok(js
        .iter()
        .enumerate()
        .map(|(k, j)| {
            let order = nu + k as f64;
            if use_series(order, z) {
                ratio_at_zero(order) * reduced_series(order, z)
            } else {
                j * (-order * z.ln()).exp()
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * b.abs().max(1e-300)
    }

    #[test]
    fn trivial_values() {
        assert_eq!(bessel_j(0.0, 0.0).unwrap(), 1.0);
        let x: f64 = 1.0;
        let want = (2.0 / (PI * x)).sqrt() * x.sin();
        assert!(close(bessel_j(0.5, x).unwrap(), want, 1e-14));
        assert!(close(bessel_j(1.0, 1e-8).unwrap() / 1e-8, 0.5, 1e-14));
        assert!(close(bessel_ratio(0.5, 0.0).unwrap(), (2.0 / PI).sqrt(), 1e-15));
        assert_eq!(bessel_ratio(0.0, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn ratio_three_halves_at_two() {
        // direct series summation
        let mut sum = 0.0;
        for k in 0..40 {
            sum += (-1f64).powi(k) * 1f64.powi(2 * k)
                / (gamma(k as f64 + 1.0) * gamma(k as f64 + 2.5));
        }
        let want = sum / 2f64.powf(1.5);
        assert!(close(bessel_ratio(1.5, 2.0).unwrap(), want, 1e-14));
    }

    #[test]
    fn envelope_is_enforced() {
        assert!(bessel_j(300.0, 1.0).is_err());
        assert!(bessel_j(1.0, 251.0).is_err());
        assert!(bessel_j(-1.0, 1.0).is_err());
    }

    #[test]
    fn orders_agree_with_single_calls() {
        let seq = bessel_j_orders(0.5, 30, 17.0).unwrap();
        for (k, v) in seq.iter().enumerate() {
            let single = bessel_j(0.5 + k as f64, 17.0).unwrap();
            assert!((v - single).abs() < 1e-15);
        }
        let ratios = bessel_ratio_orders(1.0, 20, 9.0).unwrap();
        for (k, v) in ratios.iter().enumerate() {
            let single = bessel_ratio(1.0 + k as f64, 9.0).unwrap();
            assert!((v - single).abs() <= 1e-14 * single.abs());
        }
    }
}
