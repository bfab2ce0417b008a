use cfk_core::clifford::GeometricFrame;
use cfk_core::laplace::{default_horizon, laplace_kernel, numeric_laplace_check, LaplaceVariant};
use cfk_core::special::gamma;
use cfk_core::{Complex64, Error};
use proptest::prelude::*;
use std::f64::consts::FRAC_PI_2;

const OSC: LaplaceVariant = LaplaceVariant::Oscillatory;

fn frame(u: f64, v: f64) -> GeometricFrame {
    GeometricFrame::from_uv(u, v).unwrap()
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn quadrature(m: usize, p: f64, s: Complex64, f: &GeometricFrame) -> cfk_core::PlaneValue {
    numeric_laplace_check(m, p, s, f, default_horizon(m, s, f), 512).unwrap()
}

#[test]
fn closed_form_examples() {
    let f = frame(0.2, 0.9);
    let s = c(2.5, -0.3);
    let k = laplace_kernel(2, FRAC_PI_2, s, &f, OSC).unwrap().value;
    let den = s * s + 0.81;
    assert!((k.scalar - s / den).norm() < 1e-13 && (k.bivector - 1.0 / den).norm() < 1e-13);

    for m in [2, 3, 5, 8] {
        let k = laplace_kernel(m, 0.0, s, &f, OSC).unwrap().value;
        let want = gamma(m as f64 / 2.0) / (s + c(0.0, 0.2)).powf(m as f64 / 2.0);
        assert!((k.scalar - want).norm() < 1e-13 && k.bivector.norm() < 1e-13);
    }

    let f = frame(0.3, 0.4);
    let k = laplace_kernel(4, FRAC_PI_2, c(3.0, 0.0), &f, OSC).unwrap().value;
    assert!(k.max_abs_diff(&quadrature(4, FRAC_PI_2, c(3.0, 0.0), &f)) < 1e-6);
}

#[test]
fn quadrature_examples() {
    let q = quadrature(2, FRAC_PI_2, c(2.0, 0.0), &frame(0.0, 1.0));
    assert!((q.scalar - 0.4).norm() < 1e-8 && (q.bivector - 0.2).norm() < 1e-8);
    let q = quadrature(4, 0.0, c(3.0, 0.0), &frame(1.0, 0.0));
    assert!((q.scalar - 1.0 / (c(3.0, 1.0) * c(3.0, 1.0))).norm() < 1e-8);
    let f = frame(-0.25, 0.35);
    let k = laplace_kernel(3, FRAC_PI_2, c(2.5, 0.0), &f, OSC).unwrap();
    assert!(k.principal_branch_only);
    assert!(k.value.max_abs_diff(&quadrature(3, FRAC_PI_2, c(2.5, 0.0), &f)) < 1e-5);
}

#[test]
fn guards() {
    let f = frame(0.6, 0.8);
    assert!(matches!(laplace_kernel(4, 0.3, c(1.0, 0.0), &f, OSC), Err(Error::Abscissa { .. })));
    assert!(matches!(
        laplace_kernel(4, 0.3, c(0.9, 0.0), &f, LaplaceVariant::Exponential),
        Err(Error::Abscissa { .. })
    ));
    assert!(matches!(
        numeric_laplace_check(4, 0.3, c(2.0, 0.0), &f, 10.0, 128),
        Err(Error::Horizon(_))
    ));
    assert!(!laplace_kernel(4, 0.3, c(2.0, 0.0), &f, OSC).unwrap().principal_branch_only);
}

#[test]
fn exponential_variant_at_zero_angle() {
    // e^{τ u} transforms to Γ(m/2) / (s - u)^{m/2}
    let f = frame(0.5, 0.3);
    for m in 2..=6 {
        let k = laplace_kernel(m, 0.0, c(2.0, 0.5), &f, LaplaceVariant::Exponential).unwrap().value;
        let want = gamma(m as f64 / 2.0) / (c(2.0, 0.5) - 0.5).powf(m as f64 / 2.0);
        assert!((k.scalar - want).norm() < 1e-13 && k.bivector.norm() < 1e-13);
    }
}

#[test]
fn round_trip_grid() {
    let frames = [frame(0.3, 0.4), frame(-0.7, 0.5), frame(0.0, 1.0), frame(1.0, 0.0)];
    for m in [2, 3, 4, 6] {
        for p in [0.0, 0.3, FRAC_PI_2] {
            for s in [c(2.0, 0.0), c(3.0, 0.5)] {
                for f in &frames {
                    let k = laplace_kernel(m, p, s, f, OSC).unwrap().value;
                    let q = quadrature(m, p, s, f);
                    assert!(k.max_abs_diff(&q) < 1e-5, "m={m} p={p} s={s} {f:?}");
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn two_dimensional_reduction(t in 0.0f64..2.0, cos in -1.0f64..1.0, extra in 0.0f64..3.0, im in -3.0f64..3.0) {
        let f = frame(t * cos, t * (1.0 - cos * cos).sqrt());
        let s = c(2.0 * t + extra + 1e-3, im);
        let k = laplace_kernel(2, FRAC_PI_2, s, &f, OSC).unwrap().value;
        let den = s * s + f.v * f.v;
        prop_assert!((k.scalar - s / den).norm() <= 1e-12);
        prop_assert!((k.bivector - 1.0 / den).norm() <= 1e-12);
    }
}
