use num_complex::Complex64;

use crate::clifford::{sinc, GeometricFrame, PlaneValue};

/// `K_2^p = e^{-iu cos p} e^{(x∧y) sin p}`.
pub fn kernel_dim2(p: f64, frame: &GeometricFrame) -> PlaneValue {
    let phase = Complex64::new(0.0, -frame.u * p.cos()).exp();
    let w = Complex64::new(frame.v * p.sin(), 0.0);
    PlaneValue::new(phase * w.cos(), phase * p.sin() * sinc(w), *frame)
}
