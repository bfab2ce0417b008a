use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use super::{vector_products, GeometricFrame, Multivector};
use crate::error::{Error, Result};

/// `sin(z)/z`, extended by 1 at the origin.
pub fn sinc(z: Complex64) -> Complex64 {
    if z.norm() < 1e-4 {
        let z2 = z * z;
        1.0 - z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0))
    } else {
        z.sin() / z
    }
}

/// An element `α + β W` of the plane algebra spanned by `1` and
/// `W = x ∧ y`, where `W² = -v²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneValue {
    pub scalar: Complex64,
    pub bivector: Complex64,
    pub frame: GeometricFrame,
}

impl PlaneValue {
    pub fn new(scalar: Complex64, bivector: Complex64, frame: GeometricFrame) -> Self {
        Self {
            scalar,
            bivector,
            frame,
        }
    }

    pub fn from_scalar(scalar: Complex64, frame: GeometricFrame) -> Self {
        Self::new(scalar, Complex64::new(0.0, 0.0), frame)
    }

    pub fn zero(frame: GeometricFrame) -> Self {
        Self::from_scalar(Complex64::new(0.0, 0.0), frame)
    }

    pub fn one(frame: GeometricFrame) -> Self {
        Self::from_scalar(Complex64::new(1.0, 0.0), frame)
    }

    /// The wedge `W` itself.
    pub fn wedge(frame: GeometricFrame) -> Self {
        Self::new(Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0), frame)
    }

    /// `y x = -(x, y) - x ∧ y`.
    pub fn yx(frame: GeometricFrame) -> Self {
        Self::new(Complex64::new(-frame.u, 0.0), Complex64::new(-1.0, 0.0), frame)
    }

    /// `x y = -(x, y) + x ∧ y`.
    pub fn xy(frame: GeometricFrame) -> Self {
        Self::new(Complex64::new(-frame.u, 0.0), Complex64::new(1.0, 0.0), frame)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.scalar * s, self.bivector * s, self.frame)
    }

    /// Multiplicative inverse; `None` when `α² + β²v² = 0`.
    pub fn inverse(&self) -> Option<Self> {
        let v2 = self.frame.v * self.frame.v;
        let den = self.scalar * self.scalar + self.bivector * self.bivector * v2;
        if den.norm() == 0.0 {
            return None;
        }
        Some(Self::new(self.scalar / den, -self.bivector / den, self.frame))
    }

    /// Values of the two characters `W ↦ ±i v`.
    pub fn characters(&self) -> (Complex64, Complex64) {
        let iv = Complex64::new(0.0, self.frame.v);
        (self.scalar + self.bivector * iv, self.scalar - self.bivector * iv)
    }

    /// Largest componentwise distance to another value on the same frame.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        (self.scalar - other.scalar)
            .norm()
            .max((self.bivector - other.bivector).norm())
    }

    pub fn is_finite(&self) -> bool {
        self.scalar.re.is_finite()
            && self.scalar.im.is_finite()
            && self.bivector.re.is_finite()
            && self.bivector.im.is_finite()
    }

    /// The multivector `α + β (x ∧ y)` for concrete vectors.
    pub fn embed(&self, x: &[f64], y: &[f64]) -> Result<Multivector<Complex64>> {
        let (_, w) = vector_products(x, y)?;
        let mut out = w.to_complex().scale(&self.bivector);
        let s = *out.coeff(0) + self.scalar;
        out.set_coeff(0, s);
        Ok(out)
    }

    /// Exponential `e^{α + βW} = e^α (cos(βv) + W β sinc(βv))`.
    pub fn exp(&self) -> Self {
        let bv = self.bivector * self.frame.v;
        let ea = self.scalar.exp();
        Self::new(ea * bv.cos(), ea * self.bivector * sinc(bv), self.frame)
    }
}

/// Plane product with a frame check.
pub fn plane_mul(a: &PlaneValue, b: &PlaneValue) -> Result<PlaneValue> {
    if !a.frame.matches(&b.frame) {
        return Err(Error::FrameMismatch);
    }
    Ok(*a * *b)
}

/// `e^{x∧y} = cos v + sinc(v) W`.
pub fn exp_simple_bivector(frame: GeometricFrame) -> PlaneValue {
    let v = Complex64::new(frame.v, 0.0);
    PlaneValue::new(v.cos(), sinc(v), frame)
}

impl Mul for PlaneValue {
    type Output = PlaneValue;
    fn mul(self, rhs: Self) -> Self {
        debug_assert!(self.frame.matches(&rhs.frame), "plane frame mismatch");
        let v2 = self.frame.v * self.frame.v;
        Self::new(
            self.scalar * rhs.scalar - self.bivector * rhs.bivector * v2,
            self.scalar * rhs.bivector + self.bivector * rhs.scalar,
            self.frame,
        )
    }
}

impl Add for PlaneValue {
    type Output = PlaneValue;
    fn add(self, rhs: Self) -> Self {
        debug_assert!(self.frame.matches(&rhs.frame), "plane frame mismatch");
        Self::new(self.scalar + rhs.scalar, self.bivector + rhs.bivector, self.frame)
    }
}

impl Sub for PlaneValue {
    type Output = PlaneValue;
    fn sub(self, rhs: Self) -> Self {
        debug_assert!(self.frame.matches(&rhs.frame), "plane frame mismatch");
        Self::new(self.scalar - rhs.scalar, self.bivector - rhs.bivector, self.frame)
    }
}

impl Neg for PlaneValue {
    type Output = PlaneValue;
    fn neg(self) -> Self {
        Self::new(-self.scalar, -self.bivector, self.frame)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::frame_of;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exp_bivector_examples() {
        let f0 = GeometricFrame::from_uv(0.3, 0.0).unwrap();
        let e = exp_simple_bivector(f0);
        assert_eq!((e.scalar, e.bivector), (c(1.0, 0.0), c(1.0, 0.0)));
        // the bivector term vanishes because W = 0 there
        assert_eq!(e.embed(&[0.3, 0.0], &[1.0, 0.0]).unwrap().coeffs()[3], c(0.0, 0.0));

        let fpi = GeometricFrame::from_uv(0.0, PI).unwrap();
        let e = exp_simple_bivector(fpi);
        assert!((e.scalar - c(-1.0, 0.0)).norm() < 1e-15);
        assert!((e.bivector * PI).norm() < 1e-15);

        let f1 = GeometricFrame::from_uv(0.0, 1.0).unwrap();
        let e = exp_simple_bivector(f1);
        assert!((e.scalar - c(1f64.cos(), 0.0)).norm() < 1e-15);
        assert!((e.bivector - c(1f64.sin(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn exp_bivector_times_inverse_is_one() {
        for &(u, v) in &[(0.0, 0.5), (1.0, 2.0), (-3.0, 7.5), (0.2, 1e-9)] {
            let f = GeometricFrame::from_uv(u, v).unwrap();
            let e = exp_simple_bivector(f);
            let minus = PlaneValue::new(e.scalar, -e.bivector, f);
            let prod = e * minus;
            assert!(prod.max_abs_diff(&PlaneValue::one(f)) < 1e-13);
        }
    }

    #[test]
    fn identity_and_w_squared() {
        let f = GeometricFrame::from_uv(0.0, 2.0).unwrap();
        let a = PlaneValue::new(c(0.3, -1.0), c(2.0, 0.5), f);
        assert_eq!(PlaneValue::one(f) * a, a);
        let w = PlaneValue::wedge(f);
        assert_eq!(w * w, PlaneValue::from_scalar(c(-4.0, 0.0), f));
    }

    #[test]
    fn plane_mul_matches_embedded_product() {
        let x = [1.0, 2.0];
        let y = [3.0, 4.0];
        let f = frame_of(&x, &y).unwrap();
        let a = PlaneValue::new(c(0.5, 1.0), c(-0.25, 2.0), f);
        let b = PlaneValue::new(c(-1.5, 0.1), c(0.75, -0.5), f);
        let lhs = plane_mul(&a, &b).unwrap().embed(&x, &y).unwrap();
        let rhs = &a.embed(&x, &y).unwrap() * &b.embed(&x, &y).unwrap();
        assert!((&lhs - &rhs).max_abs() <= 1e-14 * rhs.max_abs().max(1.0));
    }

    #[test]
    fn frame_mismatch_is_rejected() {
        let a = PlaneValue::one(GeometricFrame::from_uv(0.0, 1.0).unwrap());
        let b = PlaneValue::one(GeometricFrame::from_uv(0.0, 1.1).unwrap());
        assert_eq!(plane_mul(&a, &b), Err(Error::FrameMismatch));
    }

    #[test]
    fn inverse_round_trip() {
        let f = GeometricFrame::from_uv(0.4, 1.3).unwrap();
        let a = PlaneValue::new(c(0.7, 0.2), c(-0.4, 1.1), f);
        let inv = a.inverse().unwrap();
        assert!((a * inv).max_abs_diff(&PlaneValue::one(f)) < 1e-14);
    }
}
