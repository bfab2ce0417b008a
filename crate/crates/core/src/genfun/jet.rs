use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::clifford::{GeometricFrame, PlaneValue};

fn zero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

/// Truncated power series `Σ_{n≤N} c_n a^n` with complex coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarJet {
    pub coeffs: Vec<Complex64>,
}

impl ScalarJet {
    pub fn constant(order: usize, c: Complex64) -> Self {
        let mut coeffs = vec![zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    /// `c0 + c1 a`.
    pub fn linear(order: usize, c0: Complex64, c1: Complex64) -> Self {
        let mut j = Self::constant(order, c0);
        if order >= 1 {
            j.coeffs[1] = c1;
        }
        j
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn exp(&self) -> Self {
        let n = self.order();
        let mut out = vec![zero(); n + 1];
        out[0] = self.coeffs[0].exp();
        for k in 1..=n {
            let s: Complex64 = (1..=k).map(|j| self.coeffs[j] * j as f64 * out[k - j]).sum();
            out[k] = s / k as f64;
        }
        Self { coeffs: out }
    }

    /// `(sin, cos)` of the jet.
    pub fn sin_cos(&self) -> (Self, Self) {
        let n = self.order();
        let mut s = vec![zero(); n + 1];
        let mut c = vec![zero(); n + 1];
        s[0] = self.coeffs[0].sin();
        c[0] = self.coeffs[0].cos();
        for k in 1..=n {
            let mut ds = zero();
            let mut dc = zero();
            for j in 1..=k {
                let w = self.coeffs[j] * j as f64;
                ds += w * c[k - j];
                dc -= w * s[k - j];
            }
            s[k] = ds / k as f64;
            c[k] = dc / k as f64;
        }
        (Self { coeffs: s }, Self { coeffs: c })
    }

    /// Square root on the branch through `√c_0`; needs `c_0 ≠ 0`.
    pub fn sqrt(&self) -> Self {
        let n = self.order();
        let mut w = vec![zero(); n + 1];
        w[0] = self.coeffs[0].sqrt();
        for k in 1..=n {
            let s: Complex64 = (1..k).map(|j| w[j] * w[k - j]).sum();
            w[k] = (self.coeffs[k] - s) / (w[0] * 2.0);
        }
        Self { coeffs: w }
    }

    /// `1 / jet`; needs `c_0 ≠ 0`.
    pub fn recip(&self) -> Self {
        let n = self.order();
        let mut r = vec![zero(); n + 1];
        r[0] = 1.0 / self.coeffs[0];
        for k in 1..=n {
            let s: Complex64 = (1..=k).map(|j| self.coeffs[j] * r[k - j]).sum();
            r[k] = -s * r[0];
        }
        Self { coeffs: r }
    }

    /// `Σ_n poly[n] jet^n` by Horner's rule.
    pub fn compose_power_series(&self, poly: &[f64]) -> Self {
        let n = self.order();
        let mut acc = Self::constant(n, zero());
        for &c in poly.iter().rev() {
            acc = &acc * self;
            acc.coeffs[0] += c;
        }
        acc
    }

    /// `(cos √z, sin √z / √z)` composed with the jet. Both are entire in `z`,
    /// so the result does not depend on a square-root branch.
    pub fn cos_sinc_sqrt(&self) -> (Self, Self) {
        if self.coeffs[0].norm() > 1.0 {
            let w = self.sqrt();
            let (s, c) = w.sin_cos();
            (c, &s * &w.recip())
        } else {
            // Σ (-z)^n/(2n)! and Σ (-z)^n/(2n+1)!
            let mut cos_c = Vec::with_capacity(40);
            let mut sinc_c = Vec::with_capacity(40);
            let mut f = 1.0;
            for n in 0..40 {
                let k = 2 * n as u32;
                if n > 0 {
                    f *= -1.0 / (f64::from(k) * f64::from(k - 1));
                }
                cos_c.push(f);
                sinc_c.push(f / f64::from(k + 1));
            }
            (self.compose_power_series(&cos_c), self.compose_power_series(&sinc_c))
        }
    }
}

impl Mul for &ScalarJet {
    type Output = ScalarJet;
    fn mul(self, rhs: &ScalarJet) -> ScalarJet {
        let n = self.order().min(rhs.order());
        let coeffs = (0..=n)
            .map(|k| (0..=k).map(|j| self.coeffs[j] * rhs.coeffs[k - j]).sum())
            .collect();
        ScalarJet { coeffs }
    }
}

impl Add for &ScalarJet {
    type Output = ScalarJet;
    fn add(self, rhs: &ScalarJet) -> ScalarJet {
        ScalarJet {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &ScalarJet {
    type Output = ScalarJet;
    fn sub(self, rhs: &ScalarJet) -> ScalarJet {
        ScalarJet {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &ScalarJet {
    type Output = ScalarJet;
    fn neg(self) -> ScalarJet {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

/// Truncated power series in `a` with plane-algebra coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct TaylorJet {
    pub coeffs: Vec<PlaneValue>,
}

impl TaylorJet {
    pub fn constant(order: usize, value: PlaneValue) -> Self {
        let mut coeffs = vec![PlaneValue::zero(value.frame); order + 1];
        coeffs[0] = value;
        Self { coeffs }
    }

    /// `scalar + W bivector` from two scalar jets of equal order.
    pub fn from_parts(scalar: &ScalarJet, bivector: &ScalarJet, frame: GeometricFrame) -> Self {
        Self {
            coeffs: scalar
                .coeffs
                .iter()
                .zip(&bivector.coeffs)
                .map(|(&s, &b)| PlaneValue::new(s, b, frame))
                .collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl Mul for &TaylorJet {
    type Output = TaylorJet;
    fn mul(self, rhs: &TaylorJet) -> TaylorJet {
        let n = self.order().min(rhs.order());
        let frame = self.coeffs[0].frame;
        let coeffs = (0..=n)
            .map(|k| {
                (0..=k).fold(PlaneValue::zero(frame), |acc, j| acc + self.coeffs[j] * rhs.coeffs[k - j])
            })
            .collect();
        TaylorJet { coeffs }
    }
}

impl Add for &TaylorJet {
    type Output = TaylorJet;
    fn add(self, rhs: &TaylorJet) -> TaylorJet {
        TaylorJet {
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| *a + *b).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn exp_of_linear() {
        // e^{2 + 3a} = e^2 Σ (3a)^n / n!
        let j = ScalarJet::linear(8, c(2.0, 0.0), c(3.0, 0.0)).exp();
        let mut f = 1.0;
        for n in 0..=8 {
            if n > 0 {
                f *= 3.0 / n as f64;
            }
            assert!((j.coeffs[n] - 2f64.exp() * f).norm() < 1e-12 * 2f64.exp() * f.max(1.0));
        }
    }

    #[test]
    fn sqrt_squares_back() {
        let z = ScalarJet {
            coeffs: vec![c(4.0, 1.0), c(0.5, -0.3), c(0.2, 0.0), c(-1.0, 0.7)],
        };
        let w = z.sqrt();
        let back = &w * &w;
        for (a, b) in back.coeffs.iter().zip(&z.coeffs) {
            assert!((a - b).norm() < 1e-14);
        }
    }

    #[test]
    fn entire_compositions_agree_across_routes() {
        // |z0| slightly above and below the switch, compared with a shifted jet
        let z = ScalarJet::linear(10, c(1.0 + 1e-9, 0.0), c(0.3, 0.1));
        let y = ScalarJet::linear(10, c(1.0 - 1e-9, 0.0), c(0.3, 0.1));
        let (cz, sz) = z.cos_sinc_sqrt();
        let (cy, sy) = y.cos_sinc_sqrt();
        for k in 0..=10 {
            assert!((cz.coeffs[k] - cy.coeffs[k]).norm() < 1e-8);
            assert!((sz.coeffs[k] - sy.coeffs[k]).norm() < 1e-8);
        }
    }

    #[test]
    fn constant_jet_has_no_higher_terms() {
        let f = GeometricFrame::from_uv(0.3, 0.4).unwrap();
        let j = TaylorJet::constant(5, PlaneValue::one(f));
        assert!(j.coeffs[1..].iter().all(|p| p.scalar == c(0.0, 0.0) && p.bivector == c(0.0, 0.0)));
        let sq = &j * &j;
        assert_eq!(sq, j);
    }
}
