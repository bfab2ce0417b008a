use num_complex::Complex64;

use super::jet::{ScalarJet, TaylorJet};
use crate::clifford::{GeometricFrame, PlaneValue};
use crate::error::{Error, Result};
use crate::kernel::is_standard_angle;
use crate::special::gamma;

/// Largest coefficient index served by [`genfun_coeffs`].
pub const MAX_COEFFS: usize = 20;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `G_p(x, y, a) = e^{-c}(cos d + (x∧y - i a e^{ip}) sin p · sin d / d)` with
/// `c = (iu - a e^{ip}) cos p` and `d² = sin²p (t² + (iu - a e^{ip})²)`.
pub fn genfun_closed(p: f64, frame: &GeometricFrame, a: Complex64) -> PlaneValue {
    let jets = genfun_jets(p, frame, a, 0);
    jets.coeffs[0]
}

/// The generating function as a jet in `a` around `a0`.
fn genfun_jets(p: f64, frame: &GeometricFrame, a0: Complex64, order: usize) -> TaylorJet {
    let eip = c(0.0, p).exp();
    let (sp, cp) = p.sin_cos();
    // q = iu - a e^{ip}
    let q = ScalarJet::linear(order, c(0.0, frame.u) - a0 * eip, -eip);
    let damp = q.scale(c(-cp, 0.0)).exp();
    let mut z = &q * &q;
    z.coeffs[0] += frame.t * frame.t;
    let z = z.scale(c(sp * sp, 0.0));
    let (f, g) = z.cos_sinc_sqrt();
    let a = ScalarJet::linear(order, a0, c(1.0, 0.0));
    let ag = &a * &g;
    let scalar = &damp * &(&f + &ag.scale(c(0.0, -1.0) * eip * sp));
    let bivector = &damp * &g.scale(c(sp, 0.0));
    TaylorJet::from_parts(&scalar, &bivector, *frame)
}

/// `K_m^p` for `m = 2, 4, ..., 2n + 2` from the Taylor coefficients of the
/// generating function at `a = 0`: `K_m = Γ(m/2) [a^{m/2-1}] G_p`.
pub fn genfun_coeffs(p: f64, frame: &GeometricFrame, n: usize) -> Result<Vec<PlaneValue>> {
    if n > MAX_COEFFS {
        return Err(Error::InvalidArgument(format!(
            "at most {MAX_COEFFS} generating-function coefficients are supported"
        )));
    }
    let jet = genfun_jets(p, frame, c(0.0, 0.0), n);
    Ok(jet
        .coeffs
        .iter()
        .enumerate()
        .map(|(j, v)| v.scale(c(gamma(j as f64 + 1.0), 0.0)))
        .collect())
}

#[derive(Clone, Copy)]
struct PlaneMatrix([PlaneValue; 4]);

impl PlaneMatrix {
    fn identity(frame: GeometricFrame) -> Self {
        let one = PlaneValue::one(frame);
        let zero = PlaneValue::zero(frame);
        PlaneMatrix([one, zero, zero, one])
    }

    fn mul(&self, o: &Self) -> Self {
        let [a, b, c, d] = self.0;
        let [e, f, g, h] = o.0;
        PlaneMatrix([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    fn add(&self, o: &Self) -> Self {
        PlaneMatrix([
            self.0[0] + o.0[0],
            self.0[1] + o.0[1],
            self.0[2] + o.0[2],
            self.0[3] + o.0[3],
        ])
    }

    fn scale(&self, s: f64) -> Self {
        PlaneMatrix(self.0.map(|x| x.scale(c(s, 0.0))))
    }

    fn norm(&self) -> f64 {
        let entry = |x: &PlaneValue| x.scalar.norm() + x.bivector.norm() * x.frame.v;
        (entry(&self.0[0]) + entry(&self.0[1])).max(entry(&self.0[2]) + entry(&self.0[3]))
    }

    /// Scaling and squaring with a degree-18 Taylor polynomial; the plane
    /// algebra is commutative so the scalar recipe carries over unchanged.
    fn exp(&self) -> Self {
        let frame = self.0[0].frame;
        let norm = self.norm();
        let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as i32 } else { 0 };
        let scaled = self.scale(0.5f64.powi(squarings));
        let mut result = Self::identity(frame);
        let mut term = Self::identity(frame);
        for k in 1..=18 {
            term = term.mul(&scaled).scale(1.0 / k as f64);
            result = result.add(&term);
        }
        for _ in 0..squarings {
            result = result.mul(&result);
        }
        result
    }
}

/// `(0 1) e^{-M} (1 1)^T` with the 2×2 plane-algebra matrix `M` of the
/// generating function (`A` at `p = π/2`, `B` otherwise).
pub fn genfun_matrix(p: f64, frame: &GeometricFrame, a: Complex64) -> PlaneValue {
    let f = *frame;
    let pv = |x: Complex64, w: Complex64| PlaneValue::new(x, w, f);
    let xy = pv(c(-frame.u, 0.0), c(1.0, 0.0));
    let yx = PlaneValue::yx(f);
    let m = if is_standard_angle(p) {
        let d = a - frame.u;
        PlaneMatrix([pv(d, c(0.0, 0.0)), -xy, yx, pv(-d, c(0.0, 0.0))])
    } else {
        let eip = c(0.0, p).exp();
        let (sp, cp) = p.sin_cos();
        let q = c(0.0, frame.u) - a * eip;
        let root = (-(frame.t * frame.t) - q * q).sqrt();
        let beta_plus = -q * cp + sp * root;
        let beta_minus = -q * cp - sp * root;
        let n = yx.scale(c(-sp, 0.0)) + pv(c(0.0, frame.u) * eip - a * eip * eip, c(0.0, 0.0));
        let zero = PlaneValue::zero(f);
        PlaneMatrix([
            pv(-beta_plus, c(0.0, 0.0)),
            zero,
            -(n + pv(beta_plus, c(0.0, 0.0))),
            pv(-beta_minus, c(0.0, 0.0)),
        ])
    };
    let e = m.scale(-1.0).exp();
    e.0[2] + e.0[3]
}
