use crate::error::{Error, Result};

/// Rotation invariants of a vector pair: `u = (x, y)`, `v = |x ∧ y|`,
/// `t = |x||y|`, with `u² + v² = t²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricFrame {
    pub u: f64,
    pub v: f64,
    pub t: f64,
    /// `u / t`, or 0 when `t = 0`.
    pub cos_theta: f64,
}

impl GeometricFrame {
    /// Frame from the inner product and the wedge magnitude.
    pub fn from_uv(u: f64, v: f64) -> Result<Self> {
        if !u.is_finite() || !v.is_finite() || v < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "frame needs finite u and v >= 0, got u={u}, v={v}"
            )));
        }
        let t = u.hypot(v);
        Ok(Self::with_t(u, v, t))
    }

    fn with_t(u: f64, v: f64, t: f64) -> Self {
        let cos_theta = if t > 0.0 { (u / t).clamp(-1.0, 1.0) } else { 0.0 };
        Self { u, v, t, cos_theta }
    }

    /// The frame of `(s x, y)`.
    pub fn scaled(&self, s: f64) -> Self {
        Self {
            u: self.u * s,
            v: self.v * s,
            t: self.t * s,
            cos_theta: self.cos_theta,
        }
    }

    /// Canonical vector pair realizing this frame in dimension `m ≥ 2`:
    /// `x = √t e_1`, `y = √t (cos θ e_1 + sin θ e_2)`.
    pub fn canonical_vectors(&self, m: usize) -> (Vec<f64>, Vec<f64>) {
        assert!(m >= 2);
        let r = self.t.sqrt();
        let mut x = vec![0.0; m];
        let mut y = vec![0.0; m];
        x[0] = r;
        if self.t > 0.0 {
            y[0] = self.u / r;
            y[1] = self.v / r;
        }
        (x, y)
    }

    /// Whether two frames agree to `1e-12` relative.
    pub fn matches(&self, other: &Self) -> bool {
        let scale = self.t.max(other.t).max(1.0);
        (self.u - other.u).abs() <= 1e-12 * scale && (self.v - other.v).abs() <= 1e-12 * scale
    }
}

/// Frame of two real vectors. `v` is clamped to 0 when rounding makes
/// `t² - u²` slightly negative.
pub fn frame_of(x: &[f64], y: &[f64]) -> Result<GeometricFrame> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let u: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let nx: f64 = x.iter().map(|a| a * a).sum::<f64>().sqrt();
    let ny: f64 = y.iter().map(|a| a * a).sum::<f64>().sqrt();
    let t = nx * ny;
    // Lagrange identity keeps v accurate for nearly collinear pairs.
    let mut wedge_sq = 0.0;
    for j in 0..x.len() {
        for k in (j + 1)..x.len() {
            let w = x[j] * y[k] - x[k] * y[j];
            wedge_sq += w * w;
        }
    }
    let direct = t * t - u * u;
    let v = if direct < -1e-12 * t * t {
        return Err(Error::InvalidArgument(format!(
            "inconsistent frame: t² - u² = {direct:e}"
        )));
    } else {
        wedge_sq.max(0.0).sqrt()
    };
    Ok(GeometricFrame::with_t(u, v, t))
}
