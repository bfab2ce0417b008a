//! The fractional Clifford–Fourier transform of sampled multivector
//! functions by tensor Gauss–Hermite quadrature.

use std::f64::consts::PI;
use std::ops::Add;

use num_complex::Complex64;

use crate::clifford::{frame_of, Multivector};
use crate::error::{Error, Result};
use crate::kernel::{kernel, KernelRequest};
use crate::parallel::{chunked_sum, map_collect, Execution};
use crate::special::gauss_hermite_scaled;

/// Largest tensor grid accepted, `24⁴` nodes.
pub const MAX_GRID_NODES: usize = 331_776;

/// Quadrature grid of a sampled function.
#[derive(Debug, Clone)]
pub enum GridSpec {
    /// Tensor Gauss–Hermite grid with `order` nodes per axis, for functions
    /// decaying like `e^{-|x|²/2}`.
    TensorHermite { order: usize },
    /// Arbitrary nodes with weights for the plain measure `dx`.
    Explicit { nodes: Vec<Vec<f64>>, weights: Vec<f64> },
}

/// A multivector-valued function on `R^m` sampled at quadrature nodes.
#[derive(Debug, Clone)]
pub struct SampledFunction {
    dim: usize,
    grid: GridSpec,
    nodes: Vec<Vec<f64>>,
    weights: Vec<f64>,
    values: Vec<Multivector<Complex64>>,
}

fn check_dim(m: usize) -> Result<()> {
    if !(2..=4).contains(&m) {
        return Err(Error::UnsupportedDimension {
            m,
            reason: "the transform engine handles m = 2, 3, 4",
        });
    }
    Ok(())
}

/// Nodes and plain-measure weights of the tensor grid, with `x = √2 ξ`.
pub fn tensor_hermite_grid(m: usize, order: usize) -> Result<(Vec<Vec<f64>>, Vec<f64>)> {
    check_dim(m)?;
    let total = order
        .checked_pow(m as u32)
        .filter(|&n| n <= MAX_GRID_NODES)
        .ok_or_else(|| Error::SizeGuard(format!("{order}^{m} grid nodes exceed {MAX_GRID_NODES}")))?;
    let rule = gauss_hermite_scaled(order)?;
    let sqrt2 = 2f64.sqrt();
    let mut nodes = Vec::with_capacity(total);
    let mut weights = Vec::with_capacity(total);
    for flat in 0..total {
        let mut rem = flat;
        let mut x = Vec::with_capacity(m);
        let mut w = 1.0;
        for _ in 0..m {
            let i = rem % order;
            rem /= order;
            x.push(sqrt2 * rule.nodes[i]);
            w *= sqrt2 * rule.weights[i];
        }
        nodes.push(x);
        weights.push(w);
    }
    Ok((nodes, weights))
}

impl SampledFunction {
    /// Samples `f` on a tensor Gauss–Hermite grid.
    pub fn tensor_hermite<F>(m: usize, order: usize, f: F) -> Result<Self>
    where
        F: Fn(&[f64]) -> Multivector<Complex64>,
    {
        let (nodes, weights) = tensor_hermite_grid(m, order)?;
        let values = nodes.iter().map(|x| f(x)).collect();
        Self::build(m, GridSpec::TensorHermite { order }, nodes, weights, values)
    }

    /// Wraps explicit nodes, weights and values.
    pub fn explicit(
        m: usize,
        nodes: Vec<Vec<f64>>,
        weights: Vec<f64>,
        values: Vec<Multivector<Complex64>>,
    ) -> Result<Self> {
        let grid = GridSpec::Explicit {
            nodes: nodes.clone(),
            weights: weights.clone(),
        };
        Self::build(m, grid, nodes, weights, values)
    }

    fn build(
        dim: usize,
        grid: GridSpec,
        nodes: Vec<Vec<f64>>,
        weights: Vec<f64>,
        values: Vec<Multivector<Complex64>>,
    ) -> Result<Self> {
        check_dim(dim)?;
        if nodes.len() != values.len() || weights.len() != values.len() {
            return Err(Error::InvalidArgument(format!(
                "{} nodes, {} weights and {} values",
                nodes.len(),
                weights.len(),
                values.len()
            )));
        }
        for x in &nodes {
            if x.len() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: x.len() });
            }
        }
        for v in &values {
            if v.dim() != dim {
                return Err(Error::DimensionMismatch { left: dim, right: v.dim() });
            }
        }
        Ok(Self {
            dim,
            grid,
            nodes,
            weights,
            values,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn nodes(&self) -> &[Vec<f64>] {
        &self.nodes
    }

    pub fn values(&self) -> &[Multivector<Complex64>] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Pointwise `a·self + b·other` on the same grid.
    pub fn combine(&self, a: Complex64, other: &Self, b: Complex64) -> Result<Self> {
        if self.nodes != other.nodes || self.weights != other.weights {
            return Err(Error::InvalidArgument("functions live on different grids".into()));
        }
        let values = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(f, g)| f.scale(&a) + g.scale(&b))
            .collect();
        Ok(Self {
            values,
            ..self.clone()
        })
    }
}

/// Partial sum that carries the first kernel failure.
#[derive(Clone)]
struct Partial(Result<Multivector<Complex64>>);

impl Add for Partial {
    type Output = Partial;
    fn add(self, rhs: Partial) -> Partial {
        match (self.0, rhs.0) {
            (Ok(a), Ok(b)) => Partial(Ok(a + b)),
            (Err(e), _) | (_, Err(e)) => Partial(Err(e)),
        }
    }
}

/// Kernel tolerance used inside quadrature sums.
const KERNEL_TOL: f64 = 1e-12;

/// `(2π)^{-m/2} Σ w K_m^p(x, y) f(x)` at every target `y`.
pub fn cft_apply(
    f: &SampledFunction,
    p: f64,
    targets: &[Vec<f64>],
    exec: Execution,
) -> Result<Vec<Multivector<Complex64>>> {
    let m = f.dim;
    for y in targets {
        if y.len() != m {
            return Err(Error::DimensionMismatch { left: m, right: y.len() });
        }
    }
    let norm = (2.0 * PI).powf(-(m as f64) / 2.0);
    let apply_one = |y: &Vec<f64>| -> Result<Multivector<Complex64>> {
        let term = |j: usize| -> Partial {
            let x = &f.nodes[j];
            Partial((|| {
                let frame = frame_of(x, y)?;
                let k = kernel(&KernelRequest::new(m, p, frame).with_tol(KERNEL_TOL))?.value;
                let kx = k.embed(x, y)?;
                let w = Complex64::new(f.weights[j] * norm, 0.0);
                Ok((&kx * &f.values[j]).scale(&w))
            })())
        };
        // targets already run in parallel; the inner sum stays sequential
        chunked_sum(Execution::Sequential, f.len(), Partial(Ok(Multivector::zero(m))), term).0
    };
    map_collect(exec, targets, apply_one).into_iter().collect()
}

/// Deviation of the transformed Gaussian from itself.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaussianReport {
    pub max_rel: f64,
    pub mean_rel: f64,
    pub targets: usize,
}

/// Targets on spheres of radius `R j/4`, `j = 0..4`, along the coordinate
/// axes and two diagonals.
pub fn sphere_targets(m: usize, radius: f64) -> Vec<Vec<f64>> {
    let mut dirs = Vec::new();
    for i in 0..m {
        for sign in [1.0, -1.0] {
            let mut d = vec![0.0; m];
            d[i] = sign;
            dirs.push(d);
        }
    }
    let r = (m as f64).sqrt().recip();
    dirs.push(vec![r; m]);
    let mut alt = vec![r; m];
    alt[0] = -r;
    dirs.push(alt);
    let mut targets = vec![vec![0.0; m]];
    for j in 1..=4 {
        let rad = radius * j as f64 / 4.0;
        for d in &dirs {
            targets.push(d.iter().map(|c| c * rad).collect());
        }
    }
    targets
}

/// Runs `e^{-|x|²/2}` through [`cft_apply`] and compares with `e^{-|y|²/2}`.
pub fn gaussian_invariance_report(
    m: usize,
    p: f64,
    grid_order: usize,
    target_radius: f64,
    exec: Execution,
) -> Result<GaussianReport> {
    let f = SampledFunction::tensor_hermite(m, grid_order, |x| {
        let r2: f64 = x.iter().map(|c| c * c).sum();
        Multivector::scalar(m, Complex64::new((-0.5 * r2).exp(), 0.0))
    })?;
    let targets = sphere_targets(m, target_radius);
    let out = cft_apply(&f, p, &targets, exec)?;
    let mut max_rel: f64 = 0.0;
    let mut sum = 0.0;
    for (y, g) in targets.iter().zip(&out) {
        let want = (-0.5 * y.iter().map(|c| c * c).sum::<f64>()).exp();
        let diff = g - &Multivector::scalar(m, Complex64::new(want, 0.0));
        let rel = diff.max_abs() / want;
        max_rel = max_rel.max(rel);
        sum += rel;
    }
    Ok(GaussianReport {
        max_rel,
        mean_rel: sum / targets.len() as f64,
        targets: targets.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn zero_function() {
        let f = SampledFunction::tensor_hermite(2, 8, |_| Multivector::zero(2)).unwrap();
        let out = cft_apply(&f, FRAC_PI_2, &[vec![0.5, 0.1]], Execution::Sequential).unwrap();
        assert!(out[0].is_zero());
    }

    #[test]
    fn gaussian_in_the_plane() {
        let r = gaussian_invariance_report(2, FRAC_PI_2, 32, 2.0, Execution::Parallel).unwrap();
        assert!(r.max_rel < 1e-6, "{r:?}");
    }

    #[test]
    fn grid_size_guard() {
        assert!(matches!(tensor_hermite_grid(4, 25), Err(Error::SizeGuard(_))));
        assert!(tensor_hermite_grid(5, 2).is_err());
    }

    #[test]
    fn mismatched_lengths() {
        let r = SampledFunction::explicit(2, vec![vec![0.0, 0.0]], vec![1.0, 1.0], vec![Multivector::zero(2)]);
        assert!(r.is_err());
    }

    #[test]
    fn modes_agree_bitwise() {
        let f = SampledFunction::tensor_hermite(2, 10, |x| {
            Multivector::vector(x).to_complex().scale(&Complex64::new((-x[0] * x[0]).exp(), 0.0))
        })
        .unwrap();
        let t = sphere_targets(2, 1.0);
        let a = cft_apply(&f, 0.7, &t, Execution::Sequential).unwrap();
        let b = cft_apply(&f, 0.7, &t, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }
}
