use std::f64::consts::PI;

use crate::error::{Error, Result};

pub const MAX_NODES: usize = 512;

/// Where a rule's nodes live and which weight it absorbs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum QuadratureDomain {
    /// Plain nodes on `[a, b]`.
    Interval { a: f64, b: f64 },
    /// Nodes on `[0, T]`, the caller relying on `e^{-st}` decay past `T`.
    HalfLine { horizon: f64 },
    /// The whole line with weight `e^{-x²}` absorbed.
    HermiteLine,
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub domain: QuadratureDomain,
}

impl QuadratureRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn integrate<F: FnMut(f64) -> f64>(&self, mut f: F) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }

    /// Affine image of a rule on `[-1, 1]`.
    pub fn mapped(&self, a: f64, b: f64) -> QuadratureRule {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (b + a);
        QuadratureRule {
            nodes: self.nodes.iter().map(|x| mid + half * x).collect(),
            weights: self.weights.iter().map(|w| half * w).collect(),
            domain: QuadratureDomain::Interval { a, b },
        }
    }
}

fn check_size(n: usize) -> Result<()> {
    if n == 0 || n > MAX_NODES {
        return Err(Error::InvalidArgument(format!(
            "quadrature size {n} outside 1..={MAX_NODES}"
        )));
    }
    Ok(())
}

/// `n`-point Gauss–Legendre rule on `[-1, 1]`.
pub fn gauss_legendre(n: usize) -> Result<QuadratureRule> {
    check_size(n)?;
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let nf = n as f64;
    for i in 0..n.div_ceil(2) {
        let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut converged = false;
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let jf = j as f64;
                let p2 = ((2.0 * jf - 1.0) * x * p1 - (jf - 1.0) * p0) / jf;
                p0 = p1;
                p1 = p2;
            }
            let pn = if n == 1 { x } else { p1 };
            let pm = if n == 1 { 1.0 } else { p0 };
            dp = nf * (x * pn - pm) / (x * x - 1.0);
            let dx = pn / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                converged = true;
                break;
            }
        }
        if !converged {
            return Err(Error::NoConvergence("gauss_legendre"));
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        domain: QuadratureDomain::Interval { a: -1.0, b: 1.0 },
    })
}

/// Nodes of the `n`-point Gauss–Hermite rule with the weights scaled by
/// `e^{x²}`, i.e. a rule for `∫ g(x) dx` with `g` decaying like `e^{-x²}`.
///
/// Newton iteration runs on orthonormal Hermite functions so that nothing
/// overflows for large `n`.
pub fn gauss_hermite_scaled(n: usize) -> Result<QuadratureRule> {
    check_size(n)?;
    let pim4 = PI.powf(-0.25);
    // Zeros are the eigenvalues of the Jacobi matrix, then polished by Newton.
    let off: Vec<f64> = (1..n).map(|j| (0.5 * j as f64).sqrt()).collect();
    let mut nodes = symmetric_tridiagonal_eigenvalues(vec![0.0; n], off)?;
    nodes.sort_by(f64::total_cmp);
    let mut weights = Vec::with_capacity(n);
    for z in nodes.iter_mut() {
        for _ in 0..3 {
            let (p, d) = hermite_function(n, *z, pim4);
            *z -= p / d;
        }
        let (_, d) = hermite_function(n, *z, pim4);
        weights.push(2.0 / (d * d));
    }
    // enforce exact symmetry
    for i in 0..n / 2 {
        let x = 0.5 * (nodes[n - 1 - i] - nodes[i]);
        let w = 0.5 * (weights[i] + weights[n - 1 - i]);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        domain: QuadratureDomain::HermiteLine,
    })
}

/// Eigenvalues of a symmetric tridiagonal matrix by implicit QL.
fn symmetric_tridiagonal_eigenvalues(mut d: Vec<f64>, off: Vec<f64>) -> Result<Vec<f64>> {
    let n = d.len();
    let mut e = off;
    e.push(0.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::NoConvergence("tridiagonal eigenvalues"));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut i = m;
            let mut early = false;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    early = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if early {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(d)
}

/// `ψ_n(z)` and `√(2n) ψ_{n-1}(z)`, where `ψ_j = e^{-z²/2} × orthonormal H_j`.
/// At a zero of `ψ_n` the second value is `ψ_n'(z)`.
fn hermite_function(n: usize, z: f64, pim4: f64) -> (f64, f64) {
    let mut p1 = pim4 * (-0.5 * z * z).exp();
    let mut p2 = 0.0;
    for j in 1..=n {
        let jf = j as f64;
        let p3 = p2;
        p2 = p1;
        p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
    }
    (p1, (2.0 * n as f64).sqrt() * p2)
}

/// `n`-point Gauss–Hermite rule for `∫ e^{-x²} f(x) dx`.
pub fn gauss_hermite(n: usize) -> Result<QuadratureRule> {
    let mut rule = gauss_hermite_scaled(n)?;
    for (w, x) in rule.weights.iter_mut().zip(&rule.nodes) {
        *w *= (-x * x).exp();
    }
    Ok(rule)
}

/// Gauss–Legendre mapped to `[0, horizon]` for `∫_0^∞ e^{-st} f(t) dt`.
pub fn half_line_rule(horizon: f64, n: usize) -> Result<QuadratureRule> {
    if !(horizon > 0.0 && horizon.is_finite()) {
        return Err(Error::InvalidArgument(format!("horizon {horizon} must be positive")));
    }
    let mut rule = gauss_legendre(n)?.mapped(0.0, horizon);
    rule.domain = QuadratureDomain::HalfLine { horizon };
    Ok(rule)
}

/// Composite Gauss–Legendre with `panels` equal panels on `[a, b]`.
pub fn composite_legendre(a: f64, b: f64, panels: usize, n: usize) -> Result<QuadratureRule> {
    let base = gauss_legendre(n)?;
    let h = (b - a) / panels as f64;
    let mut nodes = Vec::with_capacity(panels * n);
    let mut weights = Vec::with_capacity(panels * n);
    for p in 0..panels {
        let lo = a + h * p as f64;
        let piece = base.mapped(lo, lo + h);
        nodes.extend(piece.nodes);
        weights.extend(piece.weights);
    }
    Ok(QuadratureRule {
        nodes,
        weights,
        domain: QuadratureDomain::Interval { a, b },
    })
}
