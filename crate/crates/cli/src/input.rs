//! The JSON description of a function to transform.
//!
//! ```json
//! {"dim": 2, "grid_order": 32,
//!  "channels": [{"blade": 0, "expr": {"gaussian": {}}},
//!               {"blade": 3, "expr": {"product": [{"coordinate": 0}, {"gaussian": {"scale": 2.0}}]}}]}
//! ```
//!
//! `blade` is the bitmask of the basis blade (`3` is `e1 e2`). Expressions:
//! `constant` (a number or `[re, im]`), `gaussian` (`e^{-scale |x|²/2}`),
//! `coordinate` (`x_i`, zero based), `polynomial` (a list of
//! `{"coeff", "powers"}` monomials), `sum` and `product`.

use cfk_core::{Complex64, Multivector};
use serde::Deserialize;

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(untagged)]
pub enum Coeff {
    Real(f64),
    Complex([f64; 2]),
}

impl Coeff {
    fn value(self) -> Complex64 {
        match self {
            Coeff::Real(r) => Complex64::new(r, 0.0),
            Coeff::Complex([re, im]) => Complex64::new(re, im),
        }
    }
}

fn unit_scale() -> f64 {
    1.0
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Monomial {
    pub coeff: Coeff,
    pub powers: Vec<u32>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expr {
    Constant(Coeff),
    Gaussian {
        #[serde(default = "unit_scale")]
        scale: f64,
    },
    Coordinate(usize),
    Polynomial(Vec<Monomial>),
    Sum(Vec<Expr>),
    Product(Vec<Expr>),
}

impl Expr {
    fn check(&self, dim: usize) -> Result<(), String> {
        match self {
            Expr::Constant(_) => Ok(()),
            Expr::Gaussian { scale } if !(*scale > 0.0) => Err(format!("gaussian scale must be positive, got {scale}")),
            Expr::Gaussian { .. } => Ok(()),
            Expr::Coordinate(i) if *i >= dim => Err(format!("coordinate {i} out of range for dimension {dim}")),
            Expr::Coordinate(_) => Ok(()),
            Expr::Polynomial(terms) => terms.iter().try_for_each(|t| {
                if t.powers.len() == dim {
                    Ok(())
                } else {
                    Err(format!("monomial has {} powers, expected {dim}", t.powers.len()))
                }
            }),
            Expr::Sum(es) | Expr::Product(es) => es.iter().try_for_each(|e| e.check(dim)),
        }
    }

    pub fn eval(&self, x: &[f64]) -> Complex64 {
        match self {
            Expr::Constant(c) => c.value(),
            Expr::Gaussian { scale } => {
                let r2: f64 = x.iter().map(|c| c * c).sum();
                Complex64::new((-0.5 * scale * r2).exp(), 0.0)
            }
            Expr::Coordinate(i) => Complex64::new(x[*i], 0.0),
            Expr::Polynomial(terms) => terms
                .iter()
                .map(|t| {
                    let mono: f64 = x.iter().zip(&t.powers).map(|(c, &k)| c.powi(k as i32)).product();
                    t.coeff.value() * mono
                })
                .sum(),
            Expr::Sum(es) => es.iter().map(|e| e.eval(x)).sum(),
            Expr::Product(es) => es.iter().map(|e| e.eval(x)).product(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Channel {
    pub blade: u32,
    pub expr: Expr,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TransformInput {
    pub dim: usize,
    pub grid_order: usize,
    pub channels: Vec<Channel>,
}

impl TransformInput {
    pub fn validate(&self) -> Result<(), String> {
        let blades = 1u32.checked_shl(self.dim as u32).unwrap_or(0);
        for c in &self.channels {
            if c.blade >= blades {
                return Err(format!("blade {} out of range for dimension {}", c.blade, self.dim));
            }
            c.expr.check(self.dim)?;
        }
        Ok(())
    }

    /// The multivector value at `x`; repeated blades add up.
    pub fn sample(&self, x: &[f64]) -> Multivector<Complex64> {
        let mut out = Multivector::zero(self.dim);
        for c in &self.channels {
            let cur = *out.coeff(c.blade);
            out.set_coeff(c.blade, cur + c.expr.eval(x));
        }
        out
    }
}
