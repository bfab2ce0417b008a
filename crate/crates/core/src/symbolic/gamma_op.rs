use std::collections::HashMap;

use num_complex::Complex64;

use super::poly::{Monomial, PolyField};
use crate::clifford::{blade_product_sign, Multivector, MAX_DIM};
use crate::error::{Error, Result};
use crate::expm::{expm, CMatrix};

/// Largest degree accepted by [`GammaMatrix::to_dense`].
pub const DENSE_MAX_DEGREE: usize = 8;
/// Largest dimension accepted by [`GammaMatrix::to_dense`].
pub const DENSE_MAX_DIM: usize = 5;
/// Largest operator size (monomials × blades) built by [`GammaMatrix::new`].
pub const MAX_OPERATOR_SIZE: usize = 2_000_000;

/// Which basis blades the coefficient vectors carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BladeSet {
    All,
    /// Even blades only; invariant under `Γ` since `e_j e_l` is even.
    Even,
}

#[derive(Debug, Clone, Copy)]
struct Transition {
    target: u32,
    coeff: i32,
    pair: u32,
}

/// `Γ_y` restricted to the homogeneous polynomials of degree `k`, stored as
/// monomial transitions. Vector entries are laid out monomial-major:
/// `index = monomial · blades + blade slot`.
#[derive(Debug, Clone)]
pub struct GammaMatrix {
    dim: usize,
    degree: usize,
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    blades: Vec<u32>,
    blade_slot: Vec<u32>,
    transitions: Vec<Vec<Transition>>,
    weights: Vec<f64>,
}

impl GammaMatrix {
    pub fn new(m: usize, k: usize, blades: BladeSet) -> Result<Self> {
        if m == 0 || m > MAX_DIM {
            return Err(Error::UnsupportedDimension {
                m,
                reason: "the operator needs 1 <= m <= 10",
            });
        }
        let blade_list: Vec<u32> = (0..1u32 << m)
            .filter(|b| blades == BladeSet::All || b.count_ones() % 2 == 0)
            .collect();
        // C(k+m-1, m-1) monomials of degree k
        let count = (1..m).fold(1.0, |acc, i| acc * (k + i) as f64 / i as f64);
        let size = count * blade_list.len() as f64;
        if size > MAX_OPERATOR_SIZE as f64 {
            return Err(Error::SizeGuard(format!(
                "Γ on degree {k} in dimension {m} has {size:.0} coordinates (limit {MAX_OPERATOR_SIZE})"
            )));
        }
        let monomials = Monomial::all_of_degree(m, k as u32);
        let index: HashMap<Monomial, usize> = monomials
            .iter()
            .enumerate()
            .map(|(i, mono)| (mono.clone(), i))
            .collect();
        let mut blade_slot = vec![u32::MAX; 1 << m];
        for (i, &b) in blade_list.iter().enumerate() {
            blade_slot[b as usize] = i as u32;
        }
        let mut transitions = Vec::with_capacity(monomials.len());
        for mono in &monomials {
            let mut list = Vec::new();
            for j in 0..m {
                for l in (j + 1)..m {
                    let pair = (1u32 << j) | (1u32 << l);
                    // (y_j ∂_l - y_l ∂_j) y^α
                    if mono.0[l] > 0 {
                        let mut e = mono.0.clone();
                        e[l] -= 1;
                        e[j] += 1;
                        list.push(Transition {
                            target: index[&Monomial(e)] as u32,
                            coeff: mono.0[l] as i32,
                            pair,
                        });
                    }
                    if mono.0[j] > 0 {
                        let mut e = mono.0.clone();
                        e[j] -= 1;
                        e[l] += 1;
                        list.push(Transition {
                            target: index[&Monomial(e)] as u32,
                            coeff: -(mono.0[j] as i32),
                            pair,
                        });
                    }
                }
            }
            transitions.push(list);
        }
        let weights = monomials.iter().map(Monomial::factorial_weight).collect();
        Ok(Self {
            dim: m,
            degree: k,
            monomials,
            index,
            blades: blade_list,
            blade_slot,
            transitions,
            weights,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of coordinates, `monomials × blades`.
    pub fn size(&self) -> usize {
        self.monomials.len() * self.blades.len()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn blades(&self) -> &[u32] {
        &self.blades
    }

    /// Fischer weight `α!` of each coordinate; `Γ` is symmetric for the
    /// inner product `Σ w_i a_i b_i`.
    pub fn fischer_weight(&self, i: usize) -> f64 {
        self.weights[i / self.blades.len()]
    }

    /// Coordinates of a homogeneous degree-`k` field.
    pub fn encode(&self, f: &PolyField<f64>) -> Result<Vec<f64>> {
        let nb = self.blades.len();
        let mut out = vec![0.0; self.size()];
        for (mono, coeff) in f.terms() {
            let Some(&mi) = self.index.get(mono) else {
                return Err(Error::InvalidArgument(format!(
                    "monomial {:?} is not of degree {}",
                    mono.0, self.degree
                )));
            };
            for (b, c) in coeff.coeffs().iter().enumerate() {
                if *c == 0.0 {
                    continue;
                }
                let slot = self.blade_slot[b];
                if slot == u32::MAX {
                    return Err(Error::InvalidArgument("odd blade in an even-blade operator".into()));
                }
                out[mi * nb + slot as usize] = *c;
            }
        }
        Ok(out)
    }

    /// Field with the given coordinates.
    pub fn decode(&self, v: &[f64]) -> PolyField<f64> {
        let nb = self.blades.len();
        let mut out = PolyField::zero(self.dim);
        for (mi, mono) in self.monomials.iter().enumerate() {
            let mut coeffs = vec![0.0; 1 << self.dim];
            for (s, &b) in self.blades.iter().enumerate() {
                coeffs[b as usize] = v[mi * nb + s];
            }
            let mv = Multivector::from_coeffs(self.dim, coeffs).expect("blade count");
            out.add_term(mono.clone(), mv);
        }
        out
    }

    /// `out = Γ v`.
    pub fn apply(&self, v: &[f64], out: &mut [f64]) {
        let nb = self.blades.len();
        out.iter_mut().for_each(|o| *o = 0.0);
        for (mi, list) in self.transitions.iter().enumerate() {
            let src = &v[mi * nb..(mi + 1) * nb];
            if src.iter().all(|&x| x == 0.0) {
                continue;
            }
            for tr in list {
                let base = tr.target as usize * nb;
                for (s, &a) in self.blades.iter().enumerate() {
                    let x = src[s];
                    if x == 0.0 {
                        continue;
                    }
                    let sign = blade_product_sign(tr.pair, a);
                    let slot = self.blade_slot[(tr.pair ^ a) as usize] as usize;
                    // Γ = -Σ e_j e_l (y_j ∂_l - y_l ∂_j)
                    out[base + slot] -= f64::from(sign) * f64::from(tr.coeff) * x;
                }
            }
        }
    }

    /// Dense row-major matrix, only for small cases.
    pub fn to_dense(&self) -> Result<Vec<f64>> {
        if self.degree > DENSE_MAX_DEGREE || self.dim > DENSE_MAX_DIM {
            return Err(Error::SizeGuard(format!(
                "dense Γ needs k <= {DENSE_MAX_DEGREE} and m <= {DENSE_MAX_DIM}"
            )));
        }
        let n = self.size();
        let mut dense = vec![0.0; n * n];
        let mut e = vec![0.0; n];
        let mut col = vec![0.0; n];
        for j in 0..n {
            e[j] = 1.0;
            self.apply(&e, &mut col);
            for i in 0..n {
                dense[i * n + j] = col[i];
            }
            e[j] = 0.0;
        }
        Ok(dense)
    }

    fn inner(&self, a: &[f64], b: &[f64]) -> f64 {
        let nb = self.blades.len();
        a.chunks(nb)
            .zip(b.chunks(nb))
            .zip(&self.weights)
            .map(|((x, y), w)| w * x.iter().zip(y).map(|(p, q)| p * q).sum::<f64>())
            .sum()
    }

    /// Upper bound on the number of distinct eigenvalues on degree `k`.
    fn krylov_cap(&self) -> usize {
        2 * (self.degree / 2 + 1) + 1
    }

    /// `e^{ipΓ} v`, computed in the Krylov space of `v` (Arnoldi with full
    /// reorthogonalization in the Fischer inner product).
    pub fn exp_apply(&self, p: f64, v: &[f64]) -> Result<Vec<Complex64>> {
        let n = self.size();
        let norm = self.inner(v, v).sqrt();
        if norm == 0.0 {
            return Ok(vec![Complex64::new(0.0, 0.0); n]);
        }
        let cap = self.krylov_cap().min(n);
        let scale = (self.degree + self.dim) as f64;
        let mut basis: Vec<Vec<f64>> = vec![v.iter().map(|x| x / norm).collect()];
        let mut h = vec![vec![0.0; cap + 1]; cap + 1];
        let mut w = vec![0.0; n];
        let mut size = cap;
        for j in 0..cap {
            self.apply(&basis[j], &mut w);
            for _ in 0..2 {
                for (i, q) in basis.iter().enumerate() {
                    let c = self.inner(q, &w);
                    h[i][j] += c;
                    w.iter_mut().zip(q).for_each(|(wi, qi)| *wi -= c * qi);
                }
            }
            let beta = self.inner(&w, &w).sqrt();
            if beta <= 1e-11 * scale {
                size = j + 1;
                break;
            }
            if j + 1 == cap {
                return Err(Error::NoConvergence("Krylov space of Γ did not close"));
            }
            h[j + 1][j] = beta;
            basis.push(w.iter().map(|x| x / beta).collect());
        }
        let mut small = CMatrix::zeros(size);
        for (i, row) in h.iter().enumerate().take(size) {
            for (j, hij) in row.iter().enumerate().take(size) {
                small.set(i, j, Complex64::new(0.0, p * hij));
            }
        }
        let e = expm(&small);
        let mut out = vec![Complex64::new(0.0, 0.0); n];
        for (j, q) in basis.iter().take(size).enumerate() {
            let c = e.get(j, 0) * norm;
            out.iter_mut().zip(q).for_each(|(o, qi)| *o += c * qi);
        }
        Ok(out)
    }
}
