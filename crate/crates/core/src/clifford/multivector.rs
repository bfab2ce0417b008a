use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_complex::Complex64;

use super::Scalar;
use crate::error::{Error, Result};

pub const MAX_DIM: usize = 10;

/// Blade sign table for `Cl_{0,m}`: `e_A e_B = table[A][B] · e_{A xor B}`.
struct SignTable {
    size: usize,
    signs: Vec<i8>,
}

static SIGN_TABLES: [OnceLock<SignTable>; MAX_DIM + 1] = [const { OnceLock::new() }; MAX_DIM + 1];

fn sign_table(dim: usize) -> &'static SignTable {
    SIGN_TABLES[dim].get_or_init(|| {
        let size = 1usize << dim;
        let mut signs = vec![0i8; size * size];
        for a in 0..size {
            for b in 0..size {
                signs[a * size + b] = blade_product_sign(a as u32, b as u32);
            }
        }
        SignTable { size, signs }
    })
}

/// Sign of `e_A e_B` for bitmask blades in `Cl_{0,m}` (each `e_i² = -1`).
pub fn blade_product_sign(a: u32, b: u32) -> i8 {
    let mut swaps = 0u32;
    let mut shifted = a >> 1;
    while shifted != 0 {
        swaps += (shifted & b).count_ones();
        shifted >>= 1;
    }
    swaps += (a & b).count_ones();
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Grade of a bitmask blade.
pub fn blade_grade(blade: u32) -> usize {
    blade.count_ones() as usize
}

/// Bitmask of the blade `e_{i1} e_{i2} ...` (generator indices are 1-based).
/// Returns the mask together with the reordering sign.
pub fn blade_from_indices(indices: &[usize]) -> (u32, i8) {
    let mut mask = 0u32;
    let mut sign = 1i8;
    for &i in indices {
        let g = 1u32 << (i - 1);
        sign *= blade_product_sign(mask, g);
        mask ^= g;
    }
    (mask, sign)
}

/// 1-based generator indices of a bitmask blade, increasing.
pub fn blade_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|b| mask & (1 << b) != 0).map(|b| b + 1).collect()
}

/// Dense element of the (complexified) Clifford algebra `Cl_{0,m}`.
///
/// Coefficients are stored by bitmask blade index: bit `i-1` set means the
/// generator `e_i` appears, factors taken in increasing order.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<T> {
    dim: usize,
    coeffs: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "Cl_0,m supports m <= {MAX_DIM}");
        Self {
            dim,
            coeffs: vec![T::zero(); 1 << dim],
        }
    }

    pub fn scalar(dim: usize, value: T) -> Self {
        let mut out = Self::zero(dim);
        out.coeffs[0] = value;
        out
    }

    pub fn from_coeffs(dim: usize, coeffs: Vec<T>) -> Result<Self> {
        if dim > MAX_DIM || coeffs.len() != 1 << dim {
            return Err(Error::InvalidArgument(format!(
                "{} coefficients for dimension {dim}",
                coeffs.len()
            )));
        }
        Ok(Self { dim, coeffs })
    }

    /// `value · e_{i1} ... e_{ik}` for 1-based indices in any order.
    pub fn blade(dim: usize, indices: &[usize], value: T) -> Self {
        assert!(indices.iter().all(|&i| i >= 1 && i <= dim));
        // repeated generators square to -1
        indices.iter().fold(Self::scalar(dim, value), |acc, &i| {
            &acc * &Self::basis_vector(dim, i)
        })
    }

    fn basis_vector(dim: usize, i: usize) -> Self {
        let mut out = Self::zero(dim);
        out.coeffs[1 << (i - 1)] = T::one();
        out
    }

    /// Embeds a real vector `Σ x_j e_j`.
    pub fn vector(x: &[f64]) -> Self {
        let mut out = Self::zero(x.len());
        for (j, &xj) in x.iter().enumerate() {
            out.coeffs[1 << j] = T::from_f64(xj);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn coeffs_mut(&mut self) -> &mut [T] {
        &mut self.coeffs
    }

    pub fn coeff(&self, blade: u32) -> &T {
        &self.coeffs[blade as usize]
    }

    pub fn set_coeff(&mut self, blade: u32, value: T) {
        self.coeffs[blade as usize] = value;
    }

    pub fn scalar_part(&self) -> T {
        self.coeffs[0].clone()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn grade(&self, g: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, c) in self.coeffs.iter().enumerate() {
            if blade_grade(b as u32) == g {
                out.coeffs[b] = c.clone();
            }
        }
        out
    }

    pub fn scale(&self, s: &T) -> Self {
        Self {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c.clone() * s.clone()).collect(),
        }
    }

    /// Geometric product with a dimension check.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                left: self.dim,
                right: rhs.dim,
            });
        }
        let table = sign_table(self.dim);
        let n = table.size;
        let mut out = vec![T::zero(); n];
        for (a, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let row = &table.signs[a * n..(a + 1) * n];
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let prod = ca.clone() * cb.clone();
                let slot = &mut out[a ^ b];
                if row[b] > 0 {
                    *slot = slot.clone() + prod;
                } else {
                    *slot = slot.clone() - prod;
                }
            }
        }
        Ok(Self {
            dim: self.dim,
            coeffs: out,
        })
    }

    /// Left multiplication by a single blade, `e_B · self`.
    pub fn left_blade_mul(&self, blade: u32) -> Self {
        let mut out = vec![T::zero(); self.coeffs.len()];
        for (a, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = blade_product_sign(blade, a as u32);
            let idx = (blade as usize) ^ a;
            out[idx] = if s > 0 { c.clone() } else { -c.clone() };
        }
        Self {
            dim: self.dim,
            coeffs: out,
        }
    }

    /// Clifford conjugation: `conj(e_{j1}...e_{jl}) = (-1)^l e_{jl}...e_{j1}`,
    /// extended linearly; the complex unit is left fixed.
    pub fn conjugate(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(b, c)| {
                let l = blade_grade(b as u32);
                if (l * (l + 1) / 2).is_multiple_of(2) {
                    c.clone()
                } else {
                    -c.clone()
                }
            })
            .collect();
        Self {
            dim: self.dim,
            coeffs,
        }
    }

    /// `a · conj(a)`, the sum-of-squares Clifford norm (not hermitian).
    pub fn clifford_norm_sq(&self) -> Self {
        self * &self.conjugate()
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(Scalar::magnitude).fold(0.0, f64::max)
    }
}

impl Multivector<f64> {
    pub fn to_complex(&self) -> Multivector<Complex64> {
        Multivector {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|&c| Complex64::new(c, 0.0)).collect(),
        }
    }
}

/// Geometric product; errors on dimension mismatch.
pub fn mv_product<T: Scalar>(a: &Multivector<T>, b: &Multivector<T>) -> Result<Multivector<T>> {
    a.try_mul(b)
}

/// Inner and wedge product of two real vectors:
/// `(x, y) = -(xy + yx)/2` and `x ∧ y = (xy - yx)/2`.
pub fn vector_products(x: &[f64], y: &[f64]) -> Result<(f64, Multivector<f64>)> {
    if x.len() != y.len() {
        return Err(Error::DimensionMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    let m = x.len();
    let inner = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let mut wedge = Multivector::zero(m);
    for j in 0..m {
        for k in (j + 1)..m {
            wedge.coeffs[(1 << j) | (1 << k)] = x[j] * y[k] - x[k] * y[j];
        }
    }
    Ok((inner, wedge))
}

impl<T: Scalar> Mul for &Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: Self) -> Multivector<T> {
        self.try_mul(rhs).expect("multivector dimension mismatch")
    }
}

impl<T: Scalar> Add for &Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        assert_eq!(self.dim, rhs.dim, "multivector dimension mismatch");
        Multivector {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Sub for &Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        assert_eq!(self.dim, rhs.dim, "multivector dimension mismatch");
        Multivector {
            dim: self.dim,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;
    fn neg(self) -> Multivector<T> {
        Multivector {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

impl<T: Scalar> Add for Multivector<T> {
    type Output = Multivector<T>;
    fn add(self, rhs: Self) -> Multivector<T> {
        &self + &rhs
    }
}

impl<T: Scalar> Sub for Multivector<T> {
    type Output = Multivector<T>;
    fn sub(self, rhs: Self) -> Multivector<T> {
        &self - &rhs
    }
}

impl<T: Scalar> Mul for Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: Self) -> Multivector<T> {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(dim: usize, idx: &[usize]) -> Multivector<f64> {
        Multivector::blade(dim, idx, 1.0)
    }

    #[test]
    fn generators_square_to_minus_one() {
        for m in 1..=4 {
            for i in 1..=m {
                let sq = &e(m, &[i]) * &e(m, &[i]);
                assert_eq!(sq, Multivector::scalar(m, -1.0));
            }
        }
    }

    #[test]
    fn anticommutation() {
        let m = 4;
        for i in 1..=m {
            for j in 1..=m {
                let s = &(&e(m, &[i]) * &e(m, &[j])) + &(&e(m, &[j]) * &e(m, &[i]));
                let expect = if i == j { -2.0 } else { 0.0 };
                assert_eq!(s, Multivector::scalar(m, expect));
            }
        }
    }

    #[test]
    fn unit_bivector_squares_to_minus_one() {
        let b = e(3, &[1, 2]);
        assert_eq!(&b * &b, Multivector::scalar(3, -1.0));
    }

    #[test]
    fn vector_product_in_the_plane() {
        let x = Multivector::<f64>::vector(&[1.0, 2.0]);
        let y = Multivector::<f64>::vector(&[3.0, 4.0]);
        let xy = &x * &y;
        assert_eq!(xy.coeffs(), &[-11.0, 0.0, 0.0, -2.0]);
    }

    #[test]
    fn vector_products_examples() {
        let (i, w) = vector_products(&[1.0, 0.0], &[0.0, 1.0]).unwrap();
        assert_eq!(i, 0.0);
        assert_eq!(w, e(2, &[1, 2]));

        let (_, w) = vector_products(&[0.3, -1.2, 2.0], &[0.3, -1.2, 2.0]).unwrap();
        assert!(w.is_zero());

        let (i, w) = vector_products(&[1.0, 2.0, 0.0], &[3.0, 4.0, 0.0]).unwrap();
        assert_eq!(i, 11.0);
        assert_eq!(w, e(3, &[1, 2]).scale(&-2.0));

        assert!(vector_products(&[1.0], &[1.0, 2.0]).is_err());
    }

    #[test]
    fn xy_is_minus_inner_plus_wedge() {
        let xs = [0.4, -1.1, 2.5, 0.7];
        let ys = [1.3, 0.2, -0.6, 1.9];
        let (inner, wedge) = vector_products(&xs, &ys).unwrap();
        let xy = &Multivector::<f64>::vector(&xs) * &Multivector::vector(&ys);
        let rhs = &Multivector::scalar(4, -inner) + &wedge;
        assert!((&xy - &rhs).max_abs() < 1e-14);
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(e(2, &[1, 2]).conjugate(), e(2, &[2, 1]));
        assert_eq!(e(2, &[2, 1]), e(2, &[1, 2]).scale(&-1.0));
        assert_eq!(e(2, &[1]).conjugate(), e(2, &[1]).scale(&-1.0));
        let x = Multivector::<f64>::vector(&[3.0, 4.0]);
        assert_eq!(x.clifford_norm_sq(), Multivector::scalar(2, 25.0));
    }

    #[test]
    fn complex_unit_is_fixed_by_conjugation() {
        let a = Multivector::<Complex64>::scalar(3, Complex64::i());
        assert_eq!(a.conjugate(), a);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let a = Multivector::<f64>::scalar(2, 1.0);
        let b = Multivector::<f64>::scalar(3, 1.0);
        assert!(matches!(
            mv_product(&a, &b),
            Err(Error::DimensionMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn grade_projections_sum_to_whole() {
        let coeffs: Vec<f64> = (0..16).map(|i| (i as f64 * 0.37).sin()).collect();
        let a = Multivector::from_coeffs(4, coeffs).unwrap();
        let mut sum = Multivector::zero(4);
        for g in 0..=4 {
            sum = &sum + &a.grade(g);
        }
        assert_eq!(sum, a);
    }

    #[test]
    fn blade_from_indices_sign() {
        assert_eq!(blade_from_indices(&[2, 1]), (0b11, -1));
        assert_eq!(blade_from_indices(&[1, 3]), (0b101, 1));
        assert_eq!(blade_indices(0b101), vec![1, 3]);
    }
}
