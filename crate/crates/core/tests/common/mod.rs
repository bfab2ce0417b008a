#![allow(dead_code)]

use cfk_core::clifford::Multivector;
use cfk_core::symbolic::{Monomial, PolyField};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(n.into())
}

/// Harmonic part of a homogeneous degree-`k` field:
/// `Σ_j c_j |y|^{2j} Δ^j P` with `c_j = (-1)^j / ((2j)!! Π_{i<j} (m + 2k - 4 - 2i))`.
pub fn harmonic_projection(p: &PolyField<Q>, k: u32) -> PolyField<Q> {
    let m = p.dim() as i64;
    let r2 = PolyField::<Q>::norm_sq(p.dim());
    let mut out = PolyField::zero(p.dim());
    let mut lap = p.clone();
    let mut radial = PolyField::constant(Multivector::scalar(p.dim(), Q::one()));
    let mut c = Q::one();
    for j in 0..=(k as i64 / 2) {
        if j > 0 {
            c = -c / (q(2 * j) * q(m + 2 * k as i64 - 4 - 2 * (j - 1)));
            lap = lap.laplacian();
            radial = radial.mul(&r2);
        }
        out = out.add(&radial.mul(&lap).scale(&c));
    }
    out
}

/// Splits a harmonic degree-`k` field `H = M_k + y M_{k-1}` into its two
/// monogenic pieces.
pub fn monogenic_split(h: &PolyField<Q>, k: u32) -> (PolyField<Q>, PolyField<Q>) {
    let m = h.dim() as i64;
    if k == 0 {
        return (h.clone(), PolyField::zero(h.dim()));
    }
    let lower = h.dirac().scale(&(-Q::one() / q(m + 2 * k as i64 - 2)));
    let top = h.sub(&lower.vector_times());
    (top, lower)
}

/// Float copy of a rational field.
pub fn to_float(p: &PolyField<Q>) -> PolyField<f64> {
    let mut out = PolyField::zero(p.dim());
    for (mono, c) in p.terms() {
        let coeffs = c.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
        out.add_term(mono.clone(), Multivector::from_coeffs(p.dim(), coeffs).unwrap());
    }
    out
}

/// Every monomial of degree `k` times every blade in `blades`.
pub fn basis_fields(m: usize, k: u32, blades: &[u32]) -> Vec<PolyField<Q>> {
    let mut out = Vec::new();
    for mono in Monomial::all_of_degree(m, k) {
        for &b in blades {
            let mut coeffs = vec![q(0); 1 << m];
            coeffs[b as usize] = q(1);
            out.push(PolyField::monomial(mono.clone(), Multivector::from_coeffs(m, coeffs).unwrap()));
        }
    }
    out
}
