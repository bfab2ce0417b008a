use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::clifford::{Multivector, Scalar};

/// Exponent vector of a monomial `y_1^{a_1} ... y_m^{a_m}`, ordered
/// graded-lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(dim: usize) -> Self {
        Monomial(vec![0; dim])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Every exponent vector of total degree `k` in `dim` variables, in
    /// descending graded-lex order.
    pub fn all_of_degree(dim: usize, k: u32) -> Vec<Monomial> {
        fn rec(dim: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if cur.len() + 1 == dim {
                cur.push(left);
                out.push(Monomial(cur.clone()));
                cur.pop();
                return;
            }
            for a in (0..=left).rev() {
                cur.push(a);
                rec(dim, left - a, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if dim == 0 {
            return out;
        }
        rec(dim, k, &mut Vec::with_capacity(dim), &mut out);
        out
    }

    /// `Π a_j!`, the Fischer norm of the monomial.
    pub fn factorial_weight(&self) -> f64 {
        self.0
            .iter()
            .map(|&a| (1..=a).map(f64::from).product::<f64>())
            .product()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `y ∈ R^m` with Clifford-valued coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyField<T> {
    dim: usize,
    terms: BTreeMap<Monomial, Multivector<T>>,
}

impl<T: Scalar> PolyField<T> {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(value: Multivector<T>) -> Self {
        Self::monomial(Monomial::one(value.dim()), value)
    }

    pub fn monomial(mono: Monomial, coeff: Multivector<T>) -> Self {
        assert_eq!(mono.0.len(), coeff.dim(), "monomial and coefficient dimensions differ");
        let mut out = Self::zero(coeff.dim());
        out.add_term(mono, coeff);
        out
    }

    /// The scalar coordinate function `y_j` (1-based).
    pub fn coordinate(dim: usize, j: usize) -> Self {
        let mut e = vec![0; dim];
        e[j - 1] = 1;
        Self::monomial(Monomial(e), Multivector::scalar(dim, T::one()))
    }

    /// The vector variable `y = Σ y_j e_j`.
    pub fn vector_variable(dim: usize) -> Self {
        let mut out = Self::zero(dim);
        for j in 1..=dim {
            let mut e = vec![0; dim];
            e[j - 1] = 1;
            out.add_term(Monomial(e), Multivector::blade(dim, &[j], T::one()));
        }
        out
    }

    /// `|y|² = Σ y_j²`.
    pub fn norm_sq(dim: usize) -> Self {
        let mut out = Self::zero(dim);
        for j in 0..dim {
            let mut e = vec![0; dim];
            e[j] = 2;
            out.add_term(Monomial(e), Multivector::scalar(dim, T::one()));
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Multivector<T>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Option<&Multivector<T>> {
        self.terms.get(mono)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest total degree present, `None` for the zero field.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn add_term(&mut self, mono: Monomial, coeff: Multivector<T>) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.remove(&mono) {
            Some(old) => {
                let sum = &old + &coeff;
                if !sum.is_zero() {
                    self.terms.insert(mono, sum);
                }
            }
            None => {
                self.terms.insert(mono, coeff);
            }
        }
    }

    pub fn homogeneous_part(&self, k: u32) -> Self {
        Self {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.scale(s));
        }
        out
    }

    /// `a · f` with the constant multivector on the left.
    pub fn left_mul(&self, a: &Multivector<T>) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        out
    }

    /// Pointwise product `f(y) g(y)`, Clifford order preserved.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.dim);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mono = Monomial(ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect());
                out.add_term(mono, ca * cb);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    /// `∂f/∂y_j` (1-based).
    pub fn partial(&self, j: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            let a = m.0[j - 1];
            if a == 0 {
                continue;
            }
            let mut e = m.0.clone();
            e[j - 1] -= 1;
            out.add_term(Monomial(e), c.scale(&T::from_i64(a as i64)));
        }
        out
    }

    /// `y_j f` (1-based).
    pub fn times_coordinate(&self, j: usize) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e[j - 1] += 1;
            out.add_term(Monomial(e), c.clone());
        }
        out
    }

    /// Dirac operator `D f = Σ e_j ∂_j f`.
    pub fn dirac(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for j in 1..=self.dim {
            let dj = self.partial(j);
            for (m, c) in dj.terms {
                out.add_term(m, c.left_blade_mul(1 << (j - 1)));
            }
        }
        out
    }

    /// Euler operator `E f = Σ y_j ∂_j f`; scales each term by its degree.
    pub fn euler(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.scale(&T::from_i64(m.degree() as i64)));
        }
        out
    }

    pub fn laplacian(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for j in 1..=self.dim {
            out = out.add(&self.partial(j).partial(j));
        }
        out
    }

    /// Left multiplication by the vector variable, `y f`.
    pub fn vector_times(&self) -> Self {
        Self::vector_variable(self.dim).mul(self)
    }

    /// `Γ f = -y D f - E f`.
    pub fn gamma(&self) -> Self {
        self.dirac().vector_times().add(&self.euler()).scale(&T::from_i64(-1))
    }

    /// `Γ f = -Σ_{j<l} e_j e_l (y_j ∂_l - y_l ∂_j) f`.
    pub fn gamma_bivector_form(&self) -> Self {
        let mut out = Self::zero(self.dim);
        for j in 1..=self.dim {
            for l in (j + 1)..=self.dim {
                let rot = self
                    .partial(l)
                    .times_coordinate(j)
                    .sub(&self.partial(j).times_coordinate(l));
                let blade = (1u32 << (j - 1)) | (1u32 << (l - 1));
                for (m, c) in rot.terms {
                    out.add_term(m, -&c.left_blade_mul(blade));
                }
            }
        }
        out
    }

    /// Value at a point.
    pub fn evaluate(&self, y: &[T]) -> Multivector<T> {
        assert_eq!(y.len(), self.dim, "evaluation point dimension");
        let mut out = Multivector::zero(self.dim);
        for (m, c) in &self.terms {
            let mut w = T::one();
            for (yj, &a) in y.iter().zip(&m.0) {
                for _ in 0..a {
                    w = w * yj.clone();
                }
            }
            out = &out + &c.scale(&w);
        }
        out
    }
}
