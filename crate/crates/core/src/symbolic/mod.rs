//! Polynomial fields with Clifford coefficients, the Dirac, Euler and `Γ`
//! operators, and the operator-exponential oracle for the kernel.

mod bruteforce;
mod gamma_op;
mod poly;

pub use bruteforce::{bruteforce_frame, kernel_bruteforce, truncation_for, BruteforceValue};
pub use gamma_op::{BladeSet, GammaMatrix, DENSE_MAX_DEGREE, DENSE_MAX_DIM, MAX_OPERATOR_SIZE};
pub use poly::{Monomial, PolyField};
