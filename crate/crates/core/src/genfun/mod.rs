//! Generating function of the even-dimensional kernels, its matrix
//! exponential form, an integral form at `p = π/2`, and Taylor-coefficient
//! extraction.

mod forms;
mod integral;
mod jet;

pub use forms::{genfun_closed, genfun_coeffs, genfun_matrix, MAX_COEFFS};
pub use integral::genfun_integral;
pub use jet::{ScalarJet, TaylorJet};
