//! Numerical engine for the fractional Clifford–Fourier kernel
//! `K_m^p(x, y) = exp(i p Γ_y) exp(-i (x, y))`.
//!
//! Every kernel value lives in the commutative plane algebra spanned by `1`
//! and the bivector `x ∧ y`, so the representations in [`kernel`],
//! [`genfun`] and [`laplace`] all return a [`PlaneValue`] built on a
//! [`GeometricFrame`]. [`symbolic`] provides a brute-force oracle that
//! applies the operator exponential to polynomial fields directly, and
//! [`transform`] applies the transform to sampled functions.

// `!(a <= b)` is used on purpose so that NaN fails range checks
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod clifford;
pub mod error;
pub mod expm;
pub mod genfun;
pub mod kernel;
pub mod laplace;
pub mod parallel;
pub mod special;
pub mod symbolic;
pub mod transform;
pub mod validation;

pub use clifford::{frame_of, GeometricFrame, Multivector, PlaneValue, Scalar};
pub use error::{Error, Result};
pub use kernel::{kernel, KernelRequest, KernelValue, Strategy};
pub use num_complex::Complex64;
