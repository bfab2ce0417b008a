//! Dense `Cl_{0,m}` arithmetic and the plane-algebra reduction every kernel
//! formula goes through.

mod frame;
mod multivector;
mod plane;
mod scalar;

pub use frame::{frame_of, GeometricFrame};
pub use multivector::{
    blade_from_indices, blade_grade, blade_indices, blade_product_sign, mv_product,
    vector_products, Multivector, MAX_DIM,
};
pub use plane::{exp_simple_bivector, plane_mul, sinc, PlaneValue};
pub use scalar::Scalar;
