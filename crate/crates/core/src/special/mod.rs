//! Bessel functions of real order, Gegenbauer polynomials, the gamma
//! function and the quadrature rules used by the integral representations.

mod bessel;
mod gamma;
mod gegenbauer;
mod quadrature;

pub use bessel::{
    bessel_j, bessel_j_orders, bessel_ratio, bessel_ratio_orders, MAX_ARG, MAX_ORDER,
};
pub use gamma::{gamma, ln_gamma};
pub use gegenbauer::{gegenbauer, gegenbauer_all};
pub use quadrature::{
    composite_legendre, gauss_hermite, gauss_hermite_scaled, gauss_legendre, half_line_rule, QuadratureDomain,
    QuadratureRule, MAX_NODES,
};
