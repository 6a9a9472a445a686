//! Numerical building blocks: adaptive quadrature, extrapolation to the
//! limit, and truncated Taylor arithmetic.

pub mod jet;
pub mod quad;
pub mod richardson;

pub use quad::{integrate, Quadrature};
pub use richardson::{richardson, Extrapolated};
