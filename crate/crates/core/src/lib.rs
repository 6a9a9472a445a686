//! Symbolic kernel for the algebra of piecewise-smooth functions and their
//! distributional derivatives on the real line.
//!
//! Elements are [`Distribution`]s: a piecewise-smooth regular part plus
//! finitely many delta combs. Besides sums and derivatives the algebra has
//! two products: the strict product [`hormander_product`], defined when the
//! singular supports are disjoint, and the associative but non-commutative
//! [`star`] product, defined always. The [`schrodinger`] module builds the
//! confined free-particle Hamiltonians on top of it.
//!
//! Everything is generic over the working precision `T: Real` (`f32` or
//! `f64`); the aliases below fix it.
//!
//! ```
//! use distalg::{parse_distribution, Distribution64};
//!
//! let d: Distribution64 = parse_distribution("delta(x)").unwrap();
//! let theta: Distribution64 = parse_distribution("theta(x)").unwrap();
//! assert_eq!(d.star(&theta).unwrap(), d);
//! assert!(theta.star(&d).unwrap().is_zero());
//! ```

pub mod dist;
pub mod error;
pub mod expr;
pub mod numeric;
pub mod scalar;
pub mod schrodinger;
pub mod syntax;

pub use dist::{
    hormander_product, pair, smooth_times_comb, star, star_limit_oracle, DeltaComb, Distribution,
    OracleConfig, PiecewiseSmooth, TestFunction,
};
pub use error::{Error, Result};
pub use expr::{expr_equal, parse_smooth, SmoothExpr};
pub use scalar::{Real, Scalar};
pub use schrodinger::{OperatorExpr, WaveFunction};
pub use syntax::{format_dist, lower, parse_dist, parse_distribution, parse_test_function};

pub type Distribution64 = Distribution<f64>;
pub type Distribution32 = Distribution<f32>;
pub type SmoothExpr64 = SmoothExpr<f64>;
pub type SmoothExpr32 = SmoothExpr<f32>;
pub type TestFunction64 = TestFunction<f64>;
pub type WaveFunction64 = WaveFunction<f64>;
pub type OperatorExpr64 = OperatorExpr<f64>;
pub type Scalar64 = Scalar<f64>;
pub type Scalar32 = Scalar<f32>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_precision() {
        let d: Distribution32 = parse_distribution("delta'(x)").unwrap();
        let psi: Distribution32 = parse_distribution("theta(x)*sin(3*x)").unwrap();
        let r = d.star(&psi).unwrap();
        assert!((r.comb_at(0.0).unwrap().coeff(0).re + 3.0).abs() < 1e-5);
        let t = parse_test_function::<f32>("bump(0,1)").unwrap();
        let v = psi.pair(&t).unwrap();
        assert!(v.re > 0.0);
    }
}
