use super::ast::DistExpr;
use super::parser::parse_dist;
use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::scalar::{real, Real};

/// Evaluates a syntax tree bottom-up: `*` is the strict product, `**` the
/// star product and `D[..]` the distributional derivative.
///
/// Errors from an operation are wrapped with the subexpression that raised
/// them.
pub fn lower<T: Real>(e: &DistExpr<T>) -> Result<Distribution<T>> {
    if let Ok(s) = e.to_smooth() {
        return Ok(Distribution::smooth_fn(s));
    }
    let at = |err: Error| match err {
        Error::Context { .. } => err,
        other => Error::Context {
            expr: e.to_string(),
            source: Box::new(other),
        },
    };
    match e {
        DistExpr::Theta(s) if s.reflected => Ok(Distribution::reflected_step(s.root())),
        DistExpr::Theta(s) => Ok(Distribution::step(s.root())),
        DistExpr::Delta { order, shift } => {
            let d = Distribution::delta(shift.root(), *order as usize);
            // delta^(n)(c - x) = (-1)^n delta^(n)(x - c)
            if shift.reflected && order % 2 == 1 {
                Ok(d.scale(real(-T::one())))
            } else {
                Ok(d)
            }
        }
        DistExpr::Neg(a) => Ok(-&lower(a)?),
        DistExpr::Add(a, b) => Ok(&lower(a)? + &lower(b)?),
        DistExpr::Sub(a, b) => Ok(&lower(a)? - &lower(b)?),
        DistExpr::Product(a, b) => lower(a)?.hormander(&lower(b)?).map_err(at),
        DistExpr::Star(a, b) => lower(a)?.star(&lower(b)?).map_err(at),
        DistExpr::Derivative(a) => lower(a)?.derivative().map_err(at),
        // Smooth-only productions that failed `to_smooth` above.
        DistExpr::Number(_) | DistExpr::Imag | DistExpr::X | DistExpr::Call(..) | DistExpr::Pow(..) => {
            Err(at(e.to_smooth().unwrap_err()))
        }
    }
}

/// `lower(parse_dist(text))`.
pub fn parse_distribution<T: Real>(text: &str) -> Result<Distribution<T>> {
    lower(&parse_dist::<T>(text)?)
}
