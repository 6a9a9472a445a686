use std::fmt;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::expr::SmoothExpr;
use crate::scalar::Real;

/// Argument `±x + offset` of `theta` and `delta`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Shift<T: Real> {
    pub reflected: bool,
    pub offset: T,
}

impl<T: Real> Shift<T> {
    pub fn at(point: T) -> Self {
        Shift {
            reflected: false,
            offset: -point,
        }
    }

    /// The point where the argument vanishes.
    pub fn root(&self) -> T {
        let r = if self.reflected { self.offset } else { -self.offset };
        r + T::zero()
    }
}

impl<T: Real> fmt::Display for Shift<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.reflected { "-x" } else { "x" })?;
        let o = self.offset + T::zero();
        if o > T::zero() {
            write!(f, "+{o}")
        } else if o < T::zero() {
            write!(f, "-{}", -o)
        } else {
            Ok(())
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Sin,
    Cos,
    Exp,
}

impl Func {
    fn name(self) -> &'static str {
        match self {
            Func::Sin => "sin",
            Func::Cos => "cos",
            Func::Exp => "exp",
        }
    }
}

/// Surface syntax tree of a distribution expression.
#[derive(Clone, Debug, PartialEq)]
pub enum DistExpr<T: Real> {
    Number(T),
    Imag,
    X,
    Theta(Shift<T>),
    Delta { order: u32, shift: Shift<T> },
    Call(Func, Box<DistExpr<T>>),
    Neg(Box<DistExpr<T>>),
    Add(Box<DistExpr<T>>, Box<DistExpr<T>>),
    Sub(Box<DistExpr<T>>, Box<DistExpr<T>>),
    Pow(Box<DistExpr<T>>, u32),
    /// `*`: strict product, singular supports must be disjoint.
    Product(Box<DistExpr<T>>, Box<DistExpr<T>>),
    /// `**`: star product.
    Star(Box<DistExpr<T>>, Box<DistExpr<T>>),
    Derivative(Box<DistExpr<T>>),
}

impl<T: Real> DistExpr<T> {
    /// Converts a tree that only uses the smooth sub-grammar. Sums and
    /// products chains become n-ary nodes.
    pub fn to_smooth(&self) -> Result<SmoothExpr<T>> {
        let bad = |what: &str| {
            Err(Error::NonSmooth {
                construct: what.to_string(),
                line: 1,
                column: 1,
            })
        };
        Ok(match self {
            DistExpr::Number(v) => SmoothExpr::real(*v),
            DistExpr::Imag => SmoothExpr::Const(Complex::new(T::zero(), T::one())),
            DistExpr::X => SmoothExpr::X,
            DistExpr::Theta(s) => return bad(&format!("theta({s})")),
            DistExpr::Delta { .. } => return bad(&self.to_string()),
            DistExpr::Derivative(_) => return bad(&self.to_string()),
            DistExpr::Star(..) => return bad("**"),
            DistExpr::Call(func, a) => {
                let a = Box::new(a.to_smooth()?);
                match func {
                    Func::Sin => SmoothExpr::Sin(a),
                    Func::Cos => SmoothExpr::Cos(a),
                    Func::Exp => SmoothExpr::Exp(a),
                }
            }
            DistExpr::Neg(a) => SmoothExpr::Neg(Box::new(a.to_smooth()?)),
            DistExpr::Add(..) | DistExpr::Sub(..) => {
                let mut terms = Vec::new();
                self.collect_sum(&mut terms, false)?;
                SmoothExpr::Add(terms)
            }
            DistExpr::Product(..) => {
                let mut factors = Vec::new();
                self.collect_product(&mut factors)?;
                SmoothExpr::Mul(factors)
            }
            DistExpr::Pow(b, n) => SmoothExpr::Pow(Box::new(b.to_smooth()?), *n),
        })
    }

    fn collect_sum(&self, out: &mut Vec<SmoothExpr<T>>, negate: bool) -> Result<()> {
        match self {
            DistExpr::Add(a, b) => {
                a.collect_sum(out, false)?;
                b.push_term(out, negate)
            }
            DistExpr::Sub(a, b) => {
                a.collect_sum(out, false)?;
                b.push_term(out, true)
            }
            other => other.push_term(out, negate),
        }
    }

    fn push_term(&self, out: &mut Vec<SmoothExpr<T>>, negate: bool) -> Result<()> {
        let t = self.to_smooth()?;
        out.push(if negate { SmoothExpr::Neg(Box::new(t)) } else { t });
        Ok(())
    }

    fn collect_product(&self, out: &mut Vec<SmoothExpr<T>>) -> Result<()> {
        match self {
            DistExpr::Product(a, b) => {
                a.collect_product(out)?;
                out.push(b.to_smooth()?);
                Ok(())
            }
            other => {
                out.push(other.to_smooth()?);
                Ok(())
            }
        }
    }

    fn prec(&self) -> u8 {
        match self {
            DistExpr::Add(..) | DistExpr::Sub(..) => 0,
            DistExpr::Product(..) | DistExpr::Star(..) => 1,
            DistExpr::Neg(_) => 2,
            DistExpr::Pow(..) => 3,
            _ => 4,
        }
    }

    fn write_sub(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.prec() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

impl<T: Real> fmt::Display for DistExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistExpr::Number(v) => {
                if *v < T::zero() {
                    write!(f, "({v})")
                } else {
                    write!(f, "{v}")
                }
            }
            DistExpr::Imag => f.write_str("i"),
            DistExpr::X => f.write_str("x"),
            DistExpr::Theta(s) => write!(f, "theta({s})"),
            DistExpr::Delta { order, shift } => match order {
                0 => write!(f, "delta({shift})"),
                1 => write!(f, "delta'({shift})"),
                2 => write!(f, "delta''({shift})"),
                n => write!(f, "delta^({n})({shift})"),
            },
            DistExpr::Call(func, a) => write!(f, "{}({a})", func.name()),
            DistExpr::Neg(a) => {
                f.write_str("-")?;
                a.write_sub(f, 3)
            }
            DistExpr::Add(a, b) => {
                a.write_sub(f, 0)?;
                f.write_str(" + ")?;
                b.write_sub(f, 1)
            }
            DistExpr::Sub(a, b) => {
                a.write_sub(f, 0)?;
                f.write_str(" - ")?;
                b.write_sub(f, 1)
            }
            DistExpr::Pow(b, n) => {
                b.write_sub(f, 4)?;
                write!(f, "^{n}")
            }
            DistExpr::Product(a, b) => {
                a.write_sub(f, 1)?;
                f.write_str("*")?;
                b.write_sub(f, 2)
            }
            DistExpr::Star(a, b) => {
                a.write_sub(f, 1)?;
                f.write_str(" ** ")?;
                b.write_sub(f, 2)
            }
            DistExpr::Derivative(a) => write!(f, "D[{a}]"),
        }
    }
}
