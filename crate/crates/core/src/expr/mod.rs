//! Infinitely smooth scalar expressions on the real line.
//!
//! The grammar only admits constants, the variable `x`, sums, products,
//! negation, non-negative integer powers, `sin`, `cos` and `exp`. Every
//! expression is therefore an entire function, smooth on all of the line,
//! and its derivative stays in the grammar.

mod canon;
mod display;

use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{is_finite, real, Real, Scalar};

pub(crate) use canon::Poly;

/// Number of Chebyshev sample nodes used by [`expr_equal`].
pub const SAMPLE_NODES: usize = 17;

/// Expression tree over `{const, x, +, *, -, ^n, sin, cos, exp}`.
#[derive(Clone, Debug, PartialEq)]
pub enum SmoothExpr<T: Real> {
    Const(Scalar<T>),
    X,
    Add(Vec<SmoothExpr<T>>),
    Mul(Vec<SmoothExpr<T>>),
    Neg(Box<SmoothExpr<T>>),
    Pow(Box<SmoothExpr<T>>, u32),
    Sin(Box<SmoothExpr<T>>),
    Cos(Box<SmoothExpr<T>>),
    Exp(Box<SmoothExpr<T>>),
}

impl<T: Real> SmoothExpr<T> {
    pub fn zero() -> Self {
        SmoothExpr::Const(Complex::new(T::zero(), T::zero()))
    }

    pub fn one() -> Self {
        SmoothExpr::real(T::one())
    }

    pub fn real(v: T) -> Self {
        SmoothExpr::Const(real(v))
    }

    pub fn constant(c: Scalar<T>) -> Self {
        SmoothExpr::Const(c)
    }

    pub fn x() -> Self {
        SmoothExpr::X
    }

    pub fn sin(self) -> Self {
        SmoothExpr::Sin(Box::new(self))
    }

    pub fn cos(self) -> Self {
        SmoothExpr::Cos(Box::new(self))
    }

    pub fn exp(self) -> Self {
        SmoothExpr::Exp(Box::new(self))
    }

    pub fn powi(self, n: u32) -> Self {
        SmoothExpr::Pow(Box::new(self), n)
    }

    /// Canonical form: collected sums, folded constants, merged
    /// exponentials, coefficients below the zero threshold dropped.
    pub fn normalize(&self) -> Self {
        Poly::from_tree(self).to_tree()
    }

    /// True when the canonical form is the zero constant.
    pub fn is_zero(&self) -> bool {
        Poly::from_tree(self).is_zero()
    }

    /// Returns the value if the canonical form is a constant.
    pub fn as_constant(&self) -> Option<Scalar<T>> {
        Poly::from_tree(self).as_constant()
    }

    /// Symbolic derivative, in canonical form.
    pub fn diff(&self) -> Self {
        Poly::from_tree(self).diff().to_tree()
    }

    /// `n`-th derivative, in canonical form.
    pub fn diff_n(&self, n: usize) -> Self {
        let mut p = Poly::from_tree(self);
        for _ in 0..n {
            p = p.diff();
        }
        p.to_tree()
    }

    /// Canonical product.
    pub fn times(&self, other: &Self) -> Self {
        Poly::from_tree(self).mul(&Poly::from_tree(other)).to_tree()
    }

    /// Canonical sum.
    pub fn plus(&self, other: &Self) -> Self {
        Poly::from_tree(self).add(&Poly::from_tree(other)).to_tree()
    }

    /// Canonical scalar multiple.
    pub fn scaled(&self, c: Scalar<T>) -> Self {
        Poly::from_tree(self).scale(c).to_tree()
    }

    /// Substitutes `x -> x + shift`, in canonical form.
    pub fn shifted(&self, shift: T) -> Self {
        let arg = SmoothExpr::Add(vec![SmoothExpr::X, SmoothExpr::real(shift)]);
        self.substitute(&arg).normalize()
    }

    /// Replaces every occurrence of `x` by `arg`.
    pub fn substitute(&self, arg: &Self) -> Self {
        let sub = |e: &Self| Box::new(e.substitute(arg));
        match self {
            SmoothExpr::Const(c) => SmoothExpr::Const(*c),
            SmoothExpr::X => arg.clone(),
            SmoothExpr::Add(ts) => SmoothExpr::Add(ts.iter().map(|t| t.substitute(arg)).collect()),
            SmoothExpr::Mul(fs) => SmoothExpr::Mul(fs.iter().map(|f| f.substitute(arg)).collect()),
            SmoothExpr::Neg(a) => SmoothExpr::Neg(sub(a)),
            SmoothExpr::Pow(b, n) => SmoothExpr::Pow(sub(b), *n),
            SmoothExpr::Sin(a) => SmoothExpr::Sin(sub(a)),
            SmoothExpr::Cos(a) => SmoothExpr::Cos(sub(a)),
            SmoothExpr::Exp(a) => SmoothExpr::Exp(sub(a)),
        }
    }

    /// Evaluates at `x0`. Overflow is an error, never an infinity.
    pub fn eval(&self, x0: T) -> Result<Scalar<T>> {
        let v = self.eval_raw(real(x0));
        if is_finite(v) {
            Ok(v)
        } else {
            Err(Error::Overflow { at: x0.as_f64() })
        }
    }

    pub(crate) fn eval_raw(&self, x: Scalar<T>) -> Scalar<T> {
        match self {
            SmoothExpr::Const(c) => *c,
            SmoothExpr::X => x,
            SmoothExpr::Add(ts) => ts
                .iter()
                .fold(Complex::new(T::zero(), T::zero()), |acc, t| acc + t.eval_raw(x)),
            SmoothExpr::Mul(fs) => fs
                .iter()
                .fold(Complex::new(T::one(), T::zero()), |acc, f| acc * f.eval_raw(x)),
            SmoothExpr::Neg(a) => -a.eval_raw(x),
            SmoothExpr::Pow(b, n) => b.eval_raw(x).powu(*n),
            SmoothExpr::Sin(a) => a.eval_raw(x).sin(),
            SmoothExpr::Cos(a) => a.eval_raw(x).cos(),
            SmoothExpr::Exp(a) => a.eval_raw(x).exp(),
        }
    }

    /// `(e(x0), e'(x0), ..., e^(order)(x0))` by repeated differentiation.
    pub fn taylor_data(&self, x0: T, order: usize) -> Result<Vec<Scalar<T>>> {
        let mut p = Poly::from_tree(self);
        let mut out = Vec::with_capacity(order + 1);
        for j in 0..=order {
            out.push(p.to_tree().eval(x0)?);
            if j < order {
                p = p.diff();
            }
        }
        Ok(out)
    }

    /// Number of nodes in the tree.
    pub fn size(&self) -> usize {
        match self {
            SmoothExpr::Const(_) | SmoothExpr::X => 1,
            SmoothExpr::Add(v) | SmoothExpr::Mul(v) => 1 + v.iter().map(Self::size).sum::<usize>(),
            SmoothExpr::Neg(a)
            | SmoothExpr::Pow(a, _)
            | SmoothExpr::Sin(a)
            | SmoothExpr::Cos(a)
            | SmoothExpr::Exp(a) => 1 + a.size(),
        }
    }
}

impl<T: Real> Add for SmoothExpr<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        SmoothExpr::Add(vec![self, rhs])
    }
}

impl<T: Real> Sub for SmoothExpr<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        SmoothExpr::Add(vec![self, SmoothExpr::Neg(Box::new(rhs))])
    }
}

impl<T: Real> Mul for SmoothExpr<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        SmoothExpr::Mul(vec![self, rhs])
    }
}

impl<T: Real> Neg for SmoothExpr<T> {
    type Output = Self;
    fn neg(self) -> Self {
        SmoothExpr::Neg(Box::new(self))
    }
}

/// Chebyshev nodes of the first kind on `[a, b]`.
pub fn chebyshev_nodes<T: Real>(a: T, b: T, m: usize) -> Vec<T> {
    let mid = (a + b) / T::lit(2.0);
    let half = (b - a) / T::lit(2.0);
    (0..m)
        .map(|i| {
            let theta = T::PI() * T::lit((2 * i + 1) as f64) / T::lit((2 * m) as f64);
            mid + half * theta.cos()
        })
        .collect()
}

/// Sampling equality on `[a, b]`: true iff the two expressions agree within
/// `tol * max(1, |e1|, |e2|)` at every Chebyshev node. This is a
/// semi-decision: a `false` is definitive, a `true` is evidence.
pub fn expr_equal<T: Real>(e1: &SmoothExpr<T>, e2: &SmoothExpr<T>, a: T, b: T, tol: T) -> bool {
    debug_assert!(b > a, "degenerate interval");
    if e1 == e2 {
        return true;
    }
    chebyshev_nodes(a, b, SAMPLE_NODES).into_iter().all(|x| {
        match (e1.eval(x), e2.eval(x)) {
            (Ok(u), Ok(v)) => crate::scalar::close(u, v, tol),
            _ => false,
        }
    })
}

/// Parses an expression in the smooth sub-grammar.
pub fn parse_smooth<T: Real>(text: &str) -> Result<SmoothExpr<T>> {
    crate::syntax::parse_dist::<T>(text)?.to_smooth()
}
