//! Real and complex scalar types shared by the whole kernel.
//!
//! Everything in the crate is generic over a [`Real`] floating-point type;
//! coefficients are complex numbers over that type.

use std::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Floating-point type the kernel can compute with: `f32` or `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Default
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Magnitude below which a computed value is treated as an exact zero.
    fn eps_zero() -> Self;

    /// Default tolerance for adaptive quadrature.
    fn quad_tol() -> Self;

    /// Converts an `f64` literal. Panics only if the type cannot represent
    /// finite `f64` constants, which never happens for `f32`/`f64`.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Real for f64 {
    fn eps_zero() -> Self {
        1e-9
    }
    fn quad_tol() -> Self {
        1e-10
    }
}

impl Real for f32 {
    fn eps_zero() -> Self {
        1e-4
    }
    fn quad_tol() -> Self {
        1e-5
    }
}

/// Complex coefficient over a real type.
pub type Scalar<T> = Complex<T>;

pub fn real<T: Real>(v: T) -> Scalar<T> {
    Complex::new(v, T::zero())
}

pub fn is_finite<T: Real>(z: Scalar<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// Zeroes the real and imaginary parts separately when below `eps`.
/// Also maps `-0.0` to `0.0` so printed output is stable.
pub fn chop<T: Real>(z: Scalar<T>, eps: T) -> Scalar<T> {
    let part = |v: T| if v.abs() < eps { T::zero() } else { v + T::zero() };
    Complex::new(part(z.re), part(z.im))
}

pub fn is_negligible<T: Real>(z: Scalar<T>, eps: T) -> bool {
    z.re.abs() < eps && z.im.abs() < eps
}

/// Mixed absolute/relative comparison: `|a - b| <= tol * max(1, |a|, |b|)`.
pub fn close<T: Real>(a: Scalar<T>, b: Scalar<T>, tol: T) -> bool {
    let scale = T::one().max(a.norm()).max(b.norm());
    (a - b).norm() <= tol * scale
}

/// Mixed comparison for real points.
pub fn close_points<T: Real>(a: T, b: T, tol: T) -> bool {
    (a - b).abs() <= tol * T::one().max(a.abs()).max(b.abs())
}

/// Total order on scalars used for canonical sorting (lexicographic on
/// real then imaginary part).
pub(crate) fn cmp_scalar<T: Real>(a: &Scalar<T>, b: &Scalar<T>) -> std::cmp::Ordering {
    cmp_real(a.re, b.re).then_with(|| cmp_real(a.im, b.im))
}

pub(crate) fn cmp_real<T: Real>(a: T, b: T) -> std::cmp::Ordering {
    a.partial_cmp(&b).unwrap_or(std::cmp::Ordering::Equal)
}

/// Writes a scalar in the surface syntax: `2`, `-0.5`, `3*i`, `(1 + 2*i)`.
pub fn format_scalar<T: Real>(z: Scalar<T>) -> String {
    let z = chop(z, T::zero());
    if z.im == T::zero() {
        format!("{}", z.re)
    } else if z.re == T::zero() {
        imag_part(z.im)
    } else if z.im < T::zero() {
        format!("({} - {})", z.re, imag_part(-z.im))
    } else {
        format!("({} + {})", z.re, imag_part(z.im))
    }
}

fn imag_part<T: Real>(im: T) -> String {
    if im == T::one() {
        "i".to_string()
    } else if im == -T::one() {
        "-i".to_string()
    } else {
        format!("{im}*i")
    }
}

/// Human-readable value, e.g. for printing pairings: `0.5` or `0.5 + 2i`.
pub fn display_value<T: Real>(z: Scalar<T>) -> String {
    let z = chop(z, T::zero());
    if z.im == T::zero() {
        format!("{}", z.re)
    } else if z.im < T::zero() {
        format!("{} - {}i", z.re, -z.im)
    } else {
        format!("{} + {}i", z.re, z.im)
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    (0..k).fold(1.0, |acc, j| acc * (n - j) as f64 / (j + 1) as f64)
}
