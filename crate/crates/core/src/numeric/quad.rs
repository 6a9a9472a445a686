//! Globally adaptive 7/15-point Gauss–Kronrod quadrature for complex-valued
//! integrands of a real variable.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{Real, Scalar};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_INTERVALS: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quadrature<T: Real> {
    pub value: Scalar<T>,
    pub error: T,
}

struct Segment<T: Real> {
    a: T,
    b: T,
    value: Scalar<T>,
    error: T,
}

fn kronrod<T, F>(f: &F, a: T, b: T) -> Result<Segment<T>>
where
    T: Real,
    F: Fn(T) -> Result<Scalar<T>>,
{
    let two = T::lit(2.0);
    let center = (a + b) / two;
    let half = (b - a) / two;
    let fc = f(center)?;
    let mut k = fc * T::lit(WGK[7]);
    let mut g = fc * T::lit(WG[3]);
    for j in 0..7 {
        let dx = half * T::lit(XGK[j]);
        let pair = f(center - dx)? + f(center + dx)?;
        k = k + pair * T::lit(WGK[j]);
        if j % 2 == 1 {
            g = g + pair * T::lit(WG[j / 2]);
        }
    }
    let value = k * half;
    let error = ((k - g) * half).norm();
    Ok(Segment { a, b, value, error })
}

/// Integrates `f` over `[a, b]` until the estimated error is below
/// `tol * max(1, |I|)`.
pub fn integrate<T, F>(f: F, a: T, b: T, tol: T) -> Result<Quadrature<T>>
where
    T: Real,
    F: Fn(T) -> Result<Scalar<T>>,
{
    if a == b {
        return Ok(Quadrature {
            value: Complex::new(T::zero(), T::zero()),
            error: T::zero(),
        });
    }
    let mut segs = vec![kronrod(&f, a, b)?];
    let roundoff = T::lit(50.0) * T::epsilon();
    loop {
        let total: Scalar<T> = segs
            .iter()
            .fold(Complex::new(T::zero(), T::zero()), |acc, s| acc + s.value);
        let err = segs.iter().fold(T::zero(), |acc, s| acc + s.error);
        let target = tol * T::one().max(total.norm());
        if err <= target || err <= roundoff * total.norm() {
            return Ok(Quadrature {
                value: total,
                error: err,
            });
        }
        if segs.len() >= MAX_INTERVALS {
            return Err(Error::QuadratureFailure {
                achieved: err.as_f64(),
                requested: target.as_f64(),
            });
        }
        let (worst, _) = segs
            .iter()
            .enumerate()
            .fold((0, -T::one()), |(bi, be), (i, s)| {
                if s.error > be {
                    (i, s.error)
                } else {
                    (bi, be)
                }
            });
        let s = segs.swap_remove(worst);
        let mid = (s.a + s.b) / T::lit(2.0);
        if mid <= s.a || mid >= s.b {
            return Err(Error::QuadratureFailure {
                achieved: err.as_f64(),
                requested: target.as_f64(),
            });
        }
        segs.push(kronrod(&f, s.a, mid)?);
        segs.push(kronrod(&f, mid, s.b)?);
    }
}

/// Integrates over `[a, b]`, splitting at the given interior points first.
pub fn integrate_split<T, F>(f: F, a: T, b: T, cuts: &[T], tol: T) -> Result<Quadrature<T>>
where
    T: Real,
    F: Fn(T) -> Result<Scalar<T>>,
{
    let mut edges = vec![a];
    edges.extend(cuts.iter().copied().filter(|&c| c > a && c < b));
    edges.push(b);
    let mut out = Quadrature {
        value: Complex::new(T::zero(), T::zero()),
        error: T::zero(),
    };
    for w in edges.windows(2) {
        let q = integrate(&f, w[0], w[1], tol)?;
        out.value = out.value + q.value;
        out.error = out.error + q.error;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::real;

    #[test]
    fn polynomial_is_exact() {
        let q = integrate(|x: f64| Ok(real(x * x * x - x)), 0.0, 2.0, 1e-12).unwrap();
        assert!((q.value.re - 2.0).abs() < 1e-14);
    }

    #[test]
    fn exponential_decay() {
        let q = integrate(|x: f64| Ok(real((-2.0 * x).exp())), 0.0, 40.0, 1e-10).unwrap();
        assert!((q.value.re - 0.5).abs() < 1e-10, "{}", q.value);
    }

    #[test]
    fn oscillatory_complex() {
        // integral of exp(i x) over [0, pi] = 2i
        let q = integrate(|x: f64| Ok(Complex::new(0.0, x).exp()), 0.0, std::f64::consts::PI, 1e-12)
            .unwrap();
        assert!((q.value - Complex::new(0.0, 2.0)).norm() < 1e-12);
    }

    #[test]
    fn split_handles_kinks() {
        let q = integrate_split(|x: f64| Ok(real(x.abs())), -1.0, 2.0, &[0.0], 1e-12).unwrap();
        assert!((q.value.re - 2.5).abs() < 1e-14);
    }

    #[test]
    fn errors_propagate() {
        let r = integrate(|x: f64| if x > 0.5 { Err(Error::Overflow { at: x }) } else { Ok(real(1.0)) }, 0.0, 1.0, 1e-10);
        assert!(matches!(r, Err(Error::Overflow { .. })));
    }
}
