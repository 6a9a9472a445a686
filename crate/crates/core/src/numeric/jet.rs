//! Truncated Taylor series ("jets") in one variable.
//!
//! Used to differentiate the compactly supported bump, which is smooth but
//! not representable in the expression grammar.

use crate::scalar::Real;

/// Coefficients `c_0 .. c_n` of a series in `h`.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet<T: Real>(pub Vec<T>);

impl<T: Real> Jet<T> {
    pub fn order(&self) -> usize {
        self.0.len() - 1
    }

    pub fn recip(&self) -> Jet<T> {
        let s = &self.0;
        let mut q = vec![T::zero(); s.len()];
        q[0] = T::one() / s[0];
        for n in 1..s.len() {
            let acc = (1..=n).fold(T::zero(), |acc, k| acc + s[k] * q[n - k]);
            q[n] = -acc / s[0];
        }
        Jet(q)
    }

    pub fn exp(&self) -> Jet<T> {
        let v = &self.0;
        let mut e = vec![T::zero(); v.len()];
        e[0] = v[0].exp();
        for n in 1..v.len() {
            let acc = (1..=n).fold(T::zero(), |acc, k| {
                acc + T::lit(k as f64) * v[k] * e[n - k]
            });
            e[n] = acc / T::lit(n as f64);
        }
        Jet(e)
    }

    pub fn neg(&self) -> Jet<T> {
        Jet(self.0.iter().map(|&c| -c).collect())
    }

    /// Derivatives `f^(j)(h=0) = j! c_j`.
    pub fn derivatives(&self) -> Vec<T> {
        let mut fact = T::one();
        self.0
            .iter()
            .enumerate()
            .map(|(j, &c)| {
                if j > 0 {
                    fact = fact * T::lit(j as f64);
                }
                c * fact
            })
            .collect()
    }
}

/// Derivatives `0..=order` of `u -> exp(-1 / (1 - u^2))` (zero outside
/// `(-1, 1)`) at `u0`.
pub fn unit_bump_derivatives<T: Real>(u0: T, order: usize) -> Vec<T> {
    if u0.abs() >= T::one() {
        return vec![T::zero(); order + 1];
    }
    // 1 - (u0 + h)^2 = (1 - u0^2) - 2 u0 h - h^2
    let mut s = vec![T::zero(); order + 1];
    s[0] = T::one() - u0 * u0;
    if order >= 1 {
        s[1] = -T::lit(2.0) * u0;
    }
    if order >= 2 {
        s[2] = -T::one();
    }
    let e = Jet(s).recip().neg().exp();
    let d = e.derivatives();
    if d.iter().all(|v| v.is_finite()) {
        d
    } else {
        // Only reachable within underflow distance of the support edge,
        // where every derivative is below the representable range.
        vec![T::zero(); order + 1]
    }
}
