//! Canonical form for smooth expressions.
//!
//! Every expression in the grammar is a finite sum of terms
//! `c * x^n * prod sin(p)^a * prod cos(q)^b * exp(r)`, where the arguments
//! are themselves canonical. Sums are collected, products flattened,
//! constants folded, `exp` factors merged, and constant parts of `exp`
//! arguments pulled into the coefficient. Odd/even symmetry of `sin`/`cos`
//! fixes the sign of their arguments. Equality beyond this is left to
//! sampling.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_complex::Complex;

use super::SmoothExpr;
use crate::scalar::{chop, cmp_scalar, is_negligible, real, Real, Scalar};

#[derive(Clone, Debug)]
pub(crate) struct Poly<T: Real> {
    pub terms: BTreeMap<Mono<T>, Scalar<T>>,
}

#[derive(Clone, Debug)]
pub(crate) struct Mono<T: Real> {
    pub x: u32,
    pub trig: BTreeMap<Trig<T>, u32>,
    pub exp: Option<Poly<T>>,
}

#[derive(Clone, Debug)]
pub(crate) enum Trig<T: Real> {
    Sin(Poly<T>),
    Cos(Poly<T>),
}

impl<T: Real> Ord for Poly<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.len().cmp(&other.terms.len()).then_with(|| {
            for ((ma, ca), (mb, cb)) in self.terms.iter().zip(other.terms.iter()) {
                let o = ma.cmp(mb).then_with(|| cmp_scalar(ca, cb));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl<T: Real> Ord for Mono<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.x
            .cmp(&other.x)
            .then_with(|| self.trig.len().cmp(&other.trig.len()))
            .then_with(|| {
                for ((ta, pa), (tb, pb)) in self.trig.iter().zip(other.trig.iter()) {
                    let o = ta.cmp(tb).then_with(|| pa.cmp(pb));
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                Ordering::Equal
            })
            .then_with(|| match (&self.exp, &other.exp) {
                (None, None) => Ordering::Equal,
                (None, Some(_)) => Ordering::Less,
                (Some(_), None) => Ordering::Greater,
                (Some(a), Some(b)) => a.cmp(b),
            })
    }
}

impl<T: Real> Ord for Trig<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Trig::Sin(a), Trig::Sin(b)) | (Trig::Cos(a), Trig::Cos(b)) => a.cmp(b),
            (Trig::Sin(_), Trig::Cos(_)) => Ordering::Less,
            (Trig::Cos(_), Trig::Sin(_)) => Ordering::Greater,
        }
    }
}

macro_rules! ord_boilerplate {
    ($ty:ident) => {
        impl<T: Real> PartialOrd for $ty<T> {
            fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
                Some(self.cmp(other))
            }
        }
        impl<T: Real> PartialEq for $ty<T> {
            fn eq(&self, other: &Self) -> bool {
                self.cmp(other) == Ordering::Equal
            }
        }
        impl<T: Real> Eq for $ty<T> {}
    };
}

ord_boilerplate!(Poly);
ord_boilerplate!(Mono);
ord_boilerplate!(Trig);

impl<T: Real> Mono<T> {
    fn unit() -> Self {
        Mono {
            x: 0,
            trig: BTreeMap::new(),
            exp: None,
        }
    }

    fn is_unit(&self) -> bool {
        self.x == 0 && self.trig.is_empty() && self.exp.is_none()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut trig = self.trig.clone();
        for (t, p) in &other.trig {
            *trig.entry(t.clone()).or_insert(0) += p;
        }
        let exp = match (&self.exp, &other.exp) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some(a), Some(b)) => {
                let s = a.add(b);
                (!s.is_zero()).then_some(s)
            }
        };
        Mono {
            x: self.x + other.x,
            trig,
            exp,
        }
    }

    /// Derivative of the monomial with unit coefficient, by the product rule
    /// over its factors.
    fn diff(&self) -> Poly<T> {
        let mut factors: Vec<(Poly<T>, Poly<T>)> = Vec::new();
        if self.x > 0 {
            let f = Poly::x_pow(self.x);
            let df = Poly::x_pow(self.x - 1).scale(real(T::lit(self.x as f64)));
            factors.push((f, df));
        }
        for (t, &p) in &self.trig {
            let f = Poly::from_trig(t.clone()).pow(p);
            let lower = Poly::from_trig(t.clone()).pow(p - 1);
            let (inner, arg) = match t {
                Trig::Sin(a) => (Poly::cos(a), a),
                Trig::Cos(a) => (Poly::sin(a).neg(), a),
            };
            let df = lower
                .mul(&inner)
                .mul(&arg.diff())
                .scale(real(T::lit(p as f64)));
            factors.push((f, df));
        }
        if let Some(q) = &self.exp {
            let f = Poly::from_mono(
                Mono {
                    exp: Some(q.clone()),
                    ..Mono::unit()
                },
                real(T::one()),
            );
            let df = f.mul(&q.diff());
            factors.push((f, df));
        }
        let mut out = Poly::zero();
        for i in 0..factors.len() {
            let mut term = factors[i].1.clone();
            for (j, (f, _)) in factors.iter().enumerate() {
                if j != i {
                    term = term.mul(f);
                }
            }
            out = out.add(&term);
        }
        out
    }

    fn to_tree(&self, coef: Scalar<T>) -> SmoothExpr<T> {
        let mut factors = Vec::new();
        match self.x {
            0 => {}
            1 => factors.push(SmoothExpr::X),
            n => factors.push(SmoothExpr::Pow(Box::new(SmoothExpr::X), n)),
        }
        for (t, &p) in &self.trig {
            let base = match t {
                Trig::Sin(a) => SmoothExpr::Sin(Box::new(a.to_tree())),
                Trig::Cos(a) => SmoothExpr::Cos(Box::new(a.to_tree())),
            };
            factors.push(if p == 1 {
                base
            } else {
                SmoothExpr::Pow(Box::new(base), p)
            });
        }
        if let Some(q) = &self.exp {
            factors.push(SmoothExpr::Exp(Box::new(q.to_tree())));
        }
        if factors.is_empty() {
            return SmoothExpr::Const(coef);
        }
        let one = real(T::one());
        if coef == one || coef == -one {
            let body = if factors.len() == 1 {
                factors.pop().unwrap()
            } else {
                SmoothExpr::Mul(factors)
            };
            return if coef == one {
                body
            } else {
                SmoothExpr::Neg(Box::new(body))
            };
        }
        factors.insert(0, SmoothExpr::Const(coef));
        SmoothExpr::Mul(factors)
    }
}

impl<T: Real> Poly<T> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar<T>) -> Self {
        Self::from_mono(Mono::unit(), c)
    }

    fn x_pow(n: u32) -> Self {
        Self::from_mono(
            Mono {
                x: n,
                ..Mono::unit()
            },
            real(T::one()),
        )
    }

    fn from_mono(m: Mono<T>, c: Scalar<T>) -> Self {
        let mut terms = BTreeMap::new();
        let c = chop(c, T::eps_zero());
        if !is_negligible(c, T::eps_zero()) {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    fn from_trig(t: Trig<T>) -> Self {
        let mut trig = BTreeMap::new();
        trig.insert(t, 1);
        Self::from_mono(
            Mono {
                trig,
                ..Mono::unit()
            },
            real(T::one()),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Returns the value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Scalar<T>> {
        match self.terms.len() {
            0 => Some(Scalar::new(T::zero(), T::zero())),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_unit().then_some(*c)
            }
            _ => None,
        }
    }

    fn insert(&mut self, m: Mono<T>, c: Scalar<T>) {
        let eps = T::eps_zero();
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                let c = chop(c, eps);
                if !is_negligible(c, eps) {
                    v.insert(c);
                }
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = chop(*o.get() + c, eps);
                if is_negligible(s, eps) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert(m.clone(), *c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(real(-T::one()))
    }

    pub fn scale(&self, k: Scalar<T>) -> Self {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out.insert(m.clone(), *c * k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert(ma.mul(mb), *ca * *cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Poly::constant(real(T::one()));
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Leading coefficient decides the canonical sign of odd/even arguments.
    fn is_negative(&self) -> bool {
        match self.terms.values().next() {
            Some(c) => c.re < T::zero() || (c.re == T::zero() && c.im < T::zero()),
            None => false,
        }
    }

    pub fn sin(arg: &Self) -> Self {
        if let Some(c) = arg.as_constant() {
            return Poly::constant(c.sin());
        }
        if arg.is_negative() {
            Poly::from_trig(Trig::Sin(arg.neg())).neg()
        } else {
            Poly::from_trig(Trig::Sin(arg.clone()))
        }
    }

    pub fn cos(arg: &Self) -> Self {
        if let Some(c) = arg.as_constant() {
            return Poly::constant(c.cos());
        }
        if arg.is_negative() {
            Poly::from_trig(Trig::Cos(arg.neg()))
        } else {
            Poly::from_trig(Trig::Cos(arg.clone()))
        }
    }

    pub fn exp(arg: &Self) -> Self {
        let mut rest = arg.clone();
        let c0 = rest
            .terms
            .remove(&Mono::unit())
            .unwrap_or(Scalar::new(T::zero(), T::zero()));
        let k = c0.exp();
        if rest.is_zero() {
            return Poly::constant(k);
        }
        Self::from_mono(
            Mono {
                exp: Some(rest),
                ..Mono::unit()
            },
            k,
        )
    }

    pub fn diff(&self) -> Self {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            out = out.add(&m.diff().scale(*c));
        }
        out
    }

    pub fn from_tree(e: &SmoothExpr<T>) -> Self {
        match e {
            SmoothExpr::Const(c) => Poly::constant(*c),
            SmoothExpr::X => Poly::x_pow(1),
            SmoothExpr::Add(ts) => ts
                .iter()
                .fold(Poly::zero(), |acc, t| acc.add(&Poly::from_tree(t))),
            SmoothExpr::Mul(fs) => fs.iter().fold(Poly::constant(real(T::one())), |acc, f| {
                acc.mul(&Poly::from_tree(f))
            }),
            SmoothExpr::Neg(a) => Poly::from_tree(a).neg(),
            SmoothExpr::Pow(b, n) => Poly::from_tree(b).pow(*n),
            SmoothExpr::Sin(a) => Poly::sin(&Poly::from_tree(a)),
            SmoothExpr::Cos(a) => Poly::cos(&Poly::from_tree(a)),
            SmoothExpr::Exp(a) => Poly::exp(&Poly::from_tree(a)),
        }
    }

    pub fn to_tree(&self) -> SmoothExpr<T> {
        let mut terms: Vec<SmoothExpr<T>> =
            self.terms.iter().map(|(m, c)| m.to_tree(*c)).collect();
        match terms.len() {
            0 => SmoothExpr::Const(Complex::new(T::zero(), T::zero())),
            1 => terms.pop().unwrap(),
            _ => SmoothExpr::Add(terms),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn canon(s: &str) -> SmoothExpr<f64> {
        crate::expr::parse_smooth::<f64>(s).unwrap().normalize()
    }

    #[test]
    fn collects_like_terms() {
        assert_eq!(canon("x + x - 2*x"), SmoothExpr::zero());
        assert_eq!(canon("(x + 1)^2 - x^2 - 2*x"), SmoothExpr::real(1.0));
    }

    #[test]
    fn merges_exponentials() {
        assert_eq!(canon("exp(x)*exp(-x)"), SmoothExpr::real(1.0));
        assert_eq!(canon("exp(2*x)"), canon("exp(x)^2"));
    }

    #[test]
    fn pulls_constant_out_of_exp() {
        let e = canon("exp(x + 1)");
        assert_eq!(e, canon("2.718281828459045*exp(x)"));
    }

    #[test]
    fn trig_parity() {
        assert_eq!(canon("sin(-x) + sin(x)"), SmoothExpr::zero());
        assert_eq!(canon("cos(-2*x) - cos(2*x)"), SmoothExpr::zero());
    }

    #[test]
    fn constant_arguments_fold() {
        assert_eq!(canon("sin(0) + cos(0)"), SmoothExpr::real(1.0));
    }
}
