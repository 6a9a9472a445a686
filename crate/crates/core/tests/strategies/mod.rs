#![allow(dead_code)]

use distalg::schrodinger::WaveFunction;
use distalg::{DeltaComb, Distribution64, PiecewiseSmooth, SmoothExpr64};
use num_complex::Complex;
use proptest::prelude::*;

pub const POINTS: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

fn c(v: f64) -> SmoothExpr64 {
    SmoothExpr64::real(v)
}

fn coeff() -> impl Strategy<Value = f64> {
    (-4i32..=4).prop_filter("nonzero", |v| *v != 0).prop_map(|v| v as f64 / 2.0)
}

pub fn smooth() -> impl Strategy<Value = SmoothExpr64> {
    let x = SmoothExpr64::x;
    let k = prop_oneof![Just(1.0), Just(2.0), Just(3.0)];
    let s = prop_oneof![Just(-1.0), Just(-0.5), Just(0.5), Just(1.0)];
    prop_oneof![
        coeff().prop_map(c),
        (coeff(), coeff(), coeff()).prop_map(move |(a, b, d)| c(a) + c(b) * x() + c(d) * x().powi(2)),
        (coeff(), k.clone()).prop_map(move |(a, k)| c(a) * (c(k) * x()).sin()),
        (coeff(), k).prop_map(move |(a, k)| c(a) * (c(k) * x()).cos()),
        (coeff(), s).prop_map(move |(a, s)| c(a) * (c(s) * x()).exp()),
    ]
}

fn point() -> impl Strategy<Value = f64> {
    prop::sample::select(POINTS.to_vec())
}

fn term(points: Vec<f64>) -> impl Strategy<Value = Distribution64> {
    let pt = prop::sample::select(points);
    prop_oneof![
        (pt.clone(), any::<bool>(), smooth()).prop_map(|(w, right, e)| {
            let (l, r) = if right { (SmoothExpr64::zero(), e) } else { (e, SmoothExpr64::zero()) };
            Distribution64::glued(w, l, r)
        }),
        (pt, prop::collection::vec(coeff(), 1..=4)).prop_map(|(w, cs)| {
            Distribution64::comb(w, cs.into_iter().map(|v| Complex::new(v, 0.0)).collect())
        }),
        smooth().prop_map(Distribution64::smooth_fn),
    ]
}

/// Sums of one to three terms: steps times smooth pieces, combs up to
/// order three and smooth functions, singular points drawn from `points`.
pub fn dist_at(points: &[f64]) -> impl Strategy<Value = Distribution64> {
    prop::collection::vec(term(points.to_vec()), 1..=3)
        .prop_map(|ts| ts.iter().fold(Distribution64::zero(), |acc, t| &acc + t))
}

pub fn dist() -> impl Strategy<Value = Distribution64> {
    dist_at(&POINTS)
}

/// Comb-free distributions broken at the origin only.
pub fn wave() -> impl Strategy<Value = WaveFunction<f64>> {
    (smooth(), smooth()).prop_map(|(l, r)| {
        let d = Distribution64::new(PiecewiseSmooth::new(vec![0.0], vec![l, r]).unwrap(), Vec::new());
        WaveFunction::new(d).unwrap()
    })
}

/// Wave functions with `psi(0-) = psi(0+) = 0`: each side is a smooth
/// piece times `x`.
pub fn dirichlet_wave() -> impl Strategy<Value = WaveFunction<f64>> {
    (smooth(), smooth()).prop_map(|(l, r)| {
        let x = SmoothExpr64::x;
        let d = Distribution64::new(PiecewiseSmooth::new(vec![0.0], vec![x() * l, x() * r]).unwrap(), Vec::new());
        WaveFunction::new(d).unwrap()
    })
}

/// Wave functions with both sides vanishing to second order at the origin.
pub fn hs_wave() -> impl Strategy<Value = WaveFunction<f64>> {
    (smooth(), smooth()).prop_map(|(l, r)| {
        let x2 = || SmoothExpr64::x().powi(2);
        let d = Distribution64::new(PiecewiseSmooth::new(vec![0.0], vec![x2() * l, x2() * r]).unwrap(), Vec::new());
        WaveFunction::new(d).unwrap()
    })
}

pub fn comb_at(w: f64) -> impl Strategy<Value = DeltaComb<f64>> {
    prop::collection::vec(coeff(), 1..=4)
        .prop_map(move |cs| DeltaComb::new(w, cs.into_iter().map(|v| Complex::new(v, 0.0)).collect()).unwrap())
}

pub fn any_point() -> impl Strategy<Value = f64> {
    point()
}
