//! Seeded random families shared by the acceptance suite.

#![allow(dead_code)]

use distalg::syntax::Shift;
use distalg::{parse_distribution, Distribution64, PiecewiseSmooth, SmoothExpr64, TestFunction64, WaveFunction64};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub const POINTS: [f64; 5] = [-1.0, -0.5, 0.0, 0.5, 1.0];

/// `(center, radius)` of the bump panel.
pub const BUMPS: [(f64, f64); 5] = [(0.0, 1.5), (0.5, 1.0), (-0.5, 1.0), (0.25, 2.0), (-0.3, 2.5)];

pub fn rng(seed: u64) -> TestRng {
    TestRng::seed_from_u64(seed)
}

pub fn bump_panel() -> Vec<TestFunction64> {
    BUMPS
        .iter()
        .map(|&(c, r)| TestFunction64::bump(c, r).unwrap())
        .collect()
}

pub fn parse(text: &str) -> Distribution64 {
    parse_distribution(text).unwrap_or_else(|e| panic!("`{text}`: {e}"))
}

fn coeff(rng: &mut TestRng) -> f64 {
    let v: f64 = *[-2.0, -1.5, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0].choose(rng).unwrap();
    v
}

fn num(v: f64) -> String {
    if v < 0.0 {
        format!("({v})")
    } else {
        format!("{v}")
    }
}

/// Text of a smooth piece: a short polynomial or a scaled `sin`, `cos` or
/// `exp`, possibly times a polynomial.
pub fn smooth_text(rng: &mut TestRng) -> String {
    let k = *[1.0, 2.0, 3.0].choose(rng).unwrap();
    let s = *[-1.0, -0.5, 0.5, 1.0].choose(rng).unwrap();
    match rng.gen_range(0..6) {
        0 => format!("{}", num(coeff(rng))),
        1 => format!("{} + {}*x + {}*x^2", num(coeff(rng)), num(coeff(rng)), num(coeff(rng))),
        2 => format!("{}*sin({k}*x)", num(coeff(rng))),
        3 => format!("{}*cos({k}*x)", num(coeff(rng))),
        4 => format!("{}*exp({}*x)", num(coeff(rng)), num(s)),
        _ => format!("({} + {}*x)*exp({}*x)*cos({k}*x)", num(coeff(rng)), num(coeff(rng)), num(s)),
    }
}

fn theta_text(point: f64, reflected: bool) -> String {
    let shift = if reflected {
        Shift { reflected: true, offset: point }
    } else {
        Shift::at(point)
    };
    format!("theta({shift})")
}

fn delta_text(point: f64, order: u32) -> String {
    match order {
        0 => format!("delta({})", Shift::at(point)),
        1 => format!("delta'({})", Shift::at(point)),
        2 => format!("delta''({})", Shift::at(point)),
        n => format!("delta^({n})({})", Shift::at(point)),
    }
}

/// One term of the family with its singular point taken from `points`.
fn term_text(rng: &mut TestRng, points: &[f64], allow_smooth: bool) -> String {
    let w = *points.choose(rng).unwrap();
    match rng.gen_range(0..if allow_smooth { 5 } else { 4 }) {
        0 | 1 => format!("{}*({})", theta_text(w, rng.gen()), smooth_text(rng)),
        2 | 3 => format!("{}*{}", num(coeff(rng)), delta_text(w, rng.gen_range(0..=3))),
        _ => format!("({})", smooth_text(rng)),
    }
}

/// Text of a random distribution: one to three terms built from
/// `theta(+-x - a)` times smooth pieces, combs up to order three, and
/// smooth functions.
pub fn dist_text_at(rng: &mut TestRng, points: &[f64]) -> String {
    let n = rng.gen_range(1..=3);
    let terms: Vec<String> = (0..n).map(|i| term_text(rng, points, i > 0)).collect();
    terms.join(" + ")
}

pub fn dist_text(rng: &mut TestRng) -> String {
    dist_text_at(rng, &POINTS)
}

pub fn random_dist(rng: &mut TestRng) -> Distribution64 {
    parse(&dist_text(rng))
}

/// Continuous piecewise-smooth function: a smooth part plus terms
/// `theta(x - a) (x - a) p(x)` that have no jump.
pub fn continuous_dist(rng: &mut TestRng) -> Distribution64 {
    let mut text = format!("({})", smooth_text(rng));
    for _ in 0..rng.gen_range(1..=2) {
        let w = *POINTS.choose(rng).unwrap();
        let reflected: bool = rng.gen();
        text.push_str(&format!(
            " + {}*({})*({})",
            theta_text(w, reflected),
            Shift::at(w),
            smooth_text(rng)
        ));
    }
    parse(&text)
}

fn expr(text: &str) -> SmoothExpr64 {
    distalg::parse_smooth(text).unwrap()
}

pub fn glued_wave(left: &str, right: &str) -> WaveFunction64 {
    let smooth = PiecewiseSmooth::new(vec![0.0], vec![expr(left), expr(right)]).unwrap();
    WaveFunction64::new(Distribution64::new(smooth, Vec::new())).unwrap()
}

fn uniform(rng: &mut TestRng, lo: f64, hi: f64) -> f64 {
    rng.gen_range(lo..hi)
}

/// `x^power (a + b x) exp(-+c x)` decaying away from the origin.
fn decaying(rng: &mut TestRng, power: u32, left: bool) -> String {
    let (a, b) = (uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0));
    let c = uniform(rng, 1.0, 2.0);
    let c = if left { c } else { -c };
    format!("x^{power}*({} + {}*x)*exp({}*x)", num(a), num(b), num(c))
}

/// Square-integrable wave function in `D(H_S)`.
pub fn hs_domain_wave(rng: &mut TestRng) -> WaveFunction64 {
    glued_wave(&decaying(rng, 2, true), &decaying(rng, 2, false))
}

/// Square-integrable wave function vanishing at the origin from both sides.
pub fn dirichlet_l2_wave(rng: &mut TestRng) -> WaveFunction64 {
    glued_wave(&decaying(rng, 1, true), &decaying(rng, 1, false))
}

fn dirichlet_piece(rng: &mut TestRng, left: bool) -> String {
    let k = *[1.0, 2.0, 3.0].choose(rng).unwrap();
    let c = num(coeff(rng));
    match rng.gen_range(0..4) {
        0 => decaying(rng, 1, left),
        1 => format!("{c}*sin({k}*x)"),
        2 => format!("{c}*(1 - cos({k}*x))"),
        _ => format!("{c}*sin({k}*x) + {}", decaying(rng, 1, left)),
    }
}

/// Wave function in `D_max(H_D)`, not necessarily square-integrable.
pub fn dirichlet_wave(rng: &mut TestRng) -> WaveFunction64 {
    glued_wave(&dirichlet_piece(rng, true), &dirichlet_piece(rng, false))
}

/// Generic wave function broken at the origin; each side vanishes there
/// with probability one half.
pub fn generic_wave(rng: &mut TestRng) -> WaveFunction64 {
    let side = |rng: &mut TestRng| {
        let k = *[1.0, 2.0, 3.0].choose(rng).unwrap();
        let a = if rng.gen() { 0.0 } else { uniform(rng, -2.0, 2.0) };
        let b = uniform(rng, -2.0, 2.0);
        let c = uniform(rng, -2.0, 2.0);
        format!("{}*cos({k}*x) + {}*sin({k}*x) + {}*x^2", num(a), num(b), num(c))
    };
    let (l, r) = (side(rng), side(rng));
    glued_wave(&l, &r)
}

pub mod scenarios;
