use super::ast::Shift;
use crate::dist::Distribution;
use crate::expr::SmoothExpr;
use crate::scalar::{format_scalar, real, Real};

/// Writes a distribution in the surface syntax so that parsing and lowering
/// the result gives back an equal distribution.
///
/// Pieces come first, left to right, each cut out with steps; combs follow
/// in ascending point order and then ascending derivative order.
pub fn format_dist<T: Real>(f: &Distribution<T>) -> String {
    let bps = f.breakpoints();
    let mut terms: Vec<String> = Vec::new();
    for (k, piece) in f.pieces().iter().enumerate() {
        if piece.is_zero() {
            continue;
        }
        let mut factors = Vec::new();
        if k > 0 {
            factors.push(format!("theta({})", Shift::at(bps[k - 1])));
        }
        if k < bps.len() {
            let w = bps[k];
            factors.push(format!(
                "theta({})",
                Shift {
                    reflected: true,
                    offset: w,
                }
            ));
        }
        if factors.is_empty() || piece.as_constant() != Some(real(T::one())) {
            factors.push(piece_factor(piece, factors.is_empty()));
        }
        terms.push(factors.join("*"));
    }
    for d in f.deltas() {
        let shift = Shift::at(d.point());
        for (j, c) in d.coeffs().iter().enumerate() {
            if c.norm() == T::zero() {
                continue;
            }
            let delta = match j {
                0 => format!("delta({shift})"),
                1 => format!("delta'({shift})"),
                2 => format!("delta''({shift})"),
                n => format!("delta^({n})({shift})"),
            };
            terms.push(if *c == real(T::one()) {
                delta
            } else if *c == real(-T::one()) {
                format!("-{delta}")
            } else {
                format!("{}*{delta}", format_scalar(*c))
            });
        }
    }
    join_terms(&terms)
}

fn piece_factor<T: Real>(piece: &SmoothExpr<T>, alone: bool) -> String {
    let text = piece.to_string();
    if alone || !(matches!(piece, SmoothExpr::Add(_)) || text.starts_with('-')) {
        text
    } else {
        format!("({text})")
    }
}

fn join_terms(terms: &[String]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.strip_prefix('-')) {
            (0, _) => out.push_str(t),
            (_, Some(rest)) => {
                out.push_str(" - ");
                out.push_str(rest);
            }
            (_, None) => {
                out.push_str(" + ");
                out.push_str(t);
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
