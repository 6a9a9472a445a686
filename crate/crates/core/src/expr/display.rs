use std::fmt;

use super::SmoothExpr;
use crate::scalar::{format_scalar, real, Real};

// Binding strengths, loosest first.
const SUM: u8 = 0;
const PRODUCT: u8 = 1;
const POWER: u8 = 2;

fn is_negative_real<T: Real>(e: &SmoothExpr<T>) -> bool {
    matches!(e, SmoothExpr::Const(c) if c.im == T::zero() && c.re < T::zero())
}

fn is_compound_constant<T: Real>(e: &SmoothExpr<T>) -> bool {
    matches!(e, SmoothExpr::Const(c) if c.im != T::zero() && c.re != T::zero())
}

/// Splits a leading minus off a sum term so it can be printed as `a - b`.
fn negated_term<T: Real>(e: &SmoothExpr<T>) -> Option<SmoothExpr<T>> {
    match e {
        SmoothExpr::Neg(inner) => Some((**inner).clone()),
        SmoothExpr::Const(c) if is_negative_real(e) => Some(SmoothExpr::Const(-*c)),
        SmoothExpr::Mul(fs) if fs.first().is_some_and(is_negative_real) => {
            let SmoothExpr::Const(c) = fs[0] else {
                unreachable!()
            };
            let mut rest: Vec<_> = fs[1..].to_vec();
            if c != real(-T::one()) {
                rest.insert(0, SmoothExpr::Const(-c));
            }
            Some(match rest.len() {
                1 => rest.pop().unwrap(),
                _ => SmoothExpr::Mul(rest),
            })
        }
        _ => None,
    }
}

fn write_expr<T: Real>(f: &mut fmt::Formatter<'_>, e: &SmoothExpr<T>, ctx: u8) -> fmt::Result {
    match e {
        SmoothExpr::Const(c) => {
            let s = format_scalar(*c);
            let needs_parens = (ctx >= POWER && (is_negative_real(e) || c.im != T::zero()))
                || (ctx == PRODUCT + 1 && is_negative_real(e));
            if needs_parens && !s.starts_with('(') {
                write!(f, "({s})")
            } else {
                f.write_str(&s)
            }
        }
        SmoothExpr::X => f.write_str("x"),
        SmoothExpr::Add(ts) => {
            if ctx > SUM {
                f.write_str("(")?;
            }
            for (i, t) in ts.iter().enumerate() {
                if i == 0 {
                    write_expr(f, t, SUM)?;
                } else if let Some(neg) = negated_term(t) {
                    f.write_str(" - ")?;
                    write_expr(f, &neg, PRODUCT)?;
                } else {
                    f.write_str(" + ")?;
                    write_expr(f, t, SUM)?;
                }
            }
            if ctx > SUM {
                f.write_str(")")?;
            }
            Ok(())
        }
        SmoothExpr::Mul(fs) => {
            if ctx >= POWER {
                f.write_str("(")?;
            }
            for (i, factor) in fs.iter().enumerate() {
                if i > 0 {
                    f.write_str("*")?;
                }
                // Only the leading factor may carry a bare minus sign.
                let fctx = if i == 0 { PRODUCT } else { PRODUCT + 1 };
                if i > 0 && matches!(factor, SmoothExpr::Neg(_)) {
                    f.write_str("(")?;
                    write_expr(f, factor, PRODUCT)?;
                    f.write_str(")")?;
                } else if is_compound_constant(factor) {
                    f.write_str(&format_scalar(match factor {
                        SmoothExpr::Const(c) => *c,
                        _ => unreachable!(),
                    }))?;
                } else {
                    write_expr(f, factor, fctx)?;
                }
            }
            if ctx >= POWER {
                f.write_str(")")?;
            }
            Ok(())
        }
        SmoothExpr::Neg(a) => {
            if ctx >= POWER {
                f.write_str("(")?;
            }
            f.write_str("-")?;
            write_expr(f, a, PRODUCT + 1)?;
            if ctx >= POWER {
                f.write_str(")")?;
            }
            Ok(())
        }
        SmoothExpr::Pow(b, n) => {
            write_expr(f, b, POWER + 1)?;
            write!(f, "^{n}")
        }
        SmoothExpr::Sin(a) => write_call(f, "sin", a),
        SmoothExpr::Cos(a) => write_call(f, "cos", a),
        SmoothExpr::Exp(a) => write_call(f, "exp", a),
    }
}

fn write_call<T: Real>(f: &mut fmt::Formatter<'_>, name: &str, arg: &SmoothExpr<T>) -> fmt::Result {
    write!(f, "{name}(")?;
    write_expr(f, arg, SUM)?;
    f.write_str(")")
}

impl<T: Real> fmt::Display for SmoothExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(f, self, SUM)
    }
}

#[cfg(test)]
mod tests {
    use crate::expr::parse_smooth;

    fn show(s: &str) -> String {
        parse_smooth::<f64>(s).unwrap().normalize().to_string()
    }

    #[test]
    fn readable_output() {
        assert_eq!(show("sin(2*x)"), "sin(2*x)");
        assert_eq!(show("0 - x"), "-x");
        assert_eq!(show("3 - 2*x"), "3 - 2*x");
        assert_eq!(show("x*x*exp(-x)"), "x^2*exp(-x)");
        assert_eq!(show("(1 + 2*i)*x"), "(1 + 2*i)*x");
    }
}
