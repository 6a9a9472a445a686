//! Surface syntax: lexer, parser, lowering to distributions and a
//! formatter producing re-parsable text.

mod ast;
mod format;
mod lexer;
mod lower;
mod parser;

pub use ast::{DistExpr, Func, Shift};
pub use format::format_dist;
pub use lower::{lower, parse_distribution};
pub use parser::parse_dist;

use crate::dist::TestFunction;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Parses a built-in test function, currently only `bump(c, r)`.
pub fn parse_test_function<T: Real>(text: &str) -> Result<TestFunction<T>> {
    let body = text
        .trim()
        .strip_prefix("bump")
        .map(str::trim_start)
        .and_then(|s| s.strip_prefix('('))
        .and_then(|s| s.trim_end().strip_suffix(')'))
        .ok_or_else(|| Error::syntax(format!("expected `bump(c, r)`, got `{text}`"), 1, 1))?;
    let args: Vec<f64> = body
        .split(',')
        .map(|a| a.trim().parse::<f64>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|e| Error::syntax(format!("bad bump argument: {e}"), 1, 1))?;
    match args[..] {
        [c, r] => TestFunction::bump(T::lit(c), T::lit(r)),
        _ => Err(Error::syntax("bump takes exactly two arguments", 1, 1)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bump_spec() {
        let t = parse_test_function::<f64>(" bump(0.5, 2) ").unwrap();
        assert_eq!(t.support(), (-1.5, 2.5));
        assert!(parse_test_function::<f64>("bump(0)").is_err());
        assert!(parse_test_function::<f64>("hat(0,1)").is_err());
        assert!(matches!(
            parse_test_function::<f64>("bump(0,-1)"),
            Err(Error::InvalidTestFunction(_))
        ));
    }
}
