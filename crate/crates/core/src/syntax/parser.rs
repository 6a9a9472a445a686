//! Recursive-descent parser for distribution expressions.
//!
//! ```text
//! dist   := term (('+'|'-') term)*
//! term   := unary (('*'|'**') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' int)?
//! atom   := number | 'x' | 'i' | 'theta' '(' shift ')'
//!         | 'delta' "'"* '(' shift ')' | 'delta' '^' '(' int ')' '(' shift ')'
//!         | ('sin'|'cos'|'exp') '(' dist ')' | 'D' '[' dist ']' | '(' dist ')'
//! shift  := '-'? 'x' (('+'|'-') number)?
//! ```

use super::ast::{DistExpr, Func, Shift};
use super::lexer::{tokenize, Tok, Token};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Names that would break global smoothness of a piece.
const NON_SMOOTH: &[&str] = &[
    "sqrt", "abs", "log", "ln", "tan", "cot", "sec", "csc", "sign", "sgn", "floor", "ceil",
    "asin", "acos", "atan", "sinh", "cosh", "tanh",
];

struct Parser {
    toks: Vec<Token>,
    pos: usize,
}

pub fn parse_dist<T: Real>(text: &str) -> Result<DistExpr<T>> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let e = p.dist()?;
    match &p.peek().tok {
        Tok::Eof => Ok(e),
        Tok::RParen | Tok::RBracket => Err(p.error_here("unbalanced closing bracket")),
        _ => Err(p.error_here("unexpected input after expression")),
    }
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.pos]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.pos].clone();
        if t.tok != Tok::Eof {
            self.pos += 1;
        }
        t
    }

    fn eat(&mut self, tok: &Tok) -> bool {
        if &self.peek().tok == tok {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error_here(&self, msg: &str) -> Error {
        let t = self.peek();
        let found = if t.tok == Tok::Eof {
            "end of input".to_string()
        } else {
            format!("`{}`", t.text)
        };
        Error::syntax(format!("{msg}, found {found}"), t.line, t.column)
    }

    fn non_smooth(&self, t: &Token, construct: &str) -> Error {
        Error::NonSmooth {
            construct: construct.to_string(),
            line: t.line,
            column: t.column,
        }
    }

    fn expect(&mut self, tok: Tok, what: &str) -> Result<()> {
        if self.eat(&tok) {
            Ok(())
        } else {
            Err(self.error_here(&format!("expected {what}")))
        }
    }

    fn dist<T: Real>(&mut self) -> Result<DistExpr<T>> {
        let mut lhs = self.term()?;
        loop {
            if self.eat(&Tok::Plus) {
                let rhs = self.term()?;
                lhs = DistExpr::Add(Box::new(lhs), Box::new(rhs));
            } else if self.eat(&Tok::Minus) {
                let rhs = self.term()?;
                lhs = DistExpr::Sub(Box::new(lhs), Box::new(rhs));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term<T: Real>(&mut self) -> Result<DistExpr<T>> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat(&Tok::Star) {
                let rhs = self.unary()?;
                lhs = DistExpr::Product(Box::new(lhs), Box::new(rhs));
            } else if self.eat(&Tok::StarStar) {
                let rhs = self.unary()?;
                lhs = DistExpr::Star(Box::new(lhs), Box::new(rhs));
            } else if self.peek().tok == Tok::Slash {
                let t = self.peek().clone();
                return Err(self.non_smooth(&t, "/"));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary<T: Real>(&mut self) -> Result<DistExpr<T>> {
        if self.eat(&Tok::Minus) {
            Ok(DistExpr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power<T: Real>(&mut self) -> Result<DistExpr<T>> {
        let base = self.atom()?;
        if self.peek().tok != Tok::Caret {
            return Ok(base);
        }
        let caret = self.next();
        let t = self.next();
        match t.tok {
            Tok::Number(v) if v.fract() == 0.0 && v >= 0.0 && v <= u32::MAX as f64 => {
                Ok(DistExpr::Pow(Box::new(base), v as u32))
            }
            Tok::Number(_) | Tok::Minus | Tok::LParen => {
                Err(self.non_smooth(&caret, &format!("^{}", t.text)))
            }
            _ => Err(Error::syntax("expected integer exponent", t.line, t.column)),
        }
    }

    fn atom<T: Real>(&mut self) -> Result<DistExpr<T>> {
        let t = self.next();
        match &t.tok {
            Tok::Number(v) => Ok(DistExpr::Number(T::lit(*v))),
            Tok::LParen => {
                let e = self.dist()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Ident(name) => self.identifier(&t, name),
            Tok::Slash => Err(self.non_smooth(&t, "/")),
            _ => {
                self.pos -= usize::from(t.tok != Tok::Eof);
                Err(self.error_here("expected an operand"))
            }
        }
    }

    fn identifier<T: Real>(&mut self, t: &Token, name: &str) -> Result<DistExpr<T>> {
        match name {
            "x" => Ok(DistExpr::X),
            "i" => Ok(DistExpr::Imag),
            "sin" | "cos" | "exp" => {
                let func = match name {
                    "sin" => Func::Sin,
                    "cos" => Func::Cos,
                    _ => Func::Exp,
                };
                self.expect(Tok::LParen, "`(`")?;
                let arg = self.dist()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(DistExpr::Call(func, Box::new(arg)))
            }
            "theta" => {
                let shift = self.shift()?;
                Ok(DistExpr::Theta(shift))
            }
            "delta" => {
                let mut order = 0u32;
                while self.eat(&Tok::Prime) {
                    order += 1;
                }
                if order == 0 && self.eat(&Tok::Caret) {
                    self.expect(Tok::LParen, "`(` after `delta^`")?;
                    let n = self.next();
                    order = match n.tok {
                        Tok::Number(v) if v.fract() == 0.0 && v >= 0.0 => v as u32,
                        _ => return Err(Error::syntax("expected derivative order", n.line, n.column)),
                    };
                    self.expect(Tok::RParen, "`)`")?;
                }
                let shift = self.shift()?;
                Ok(DistExpr::Delta { order, shift })
            }
            "D" => {
                self.expect(Tok::LBracket, "`[` after `D`")?;
                let e = self.dist()?;
                self.expect(Tok::RBracket, "`]`")?;
                Ok(DistExpr::Derivative(Box::new(e)))
            }
            _ if NON_SMOOTH.contains(&name) => Err(self.non_smooth(t, name)),
            _ => Err(Error::UnknownIdentifier {
                name: name.to_string(),
                line: t.line,
                column: t.column,
            }),
        }
    }

    fn shift<T: Real>(&mut self) -> Result<Shift<T>> {
        self.expect(Tok::LParen, "`(`")?;
        let reflected = self.eat(&Tok::Minus);
        if self.peek().tok != Tok::Ident("x".into()) {
            return Err(self.error_here("expected argument of the form `x`, `x-a` or `-x+a`"));
        }
        self.next();
        let mut offset = T::zero();
        let sign = if self.eat(&Tok::Plus) {
            Some(T::one())
        } else if self.eat(&Tok::Minus) {
            Some(-T::one())
        } else {
            None
        };
        if let Some(sign) = sign {
            let n = self.next();
            match n.tok {
                Tok::Number(v) => offset = sign * T::lit(v),
                _ => return Err(Error::syntax("expected a number in the shift", n.line, n.column)),
            }
        }
        self.expect(Tok::RParen, "`)`")?;
        Ok(Shift { reflected, offset })
    }
}
