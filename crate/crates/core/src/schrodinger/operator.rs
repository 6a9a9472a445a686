use std::fmt;

use super::hamiltonian::{delta_minus, delta_plus, in_domain_hs, in_domain_max_hc, in_domain_max_hd, project, Side};
use super::wave::WaveFunction;
use crate::dist::Distribution;
use crate::error::{Error, Result};
use crate::scalar::{format_scalar, real, Real, Scalar};

/// Domains that restrict an operator to wave functions satisfying boundary
/// conditions at the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    MaxHC,
    HS,
    MaxHD,
}

impl Domain {
    pub fn contains<T: Real>(self, psi: &WaveFunction<T>) -> Result<bool> {
        match self {
            Domain::MaxHC => in_domain_max_hc(psi),
            Domain::HS => in_domain_hs(psi),
            Domain::MaxHD => in_domain_max_hd(psi),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Domain::MaxHC => "D_max(H_C)",
            Domain::HS => "D(H_S)",
            Domain::MaxHD => "D_max(H_D)",
        }
    }
}

/// Linear operator on distributions, built from primitives.
#[derive(Clone, Debug, PartialEq)]
pub enum OperatorExpr<T: Real> {
    Identity,
    /// `d/dx`
    Derivative,
    /// `-d^2/dx^2`
    NegSecondDerivative,
    /// `psi -> delta^(n) ** psi`
    DeltaPlus(u32),
    /// `psi -> psi ** delta^(n)`
    DeltaMinus(u32),
    /// `psi -> theta(x) ** psi`
    ProjectPlus,
    /// `psi -> theta(-x) ** psi`
    ProjectMinus,
    Scaled(Scalar<T>, Box<OperatorExpr<T>>),
    Sum(Vec<OperatorExpr<T>>),
    /// `Compose([A, B])` is `A B`: `B` acts first.
    Compose(Vec<OperatorExpr<T>>),
    /// Only accepts wave functions in the given domain.
    Restricted(Box<OperatorExpr<T>>, Domain),
}

impl<T: Real> OperatorExpr<T> {
    /// `H_C = -d^2 + delta'_+ + 2 delta_+ d`
    pub fn hc() -> Self {
        OperatorExpr::Sum(vec![
            OperatorExpr::NegSecondDerivative,
            OperatorExpr::DeltaPlus(1),
            OperatorExpr::Scaled(
                real(T::lit(2.0)),
                Box::new(OperatorExpr::Compose(vec![
                    OperatorExpr::DeltaPlus(0),
                    OperatorExpr::Derivative,
                ])),
            ),
        ])
    }

    /// `H_C` restricted to `D(H_S)`.
    pub fn hs() -> Self {
        OperatorExpr::Restricted(Box::new(Self::hc()), Domain::HS)
    }

    /// `H_D = -d^2 + delta'_- + delta_- - delta'_+ + delta_+`
    pub fn hd() -> Self {
        OperatorExpr::Sum(vec![
            OperatorExpr::NegSecondDerivative,
            OperatorExpr::DeltaMinus(1),
            OperatorExpr::DeltaMinus(0),
            OperatorExpr::Scaled(real(-T::one()), Box::new(OperatorExpr::DeltaPlus(1))),
            OperatorExpr::DeltaPlus(0),
        ])
    }

    /// Operator names accepted on the command line: `HC`, `HS`, `HD`,
    /// `Pplus`, `Pminus`, `dx`, `deltaplus(n)`, `deltaminus(n)`.
    pub fn from_name(name: &str) -> Result<Self> {
        let name = name.trim();
        let indexed = |prefix: &str| -> Option<Result<u32>> {
            let inner = name.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
            Some(inner.trim().parse::<u32>().map_err(|_| {
                Error::syntax(format!("`{name}`: order must be a non-negative integer"), 1, prefix.len() + 2)
            }))
        };
        match name {
            "HC" => Ok(Self::hc()),
            "HS" => Ok(Self::hs()),
            "HD" => Ok(Self::hd()),
            "Pplus" => Ok(OperatorExpr::ProjectPlus),
            "Pminus" => Ok(OperatorExpr::ProjectMinus),
            "dx" => Ok(OperatorExpr::Derivative),
            _ => {
                if let Some(n) = indexed("deltaplus") {
                    Ok(OperatorExpr::DeltaPlus(n?))
                } else if let Some(n) = indexed("deltaminus") {
                    Ok(OperatorExpr::DeltaMinus(n?))
                } else {
                    Err(Error::UnknownIdentifier {
                        name: name.to_string(),
                        line: 1,
                        column: 1,
                    })
                }
            }
        }
    }

    pub fn apply(&self, psi: &Distribution<T>) -> Result<Distribution<T>> {
        match self {
            OperatorExpr::Identity => Ok(psi.clone()),
            OperatorExpr::Derivative => psi.derivative(),
            OperatorExpr::NegSecondDerivative => Ok(-&psi.derivative_n(2)?),
            OperatorExpr::DeltaPlus(n) => delta_plus(*n as usize, psi),
            OperatorExpr::DeltaMinus(n) => delta_minus(*n as usize, psi),
            OperatorExpr::ProjectPlus => project(Side::Plus, psi),
            OperatorExpr::ProjectMinus => project(Side::Minus, psi),
            OperatorExpr::Scaled(c, op) => Ok(op.apply(psi)?.scale(*c)),
            OperatorExpr::Sum(ops) => ops
                .iter()
                .try_fold(Distribution::zero(), |acc, op| Ok(&acc + &op.apply(psi)?)),
            OperatorExpr::Compose(ops) => ops
                .iter()
                .rev()
                .try_fold(psi.clone(), |acc, op| op.apply(&acc)),
            OperatorExpr::Restricted(op, domain) => {
                let wave = WaveFunction::new(psi.clone())?;
                if !domain.contains(&wave)? {
                    return Err(Error::DomainViolation {
                        operator: self.to_string(),
                        detail: format!("argument is not in {}", domain.name()),
                    });
                }
                op.apply(psi)
            }
        }
    }
}

impl<T: Real> fmt::Display for OperatorExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |f: &mut fmt::Formatter<'_>, ops: &[OperatorExpr<T>], sep: &str| {
            f.write_str("(")?;
            for (i, op) in ops.iter().enumerate() {
                if i > 0 {
                    f.write_str(sep)?;
                }
                write!(f, "{op}")?;
            }
            f.write_str(")")
        };
        match self {
            OperatorExpr::Identity => f.write_str("1"),
            OperatorExpr::Derivative => f.write_str("dx"),
            OperatorExpr::NegSecondDerivative => f.write_str("-dx^2"),
            OperatorExpr::DeltaPlus(n) => write!(f, "deltaplus({n})"),
            OperatorExpr::DeltaMinus(n) => write!(f, "deltaminus({n})"),
            OperatorExpr::ProjectPlus => f.write_str("Pplus"),
            OperatorExpr::ProjectMinus => f.write_str("Pminus"),
            OperatorExpr::Scaled(c, op) => write!(f, "{}*{op}", format_scalar(*c)),
            OperatorExpr::Sum(ops) => list(f, ops, " + "),
            OperatorExpr::Compose(ops) => list(f, ops, " "),
            OperatorExpr::Restricted(op, Domain::HS) if **op == Self::hc() => f.write_str("HS"),
            OperatorExpr::Restricted(op, d) => write!(f, "{op} on {}", d.name()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_distribution;

    type Op = OperatorExpr<f64>;

    #[test]
    fn names() {
        assert_eq!(Op::from_name("HC").unwrap(), Op::hc());
        assert_eq!(Op::from_name("deltaplus(2)").unwrap(), Op::DeltaPlus(2));
        assert_eq!(Op::from_name(" deltaminus( 0 ) ").unwrap(), Op::DeltaMinus(0));
        assert!(Op::from_name("deltaplus(-1)").unwrap_err().is_syntax());
        assert!(matches!(Op::from_name("HX"), Err(Error::UnknownIdentifier { .. })));
        assert_eq!(Op::hs().to_string(), "HS");
    }

    #[test]
    fn composition_order() {
        let psi = parse_distribution::<f64>("theta(x)*x").unwrap();
        let op = Op::Compose(vec![Op::Derivative, Op::ProjectPlus]);
        assert_eq!(op.apply(&psi).unwrap(), parse_distribution("theta(x)").unwrap());
        let op = Op::Compose(vec![Op::DeltaPlus(0), Op::Derivative]);
        assert_eq!(op.apply(&psi).unwrap(), parse_distribution("delta(x)").unwrap());
    }

    #[test]
    fn restriction_checks_domain() {
        let psi = parse_distribution::<f64>("theta(x)*sin(x)").unwrap();
        assert!(matches!(Op::hs().apply(&psi), Err(Error::DomainViolation { .. })));
        assert!(Op::hs().apply(&Distribution::zero()).unwrap().is_zero());
    }
}
