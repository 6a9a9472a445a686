use thiserror::Error;

/// Errors raised by the kernel, the parser and the operator layer.
///
/// Numeric payloads are reported as `f64` whatever the working precision.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at {line}:{column}: {message}")]
    Syntax {
        message: String,
        line: usize,
        column: usize,
    },

    #[error("non-smooth construct `{construct}` at {line}:{column}: pieces must be infinitely smooth on the whole line (no division, roots, fractional or negative powers, abs, log)")]
    NonSmooth {
        construct: String,
        line: usize,
        column: usize,
    },

    #[error("unknown identifier `{name}` at {line}:{column}")]
    UnknownIdentifier {
        name: String,
        line: usize,
        column: usize,
    },

    #[error("evaluation overflow at x = {at}")]
    Overflow { at: f64 },

    #[error("invalid piecewise structure: {0}")]
    InvalidPiecewise(String),

    #[error("overlapping singular supports at {points:?}; the strict product needs disjoint singular supports, use the star product `**` instead")]
    OverlappingSingularSupports { points: Vec<f64> },

    #[error("limit did not converge: estimate {estimate}, error estimate {error:e} exceeds tolerance {tol:e}")]
    NonConvergence { estimate: f64, error: f64, tol: f64 },

    #[error("quadrature did not converge: achieved error {achieved:e}, requested {requested:e}")]
    QuadratureFailure { achieved: f64, requested: f64 },

    #[error("invalid test function: {0}")]
    InvalidTestFunction(String),

    #[error("argument outside the domain of {operator}: {detail}")]
    DomainViolation { operator: String, detail: String },

    #[error("unsupported wave-function shape: {0}")]
    UnsupportedShape(String),

    #[error("wave functions must be free of delta combs")]
    NotAWaveFunction,

    #[error("decay check failed: integrand magnitude {magnitude:e} at x = {at} exceeds {limit:e}")]
    DecayCheckFailed { at: f64, magnitude: f64, limit: f64 },

    #[error("operator image contains delta combs and is not square-integrable")]
    NotInL2,

    #[error("energy must be non-negative, got {0}")]
    NegativeEnergy(f64),

    #[error("in `{expr}`: {source}")]
    Context {
        expr: String,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub(crate) fn syntax(message: impl Into<String>, line: usize, column: usize) -> Self {
        Error::Syntax {
            message: message.into(),
            line,
            column,
        }
    }

    /// Strips `Context` wrappers.
    pub fn root(&self) -> &Error {
        match self {
            Error::Context { source, .. } => source.root(),
            other => other,
        }
    }

    /// True for errors caused by malformed input text rather than by the
    /// mathematics.
    pub fn is_syntax(&self) -> bool {
        matches!(
            self.root(),
            Error::Syntax { .. } | Error::NonSmooth { .. } | Error::UnknownIdentifier { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
