use num_complex::Complex64;
use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report. Variants carry a stable
/// [`Error::code`] so that front ends can emit machine-readable reasons.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("exact division left a nonzero remainder")]
    Division,
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("root iteration did not converge after {iterations} iterations")]
    Convergence { iterations: usize, best: Vec<Complex64> },
    #[error("polynomial of degree {degree} is not an Ehrhart form of dimension {dim}")]
    NotPolynomialEhrhartForm { degree: usize, dim: usize },
    #[error("invalid parameter: {0}")]
    Param(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("hypergeometric series hits a pole at term {term}")]
    Pole { term: usize },
    #[error("polynomial is not symmetric about the line (coefficient {index} of the shifted polynomial has the wrong parity)")]
    NotSymmetric { index: usize },
    #[error("degree mismatch: expected deg f = deg g + 1, got {f} and {g}")]
    Degree { f: usize, g: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("the ansatz admits no relation")]
    NoRelation,
    #[error("the ansatz is underdetermined; free unknowns: {free:?}")]
    RankDeficient { free: Vec<String> },
    #[error("point budget of {budget} exceeded at dilation {dilation}")]
    OverBudget { budget: usize, dilation: usize },
    #[error("interpolated polynomial predicts {predicted} points at dilation {dilation}, counted {counted}")]
    InterpolationMismatch { dilation: usize, predicted: String, counted: String },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Division => "DivisionError",
            Error::DegenerateInput(_) => "DegenerateInput",
            Error::Convergence { .. } => "ConvergenceError",
            Error::NotPolynomialEhrhartForm { .. } => "NotPolynomialEhrhartForm",
            Error::Param(_) => "ParamError",
            Error::Internal(_) => "InternalError",
            Error::Pole { .. } => "PoleError",
            Error::NotSymmetric { .. } => "NotSymmetric",
            Error::Degree { .. } => "DegreeError",
            Error::Precondition(_) => "PreconditionError",
            Error::NoRelation => "NoRelation",
            Error::RankDeficient { .. } => "RankDeficient",
            Error::OverBudget { .. } => "OverBudget",
            Error::InterpolationMismatch { .. } => "InterpolationMismatch",
            Error::Parse(_) => "ParseError",
        }
    }
}
