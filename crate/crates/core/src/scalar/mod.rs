//! Exact arithmetic: rationals, univariate polynomials, the rational-function
//! field Q(u), parameter substitutions and rational root finding.

mod field;
mod poly;
mod rational;
mod roots;
mod subst;

pub use field::{Scalar, TFunction};
pub use poly::{Parity, Polynomial};
pub use rational::{format_rational, int, parse_rational, rat, rational_sqrt, to_f64, Rational};
pub use roots::{rational_roots, Root};
pub use subst::Substitution;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("not expressible in t: {0}")]
    NotExpressibleInT(String),
    #[error("identically zero")]
    IdenticallyZero,
    #[error("pole at t = {0}")]
    Pole(String),
    #[error("parameter must be positive, got t = {0}")]
    NonPositive(String),
    #[error("malformed rational {0:?}")]
    BadRational(String),
    #[error("unknown substitution {0:?}")]
    UnknownSubstitution(String),
}
