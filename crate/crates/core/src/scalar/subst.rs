use std::fmt;
use std::str::FromStr;

use super::rational::{int, rat, Rational};
use super::{Polynomial, Scalar, ScalarError};

/// How the metric parameter `t` is expressed through the formal variable `u`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Substitution {
    /// `t = u^2`, so `u = sqrt(t)`.
    TEqualsUSquared,
    /// `t = u^2/2`, so `u = sqrt(2t)`.
    TEqualsHalfUSquared,
    /// `t = u`.
    TEqualsU,
}

impl Substitution {
    pub const ALL: [Substitution; 3] = [
        Substitution::TEqualsUSquared,
        Substitution::TEqualsHalfUSquared,
        Substitution::TEqualsU,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Substitution::TEqualsUSquared => "t=u^2",
            Substitution::TEqualsHalfUSquared => "t=u^2/2",
            Substitution::TEqualsU => "t=u",
        }
    }

    /// `t` written as an element of Q(u).
    pub fn t_as_scalar(self) -> Scalar {
        match self.u_squared_factor() {
            Some(c) => Scalar::from_poly(Polynomial::monomial(c, 2)),
            None => Scalar::u(),
        }
    }

    /// The constant `c` with `t = c * u^2`, or `None` for `t = u`.
    pub fn u_squared_factor(self) -> Option<Rational> {
        match self {
            Substitution::TEqualsUSquared => Some(int(1)),
            Substitution::TEqualsHalfUSquared => Some(rat(1, 2)),
            Substitution::TEqualsU => None,
        }
    }

    /// Numeric value of `u` at a parameter value `t0 > 0`.
    pub fn u_value(self, t0: f64) -> f64 {
        match self {
            Substitution::TEqualsUSquared => t0.sqrt(),
            Substitution::TEqualsHalfUSquared => (2.0 * t0).sqrt(),
            Substitution::TEqualsU => t0,
        }
    }
}

impl fmt::Display for Substitution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Substitution {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        Self::ALL
            .into_iter()
            .find(|sub| sub.as_str() == compact)
            .ok_or_else(|| ScalarError::UnknownSubstitution(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        for sub in Substitution::ALL {
            assert_eq!(sub.as_str().parse::<Substitution>().unwrap(), sub);
        }
        assert_eq!(" t = u^2 / 2".parse::<Substitution>().unwrap(), Substitution::TEqualsHalfUSquared);
        assert!("t=u^3".parse::<Substitution>().is_err());
    }

    #[test]
    fn t_in_terms_of_u() {
        let half = Substitution::TEqualsHalfUSquared.t_as_scalar();
        assert_eq!(half.to_string(), "u^2/2");
        assert_eq!(Substitution::TEqualsU.t_as_scalar(), Scalar::u());
    }
}
