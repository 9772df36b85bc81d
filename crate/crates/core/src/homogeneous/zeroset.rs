use std::fmt;

use num_traits::{Signed, Zero};

use crate::scalar::{format_rational, rational_roots, Polynomial, Rational, Root, Scalar, ScalarError, Substitution};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Every entry vanishes identically.
    AllT,
    /// The entries vanish simultaneously at finitely many rational `t > 0`.
    RootSet,
    /// No `t > 0` makes every entry vanish.
    Never,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::AllT => "ALL_T",
            Verdict::RootSet => "ROOT_SET",
            Verdict::Never => "NEVER",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Common zero set in `t` of a list of scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZeroSet {
    pub verdict: Verdict,
    /// Roots with `t > 0`.
    pub roots: Vec<Root>,
    /// Roots with `t <= 0`, reported on request only.
    pub nonpositive_roots: Vec<Root>,
}

impl ZeroSet {
    pub fn root_values(&self) -> Vec<Rational> {
        self.roots.iter().map(|r| r.value.clone()).collect()
    }

    pub fn describe(&self) -> String {
        match self.verdict {
            Verdict::RootSet => {
                let v: Vec<String> = self.roots.iter().map(|r| format_rational(&r.value)).collect();
                format!("ROOT_SET {{{}}}", v.join(", "))
            }
            v => v.to_string(),
        }
    }
}

/// How entries are turned into functions of `t` before root finding.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Conversion {
    /// Entries must be even in `u` under the squared substitutions.
    Strict,
    /// Odd entries are multiplied by `u` first; the zero set on `t > 0` is unchanged.
    ParityNormalized,
}

/// Exact common zero set of `entries` over `t`, poles excluded.
pub fn common_zero_set(entries: &[Scalar], sub: Substitution, conv: Conversion) -> Result<ZeroSet, ScalarError> {
    let nonzero: Vec<&Scalar> = entries.iter().filter(|s| !s.is_zero()).collect();
    if nonzero.is_empty() {
        return Ok(ZeroSet { verdict: Verdict::AllT, roots: Vec::new(), nonpositive_roots: Vec::new() });
    }
    let fns = nonzero
        .iter()
        .map(|s| match conv {
            Conversion::Strict => s.to_t(sub),
            Conversion::ParityNormalized => s.to_t_zero_set(sub),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let g = fns.iter().fold(Polynomial::zero(), |acc, f| acc.gcd(f.numerator()));
    let candidates = rational_roots(&g)?;
    let mut roots = Vec::new();
    let mut nonpositive_roots = Vec::new();
    for r in candidates {
        if fns.iter().any(|f| f.denominator().eval(&r.value).is_zero()) {
            continue;
        }
        if r.value.is_positive() {
            roots.push(r);
        } else {
            nonpositive_roots.push(r);
        }
    }
    let verdict = if roots.is_empty() { Verdict::Never } else { Verdict::RootSet };
    Ok(ZeroSet { verdict, roots, nonpositive_roots })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::parse_scalar;
    use crate::scalar::rat;

    fn s(text: &str, sub: Substitution) -> Scalar {
        parse_scalar(text, sub).unwrap()
    }

    #[test]
    fn all_zero_is_all_t() {
        let z = common_zero_set(&[Scalar::zero()], Substitution::TEqualsU, Conversion::Strict).unwrap();
        assert_eq!(z.verdict, Verdict::AllT);
    }

    #[test]
    fn common_roots_are_intersected() {
        let sub = Substitution::TEqualsU;
        let z = common_zero_set(&[s("(t-2)*(t-3)", sub), s("(t-2)*(t+1)/t", sub)], sub, Conversion::Strict).unwrap();
        assert_eq!(z.verdict, Verdict::RootSet);
        assert_eq!(z.root_values(), vec![rat(2, 1)]);
        let z = common_zero_set(&[s("t+1", sub)], sub, Conversion::Strict).unwrap();
        assert_eq!(z.verdict, Verdict::Never);
        assert_eq!(z.nonpositive_roots.len(), 1);
    }

    #[test]
    fn parity_normalization_for_odd_entries() {
        let sub = Substitution::TEqualsHalfUSquared;
        let odd = s("u/4", sub);
        assert!(common_zero_set(std::slice::from_ref(&odd), sub, Conversion::Strict).is_err());
        let z = common_zero_set(&[odd], sub, Conversion::ParityNormalized).unwrap();
        assert_eq!(z.verdict, Verdict::Never);
        // (8u - 1)/u with t = u vanishes at 1/8
        let sub = Substitution::TEqualsU;
        let z = common_zero_set(&[s("(8*u-1)/u", sub)], sub, Conversion::ParityNormalized).unwrap();
        assert_eq!(z.root_values(), vec![rat(1, 8)]);
    }
}
