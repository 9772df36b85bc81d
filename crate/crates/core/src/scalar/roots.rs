use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use super::{Polynomial, ScalarError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub value: Rational,
    pub multiplicity: usize,
}

/// All rational roots of `p`, ascending, with multiplicities.
///
/// Candidates come from the rational root theorem applied to the primitive
/// integer form of `p`.
pub fn rational_roots(p: &Polynomial) -> Result<Vec<Root>, ScalarError> {
    if p.is_zero() {
        return Err(ScalarError::IdenticallyZero);
    }
    let mut roots = Vec::new();
    let zero_mult = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    if zero_mult > 0 {
        roots.push(Root { value: Rational::zero(), multiplicity: zero_mult });
    }
    let mut rest = Polynomial::new(p.coeffs()[zero_mult..].to_vec());
    if rest.is_constant() {
        return Ok(roots);
    }
    let (ints, _) = rest.integer_primitive();
    let lead = ints.last().expect("nonconstant").abs();
    let constant = ints[0].abs();
    let (ps, qs) = (divisors(&constant), divisors(&lead));

    let mut candidates: Vec<Rational> = Vec::new();
    for q in &qs {
        for num in &ps {
            let r = Rational::new(num.clone(), q.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();

    for c in candidates {
        let mut multiplicity = 0;
        let factor = Polynomial::new(vec![-c.clone(), Rational::one()]);
        while !rest.is_constant() && rest.eval(&c).is_zero() {
            rest = rest.exact_div(&factor);
            multiplicity += 1;
        }
        if multiplicity > 0 {
            roots.push(Root { value: c, multiplicity });
        }
    }
    roots.sort_by(|a, b| a.value.cmp(&b.value));
    Ok(roots)
}

/// Positive divisors by trial division; the integers met here are tiny.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    if let Some(m) = n.to_u64() {
        let mut small = Vec::new();
        let mut large = Vec::new();
        let mut d = 1u64;
        while d.saturating_mul(d) <= m {
            if m % d == 0 {
                small.push(BigInt::from(d));
                if d != m / d {
                    large.push(BigInt::from(m / d));
                }
            }
            d += 1;
        }
        small.extend(large.into_iter().rev());
        return small;
    }
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &(&d * &d) <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let co = n / &d;
            if co != d {
                out.push(co);
            }
        }
        d += 1;
    }
    out.sort();
    out
}
