use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::{Parity, Polynomial};
use super::rational::{format_rational, int, to_f64, Rational};
use super::{ScalarError, Substitution};

/// Element of Q(u), kept as `num/den` with `den` monic and coprime to `num`.
///
/// Because the representative is canonical, structural equality is field
/// equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: Polynomial,
    den: Polynomial,
}

impl Scalar {
    pub fn normalize(num: Polynomial, den: Polynomial) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        if den.is_constant() {
            let inv = den.coeff(0).recip();
            return Ok(Self { num: num.scale(&inv), den: Polynomial::one() });
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() { (num, den) } else { (num.exact_div(&g), den.exact_div(&g)) };
        let lc_inv = den.leading().expect("nonzero").recip();
        Ok(Self { num: num.scale(&lc_inv), den: den.scale(&lc_inv) })
    }

    pub fn from_poly(num: Polynomial) -> Self {
        Self { num, den: Polynomial::one() }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(Polynomial::constant(r))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    pub fn zero() -> Self {
        Self::from_poly(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Polynomial::one())
    }

    /// The formal variable.
    pub fn u() -> Self {
        Self::from_poly(Polynomial::var())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Constant value, if the scalar does not depend on `u`.
    pub fn as_rational(&self) -> Option<Rational> {
        (self.num.is_constant() && self.den.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        Self::normalize(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Self::normalize(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn powi(&self, k: i32) -> Result<Self, ScalarError> {
        let base = if k < 0 { self.recip()? } else { self.clone() };
        Ok((0..k.unsigned_abs()).fold(Self::one(), |acc, _| &acc * &base))
    }

    pub fn parity(&self) -> Parity {
        match (self.num.parity(), self.den.parity()) {
            (Parity::Zero, _) => Parity::Zero,
            (Parity::Even, Parity::Even) | (Parity::Odd, Parity::Odd) => Parity::Even,
            (Parity::Even, Parity::Odd) | (Parity::Odd, Parity::Even) => Parity::Odd,
            _ => Parity::Mixed,
        }
    }

    /// Rewrites the scalar as a rational function of `t`.
    ///
    /// For the squared substitutions only even functions of `u` qualify.
    pub fn to_t(&self, sub: Substitution) -> Result<TFunction, ScalarError> {
        let Some(c) = sub.u_squared_factor() else {
            return Ok(TFunction(self.clone()));
        };
        if !matches!(self.parity(), Parity::Zero | Parity::Even) {
            return Err(ScalarError::NotExpressibleInT(self.to_string()));
        }
        let (num_even, num_odd) = self.num.even_odd_parts();
        let (den_even, den_odd) = self.den.even_odd_parts();
        // Reduced even functions have both parts even, or both odd with a common u.
        let (n, d) = if num_odd.is_zero() && den_odd.is_zero() {
            (num_even, den_even)
        } else if num_even.is_zero() && den_even.is_zero() {
            (num_odd, den_odd)
        } else {
            return Err(ScalarError::NotExpressibleInT(self.to_string()));
        };
        // u^2 = t / c
        let inv = c.recip();
        Ok(TFunction(Self::normalize(n.rescale_var(&inv), d.rescale_var(&inv))?))
    }

    /// Like [`Scalar::to_t`], but odd functions are first multiplied by `u`.
    /// This keeps the zero set on `t > 0` and is meant for root finding only.
    pub fn to_t_zero_set(&self, sub: Substitution) -> Result<TFunction, ScalarError> {
        match (sub, self.parity()) {
            (Substitution::TEqualsU, _) => self.to_t(sub),
            (_, Parity::Odd) => (self * &Self::u()).to_t(sub),
            _ => self.to_t(sub),
        }
    }

    fn check_pole(&self, sub: Substitution, t0: &Rational) -> Result<(), ScalarError> {
        if t0 <= &Rational::zero() {
            return Err(ScalarError::NonPositive(format_rational(t0)));
        }
        let pole = match sub.u_squared_factor() {
            Some(c) => self.den.vanishes_at_sqrt(&(t0 / c)),
            None => self.den.eval(t0).is_zero(),
        };
        if pole {
            return Err(ScalarError::Pole(format_rational(t0)));
        }
        Ok(())
    }

    /// Double-precision value at `t = t0 > 0`. For oracles only.
    pub fn eval_numeric(&self, sub: Substitution, t0: &Rational) -> Result<f64, ScalarError> {
        self.check_pole(sub, t0)?;
        let u = sub.u_value(to_f64(t0));
        Ok(self.num.eval_f64(u) / self.den.eval_f64(u))
    }

    /// Double-precision value at a raw `u`. Poles give non-finite output.
    pub fn eval_u_f64(&self, u: f64) -> f64 {
        self.num.eval_f64(u) / self.den.eval_f64(u)
    }

    /// Exact zero test at `t = t0 > 0`, valid even when `u` is irrational there.
    pub fn vanishes_at(&self, sub: Substitution, t0: &Rational) -> Result<bool, ScalarError> {
        self.check_pole(sub, t0)?;
        Ok(match sub.u_squared_factor() {
            Some(c) => self.num.vanishes_at_sqrt(&(t0 / c)),
            None => self.num.eval(t0).is_zero(),
        })
    }

    /// Integer-coefficient numerator and denominator with coprime contents and
    /// positive leading denominator coefficient.
    fn integer_form(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let lcm = self
            .num
            .coeffs()
            .iter()
            .chain(self.den.coeffs())
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let scale = |p: &Polynomial| -> Vec<BigInt> {
            p.coeffs().iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect()
        };
        let (mut n, mut d) = (scale(&self.num), scale(&self.den));
        let g = n.iter().chain(d.iter()).fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !g.is_one() {
            n.iter_mut().for_each(|c| *c = &*c / &g);
            d.iter_mut().for_each(|c| *c = &*c / &g);
        }
        (n, d)
    }

    /// Canonical text in the variable `var`, e.g. `(1 - u^2)/(2*u)`.
    pub fn to_string_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let (n, d) = self.integer_form();
        let to_poly = |v: &[BigInt]| Polynomial::new(v.iter().cloned().map(Rational::from_integer).collect());
        let (np, dp) = (to_poly(&n), to_poly(&d));
        let num_terms = np.coeffs().iter().filter(|c| !c.is_zero()).count();
        let mut num_s = np.to_string_in(var);
        if dp.is_one() {
            return num_s;
        }
        if num_terms > 1 {
            num_s = format!("({num_s})");
        }
        let den_terms = dp.coeffs().iter().filter(|c| !c.is_zero()).count();
        let bare = dp.is_constant() || (den_terms == 1 && dp.leading().is_some_and(One::is_one));
        let den_s = dp.to_string_in(var);
        if bare {
            format!("{num_s}/{den_s}")
        } else {
            format!("{num_s}/({den_s})")
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_in("u"))
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return Scalar::normalize(&self.num + &rhs.num, self.den.clone()).expect("nonzero denominator");
        }
        Scalar::normalize(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
            .expect("nonzero denominator")
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_poly(&self.num * &rhs.num);
        }
        Scalar::normalize(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominator")
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] for a fallible form.
impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by the zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { self.$m(&rhs) }
        }
    )*};
}
forward_binop!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        *self = &*self - &rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

impl Product for Scalar {
    fn product<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::one(), |acc, x| acc * x)
    }
}

/// Rational function of the metric parameter `t`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TFunction(Scalar);

impl TFunction {
    pub fn numerator(&self) -> &Polynomial {
        self.0.num()
    }

    pub fn denominator(&self) -> &Polynomial {
        self.0.den()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Exact value at `t0`.
    pub fn eval(&self, t0: &Rational) -> Result<Rational, ScalarError> {
        let d = self.0.den().eval(t0);
        if d.is_zero() {
            return Err(ScalarError::Pole(format_rational(t0)));
        }
        Ok(self.0.num().eval(t0) / d)
    }
}

impl fmt::Display for TFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.to_string_in("t"))
    }
}
