use proptest::prelude::*;

use spinharm_core::coeff::parse_scalar;
use spinharm_core::scalar::{rat, rational_roots, to_f64, Polynomial, Rational, Scalar, Substitution};

fn poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(-5i64..=5, 1..=max_degree + 1).prop_map(|c| Polynomial::from_ints(&c))
}

fn nonzero_poly(max_degree: usize) -> impl Strategy<Value = Polynomial> {
    poly(max_degree).prop_filter("nonzero", |p| !p.is_zero())
}

fn scalar() -> impl Strategy<Value = Scalar> {
    (poly(3), nonzero_poly(2)).prop_map(|(n, d)| Scalar::normalize(n, d).expect("nonzero denominator"))
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar().prop_filter("nonzero", |s| !s.is_zero())
}

fn substitution() -> impl Strategy<Value = Substitution> {
    prop::sample::select(Substitution::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn inverses(a in nonzero_scalar(), b in scalar()) {
        prop_assert!((&a * &a.recip().unwrap()).is_one());
        prop_assert_eq!(&(&b / &a) * &a, b);
    }

    #[test]
    fn normal_form_is_canonical(a in scalar(), k in nonzero_poly(2)) {
        // Multiplying numerator and denominator by a common factor changes nothing.
        let b = Scalar::normalize(a.num() * &k, a.den() * &k).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(a.den().leading().cloned(), Some(Rational::from_integer(1.into())));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), u in 0.3f64..3.0) {
        let (fa, fb) = (a.eval_u_f64(u), b.eval_u_f64(u));
        prop_assume!(fa.is_finite() && fb.is_finite() && fa.abs() < 1e6 && fb.abs() < 1e6);
        prop_assert!(((&a + &b).eval_u_f64(u) - (fa + fb)).abs() < 1e-9 * (1.0 + fa.abs() + fb.abs()));
        prop_assert!(((&a * &b).eval_u_f64(u) - fa * fb).abs() < 1e-9 * (1.0 + (fa * fb).abs()));
    }

    #[test]
    fn display_parses_back(a in scalar(), sub in substitution()) {
        prop_assert_eq!(parse_scalar(&a.to_string(), sub).unwrap(), a);
    }

    #[test]
    fn polynomials_in_t_round_trip(p in poly(3), sub in substitution(), k in 1i64..=7) {
        let t = sub.t_as_scalar();
        let composed = p.coeffs().iter().rev().fold(Scalar::zero(), |acc, c| &(&acc * &t) + &Scalar::from_rational(c.clone()));
        let back = composed.to_t(sub).unwrap();
        let t0 = rat(k, 3);
        prop_assert_eq!(back.eval(&t0).unwrap(), p.eval(&t0));
    }
}

/// Real roots of `p` in `[lo, hi]` by sign changes on a grid plus bisection.
fn bisection_roots(p: &Polynomial, lo: f64, hi: f64) -> Vec<f64> {
    let steps = 4000;
    let h = (hi - lo) / steps as f64;
    let mut out = Vec::new();
    for k in 0..steps {
        let (mut a, mut b) = (lo + k as f64 * h, lo + (k + 1) as f64 * h);
        let (fa, fb) = (p.eval_f64(a), p.eval_f64(b));
        if fa == 0.0 {
            out.push(a);
            continue;
        }
        if fa * fb > 0.0 {
            continue;
        }
        for _ in 0..80 {
            let m = 0.5 * (a + b);
            if p.eval_f64(a) * p.eval_f64(m) <= 0.0 {
                b = m;
            } else {
                a = m;
            }
        }
        out.push(0.5 * (a + b));
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// Products of distinct rational linear factors with an irreducible
    /// quadratic: every rational root is found, and nothing else.
    #[test]
    fn rational_roots_match_bisection(
        roots in prop::collection::btree_set((-6i64..=6, 1i64..=4), 1..=3),
        quad in 1i64..=3,
    ) {
        let mut p = Polynomial::from_ints(&[quad, 0, 1]);
        let mut expected: Vec<Rational> = Vec::new();
        for (n, d) in &roots {
            let r = rat(*n, *d);
            if expected.contains(&r) {
                continue;
            }
            p = &p * &Polynomial::new(vec![-r.clone(), Rational::from_integer(1.into())]);
            expected.push(r);
        }
        expected.sort();
        let found: Vec<Rational> = rational_roots(&p).unwrap().into_iter().map(|r| r.value).collect();
        prop_assert_eq!(&found, &expected);
        let numeric = bisection_roots(&p, -7.0, 7.0);
        for r in &found {
            prop_assert!(numeric.iter().any(|x| (x - to_f64(r)).abs() < 1e-6), "{} not seen numerically", r);
        }
    }
}

#[test]
fn coefficient_shapes() {
    let sub = Substitution::TEqualsUSquared;
    assert_eq!(parse_scalar("(1-t)/(2*u)", sub).unwrap().to_string(), "(1 - u^2)/(2*u)");
    let s = parse_scalar("3/2 - t", Substitution::TEqualsU).unwrap();
    assert_eq!(s, Scalar::from_rational(rat(1, 2)) * (Scalar::from_int(3) - Scalar::u() * Scalar::from_int(2)));
}

#[test]
fn substitutions_parse_and_print() {
    for sub in Substitution::ALL {
        assert_eq!(sub.to_string().parse::<Substitution>().unwrap(), sub);
    }
    assert_eq!(" t = u^2 / 2".parse::<Substitution>().unwrap(), Substitution::TEqualsHalfUSquared);
    assert!("t=u^3".parse::<Substitution>().is_err());
}

#[test]
fn odd_quantities_are_not_functions_of_t() {
    let sub = Substitution::TEqualsUSquared;
    assert!(Scalar::u().to_t(sub).is_err());
    let s = parse_scalar("t^2 + 1/t", sub).unwrap();
    assert_eq!(s.to_t(sub).unwrap().to_string(), "(1 + t^3)/t");
}
