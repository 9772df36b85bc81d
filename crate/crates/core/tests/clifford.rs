use proptest::prelude::*;

use spinharm_core::clifford::{c_sigma, pairs, FrameTensor, MultiVector, SpinRep, Spinor, SPINOR_DIM};
use spinharm_core::exactla::Matrix;
use spinharm_core::scalar::{rat, Scalar};

fn entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => Just(Scalar::zero()),
        3 => (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Scalar::from_rational(rat(n, d))),
    ]
}

fn dim() -> impl Strategy<Value = usize> {
    prop_oneof![Just(6usize), Just(7usize)]
}

fn vector(n: usize) -> impl Strategy<Value = MultiVector> {
    prop::collection::vec(entry(), n).prop_map(|c| MultiVector::vector(&c))
}

fn two_form(n: usize) -> impl Strategy<Value = MultiVector> {
    prop::collection::vec(entry(), n * (n - 1) / 2).prop_map(move |c| MultiVector::from_pair_coords(n, &c))
}

fn skew(n: usize) -> impl Strategy<Value = Matrix> {
    two_form(n).prop_map(|w| w.to_skew_matrix().unwrap())
}

fn spinor() -> impl Strategy<Value = Spinor> {
    prop::collection::vec(entry(), SPINOR_DIM).prop_map(Spinor::from_coords)
}

fn rep(n: usize) -> SpinRep {
    SpinRep::build(n).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn vectors_square_to_minus_norm(n in dim(), seed in prop::collection::vec(entry(), 7)) {
        let r = rep(n);
        let x = MultiVector::vector(&seed[..n]);
        let e = r.endo(&x).unwrap();
        prop_assert_eq!(&e * &e, Matrix::identity(SPINOR_DIM).scale(&-x.norm2()));
    }

    #[test]
    fn two_forms_act_skew((n, w) in dim().prop_flat_map(|n| (Just(n), two_form(n))), psi in spinor()) {
        let r = rep(n);
        let e = r.endo(&w).unwrap();
        prop_assert!(e.is_skew());
        prop_assert!(r.act(&w, &psi).unwrap().dot(&psi).is_zero());
        prop_assert_eq!(Spinor::apply(&e, &psi), r.act(&w, &psi).unwrap());
    }

    #[test]
    fn contraction_identity_has_factor_minus_two(
        (n, x, w) in dim().prop_flat_map(|n| (Just(n), vector(n), two_form(n)))
    ) {
        let r = rep(n);
        let (ex, ew) = (r.endo(&x).unwrap(), r.endo(&w).unwrap());
        let rhs = r.endo(&w.interior(&x).unwrap()).unwrap().scale(&Scalar::from_int(-2));
        prop_assert_eq!(ex.commutator(&ew), rhs);
    }

    #[test]
    fn commutator_of_forms_is_twice_the_bracket(
        (n, w, t) in dim().prop_flat_map(|n| (Just(n), two_form(n), two_form(n)))
    ) {
        let r = rep(n);
        let lhs = r.endo(&w).unwrap().commutator(&r.endo(&t).unwrap());
        prop_assert_eq!(lhs, r.endo(&w.bracket(&t).unwrap()).unwrap().scale(&Scalar::from_int(2)));
    }

    #[test]
    fn spin_lift_intertwines_vectors(
        (n, a, x) in dim().prop_flat_map(|n| (Just(n), skew(n), prop::collection::vec(entry(), n)))
    ) {
        // [lift(A), X·] = (A X)·
        let r = rep(n);
        let lift = r.spin_lift(&a).unwrap();
        let ex = r.endo(&MultiVector::vector(&x)).unwrap();
        let rotated = r.endo(&MultiVector::vector(&a.mul_vec(&x))).unwrap();
        prop_assert_eq!(lift.commutator(&ex), rotated);
    }

    #[test]
    fn spin_lift_is_a_lie_homomorphism((n, a, b) in dim().prop_flat_map(|n| (Just(n), skew(n), skew(n)))) {
        let r = rep(n);
        let (la, lb) = (r.spin_lift(&a).unwrap(), r.spin_lift(&b).unwrap());
        prop_assert_eq!(la.commutator(&lb), r.spin_lift(&a.commutator(&b)).unwrap());
    }

    #[test]
    fn c_minus_sigma_is_scalar(
        (n, slots) in dim().prop_flat_map(|n| (Just(n), prop::collection::vec(two_form(n), n)))
    ) {
        let r = rep(n);
        let t = FrameTensor::new(slots).unwrap();
        let cs = c_sigma(&r, &t).unwrap();
        let diff = &cs.c - &r.endo(&cs.sigma).unwrap();
        let half = Scalar::from_rational(rat(1, 2));
        prop_assert_eq!(diff, Matrix::identity(SPINOR_DIM).scale(&-(&half * &cs.norm2)));
        if !cs.norm2.is_zero() {
            prop_assert_eq!(cs.kappa, Some(half));
        }
    }
}

#[test]
fn clifford_relations_hold_exactly() {
    for n in [6, 7] {
        let g = rep(n).generators();
        for i in 0..n {
            for j in 0..n {
                let anti = &(&g[i] * &g[j]) + &(&g[j] * &g[i]);
                let want = if i == j { Matrix::identity(SPINOR_DIM).scale(&Scalar::from_int(-2)) } else { Matrix::zeros(8, 8) };
                assert_eq!(anti, want, "n = {n}, ({i}, {j})");
            }
        }
    }
}

#[test]
fn contraction_example() {
    let r = rep(6);
    let lhs = r.endo(&MultiVector::e(6, 1)).unwrap().commutator(&r.endo(&MultiVector::e2(6, 1, 2)).unwrap());
    assert_eq!(lhs, r.endo(&MultiVector::e(6, 2)).unwrap().scale(&Scalar::from_int(-2)));
}

#[test]
fn e7_is_the_product_of_the_others_up_to_sign() {
    // In the 8-dimensional real module, e_1 ... e_7 acts as ±Id.
    let r = rep(7);
    let vol = MultiVector::blade(7, &[1, 2, 3, 4, 5, 6, 7], Scalar::one()).unwrap();
    let e = r.endo(&vol).unwrap();
    assert!(e == Matrix::identity(8) || e == Matrix::identity(8).scale(&Scalar::from_int(-1)));
}

#[test]
fn pair_coordinates_round_trip() {
    let n = 7;
    let coords: Vec<Scalar> = (0..pairs(n).len()).map(|k| Scalar::from_int(k as i64 - 10)).collect();
    let w = MultiVector::from_pair_coords(n, &coords);
    assert_eq!(w.pair_coords().unwrap(), coords);
    assert_eq!(MultiVector::from_skew_matrix(&w.to_skew_matrix().unwrap()).unwrap(), w);
}

#[test]
fn wrong_dimension_is_rejected() {
    let r = rep(6);
    assert!(r.endo(&MultiVector::e(7, 1)).is_err());
    assert!(r.spin_lift(&Matrix::zeros(7, 7)).is_err());
    assert!(FrameTensor::new(vec![MultiVector::e(6, 1); 6]).is_err());
}
