use std::collections::BTreeSet;

use proptest::prelude::*;

use spinharm_core::clifford::{MultiVector, Spinor, SPINOR_DIM};
use spinharm_core::exactla::{is_zero_vector, subspace_equal, Matrix};
use spinharm_core::gstruct::{G2Class, GStructure, PsiSign, SU3Class, SpinorParts, UnitSpinor};
use spinharm_core::scalar::{rat, Scalar};
use spinharm_core::verify::{form_span, G2_COMPLEMENT, G2_GENERATORS, SU3_COMPLEMENT, SU3_GENERATORS};

fn structure(n: usize) -> GStructure {
    GStructure::new(UnitSpinor::basis(n, 5).unwrap()).unwrap()
}

fn entry() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        1 => Just(Scalar::zero()),
        3 => (-3i64..=3, 1i64..=2).prop_map(|(n, d)| Scalar::from_rational(rat(n, d))),
    ]
}

fn matrix(n: usize) -> impl Strategy<Value = Matrix> {
    prop::collection::vec(entry(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn symmetric_traceless(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n).prop_map(move |m| {
        let sym = (&m + &m.transpose()).scale(&Scalar::from_rational(rat(1, 2)));
        let shift = Matrix::identity(n).scale(&(sym.trace() / Scalar::from_int(n as i64)));
        &sym - &shift
    })
}

/// Unit spinors `(a s_i + b s_j)/c` from Pythagorean triples.
fn unit_spinor() -> impl Strategy<Value = Spinor> {
    (prop::sample::select(vec![(3, 4, 5), (5, 12, 13), (8, 15, 17)]), 0usize..8, 0usize..8, any::<bool>())
        .prop_filter("distinct slots", |(_, i, j, _)| i != j)
        .prop_map(|((a, b, c), i, j, neg)| {
            let mut v = vec![Scalar::zero(); SPINOR_DIM];
            v[i] = Scalar::from_rational(rat(a, c));
            v[j] = Scalar::from_rational(rat(if neg { -b } else { b }, c));
            Spinor::from_coords(v)
        })
}

#[test]
fn listed_stabilizers_and_complements() {
    for (n, stab, comp) in [(6, &SU3_GENERATORS[..], &SU3_COMPLEMENT[..]), (7, &G2_GENERATORS[..], &G2_COMPLEMENT[..])] {
        let g = structure(n);
        assert!(subspace_equal(g.annihilator(), &form_span(n, stab)));
        assert!(subspace_equal(g.complement_m(), &form_span(n, comp)));
        assert!(!subspace_equal(g.annihilator(), g.complement_m()));
        assert!(g.m_action_is_complement().unwrap());
    }
}

#[test]
fn psi_coefficients() {
    let psi = structure(6).psi_form(PsiSign::Negative).unwrap();
    let want = [([1, 3, 5], -1), ([1, 4, 6], -1), ([2, 3, 6], 1), ([2, 4, 5], -1)];
    for (idx, c) in want {
        assert_eq!(psi.coeff(&idx), Scalar::from_int(c), "{idx:?}");
    }
    assert_eq!(psi.terms().count(), 4);
    assert_eq!(psi.norm2(), Scalar::from_int(4));
    let psi7 = structure(7).psi_form(PsiSign::Positive).unwrap();
    assert_eq!(psi7.terms().count(), 7);
    assert!(psi7.terms().all(|(_, c)| c == &Scalar::one() || c == &Scalar::from_int(-1)));
}

#[test]
fn almost_complex_structure() {
    let j = structure(6).almost_complex_j().unwrap();
    assert!(j.is_skew());
    assert_eq!(&j * &j, Matrix::identity(6).scale(&Scalar::from_int(-1)));
    assert!(structure(7).almost_complex_j().is_err());
}

#[test]
fn phi_and_j_phi_decompose_trivially() {
    let g = structure(6);
    let p = g.decompose_spinor(&Spinor::basis(5));
    assert!(p.a.is_one() && p.b.as_ref().is_some_and(Scalar::is_zero) && is_zero_vector(&p.x));
    let p = g.decompose_spinor(&Spinor::basis(6));
    assert!(p.a.is_zero() && p.b.as_ref().is_some_and(Scalar::is_one));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn structure_from_any_unit_spinor(phi in unit_spinor(), seven in any::<bool>()) {
        let n = if seven { 7 } else { 6 };
        let g = GStructure::new(UnitSpinor::new(n, phi).unwrap()).unwrap();
        prop_assert_eq!(g.annihilator().dim(), if seven { 14 } else { 8 });
        prop_assert_eq!(g.complement_m().dim(), 7);
        prop_assert!(g.m_action_is_complement().unwrap());
    }

    #[test]
    fn decomposition_round_trips(coords in prop::collection::vec(entry(), SPINOR_DIM), seven in any::<bool>()) {
        let g = structure(if seven { 7 } else { 6 });
        let psi = Spinor::from_coords(coords);
        let parts: SpinorParts = g.decompose_spinor(&psi);
        prop_assert_eq!(g.recompose(&parts).unwrap(), psi);
    }

    #[test]
    fn su3_components_recombine(s in matrix(6), eta in prop::collection::vec(entry(), 6)) {
        let g = structure(6);
        let j = g.almost_complex_j().unwrap();
        let r = g.classify_su3(&s, &eta).unwrap();
        prop_assert_eq!(r.recombine(), s);
        prop_assert!(r.w2_minus.is_symmetric() && r.w2_minus.trace().is_zero());
        prop_assert_eq!(&r.w2_minus * &j, &j * &r.w2_minus);
        prop_assert_eq!(&r.w3 * &j, -&(&j * &r.w3));
        prop_assert!(r.w4.is_skew() && r.w2_plus.is_skew());
        for (class, m) in r.components() {
            let alone = g.classify_su3(m, &vec![Scalar::zero(); 6]).unwrap().flags();
            let want = if m.is_zero() { BTreeSet::new() } else { BTreeSet::from([class]) };
            prop_assert_eq!(alone, want);
        }
        prop_assert_eq!(r.flags().contains(&SU3Class::W5), !is_zero_vector(&eta));
    }

    #[test]
    fn g2_components_recombine(s in matrix(7)) {
        let g = structure(7);
        let r = g.classify_g2(&s).unwrap();
        prop_assert_eq!(r.recombine(), s);
        prop_assert!(r.w3.is_symmetric() && r.w3.trace().is_zero());
        prop_assert_eq!(&r.w4, &g.vector_psi_endo(&r.w4_vector).unwrap());
        for (class, m) in r.components() {
            let alone = g.classify_g2(m).unwrap().flags();
            let want: BTreeSet<G2Class> = if m.is_zero() { BTreeSet::new() } else { BTreeSet::from([class]) };
            prop_assert_eq!(alone, want);
        }
    }

    #[test]
    fn torsion_from_s_lies_in_m(s in matrix(6), t in matrix(7)) {
        for (g, s) in [(structure(6), s), (structure(7), t)] {
            let xi = g.torsion_from_s(&s, None).unwrap();
            for slot in xi.slots() {
                prop_assert!(g.complement_m().contains(&slot.pair_coords().unwrap()));
            }
        }
    }

    #[test]
    fn torsion_reproduces_the_spinor_derivative(s in matrix(6)) {
        // ξ_X·φ = 2 S(X)·φ is the defining property behind the W3 identity.
        let g = structure(6);
        let xi = g.torsion_from_s(&s, None).unwrap();
        let phi = g.phi().spinor();
        for (i, slot) in xi.slots().iter().enumerate() {
            let sx = g.rep().act(&MultiVector::vector(&s.column(i)), phi).unwrap();
            let lhs = g.rep().act(slot, phi).unwrap();
            prop_assert_eq!(lhs, sx.scale(&Scalar::from_int(2)));
        }
    }

    #[test]
    fn chi_vanishes_without_eta(s in matrix(6)) {
        let g = structure(6);
        let xi = g.torsion_from_s(&s, None).unwrap();
        prop_assert!(g.chi_s(&xi, &s).unwrap().is_zero());
    }

    #[test]
    fn w3_identity(s in symmetric_traceless(6)) {
        let g = structure(6);
        let xi = g.torsion_from_s(&s, None).unwrap();
        let phi = g.phi().spinor();
        let mut acc = Spinor::zero();
        for slot in xi.slots() {
            acc = &acc + &g.rep().act(slot, &g.rep().act(slot, phi).unwrap()).unwrap();
        }
        prop_assert_eq!(acc, phi.scale(&(s.frobenius2() * Scalar::from_int(-4))));
    }

    #[test]
    fn dirac_contraction_of_symmetric_traceless(s6 in symmetric_traceless(6), s7 in symmetric_traceless(7)) {
        prop_assert!(structure(6).dirac_pointwise(&s6, &vec![Scalar::zero(); 6]).unwrap().is_zero());
        prop_assert!(structure(7).dirac_pointwise(&s7, &vec![Scalar::zero(); 7]).unwrap().is_zero());
    }
}

#[test]
fn nonzero_eta_needs_n6_torsion_formula() {
    let g = structure(6);
    let mut eta = vec![Scalar::zero(); 6];
    eta[0] = Scalar::one();
    assert!(g.torsion_from_s(&Matrix::zeros(6, 6), Some(&eta)).is_err());
    assert!(g.classify_su3(&Matrix::zeros(7, 7), &eta).is_err());
}
