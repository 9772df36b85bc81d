//! Pointwise algebra of a spinor-defined SU(3)- or G2-structure: spinor
//! decomposition, stabilizer and complement, `J_φ`, `ψ_φ`, intrinsic torsion
//! from `S`, `χ^S`, the Dirac contraction and Gray-Hervella classes.

mod classify;

pub use classify::{G2Class, G2ClassReport, SU3Class, SU3ClassReport};

use crate::clifford::{pairs, triples, CliffordError, FrameTensor, MultiVector, SpinRep, Spinor, SPINOR_DIM};
use crate::exactla::{is_zero_vector, LinAlgError, Matrix, Subspace};
use crate::scalar::{rat, rational_sqrt, Scalar};

/// The intrinsic torsion `ξ_{X_1}, ..., ξ_{X_n}` as 2-forms.
pub type Torsion = FrameTensor;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GStructError {
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error("the zero spinor does not define a structure")]
    ZeroSpinor,
    #[error("spinor is not of unit length (norm² = {0})")]
    NotUnit(String),
    #[error("cannot normalize: norm² = {0} is not the square of a rational")]
    NotNormalizable(String),
    #[error("broken representation: {0}")]
    BrokenRepresentation(String),
    #[error("torsion from S needs η = 0 in dimension 6; use the homogeneous model torsion")]
    NonzeroEta,
    #[error("{0} is only defined for n = {1}")]
    WrongDimension(&'static str, usize),
    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: String, found: String },
}

/// Unit spinor together with the dimension whose structure it defines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitSpinor {
    n: usize,
    coords: Spinor,
}

impl UnitSpinor {
    pub fn new(n: usize, coords: Spinor) -> Result<Self, GStructError> {
        if n != 6 && n != 7 {
            return Err(CliffordError::UnsupportedDimension(n).into());
        }
        if coords.is_zero() {
            return Err(GStructError::ZeroSpinor);
        }
        let norm2 = coords.norm2();
        if !norm2.is_one() {
            return Err(GStructError::NotUnit(norm2.to_string()));
        }
        Ok(Self { n, coords })
    }

    /// Rescales to unit length when the norm is rational.
    pub fn normalized(n: usize, coords: Spinor) -> Result<Self, GStructError> {
        if coords.is_zero() {
            return Err(GStructError::ZeroSpinor);
        }
        let norm2 = coords.norm2();
        let norm = norm2
            .as_rational()
            .and_then(|r| rational_sqrt(&r))
            .ok_or_else(|| GStructError::NotNormalizable(norm2.to_string()))?;
        Self::new(n, coords.scale(&Scalar::from_rational(norm.recip())))
    }

    /// `s_k` as a unit spinor.
    pub fn basis(n: usize, k: usize) -> Result<Self, GStructError> {
        Self::new(n, Spinor::basis(k))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn spinor(&self) -> &Spinor {
        &self.coords
    }
}

/// Sign convention for `ψ_φ(X,Y,Z) = ±⟨X·Y·Z·φ, φ⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsiSign {
    Negative,
    Positive,
}

impl PsiSign {
    /// Negative for SU(3), positive for G2.
    pub fn default_for(n: usize) -> Self {
        if n == 6 {
            PsiSign::Negative
        } else {
            PsiSign::Positive
        }
    }
}

/// `ψ = a φ + b j·φ + X·φ` (the `b` term only for n = 6).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinorParts {
    pub a: Scalar,
    pub b: Option<Scalar>,
    pub x: Vec<Scalar>,
}

/// A unit spinor with its stabilizer data precomputed.
#[derive(Clone, Debug)]
pub struct GStructure {
    rep: SpinRep,
    phi: UnitSpinor,
    j_phi: Option<Spinor>,
    annihilator: Subspace,
    complement: Subspace,
    decomposer: Matrix,
    psi: MultiVector,
}

impl GStructure {
    pub fn new(phi: UnitSpinor) -> Result<Self, GStructError> {
        let n = phi.n;
        let rep = SpinRep::build(n)?;
        let j_phi = if n == 6 { Some(rep.act(&rep.volume_element()?, &phi.coords)?) } else { None };

        let action_cols: Vec<Vec<Scalar>> = pairs(n)
            .into_iter()
            .map(|(i, j)| rep.act(&MultiVector::e2(n, i, j), &phi.coords).map(Spinor::into_coords))
            .collect::<Result<_, _>>()?;
        let action = Matrix::from_columns(SPINOR_DIM, &action_cols)?;
        let annihilator = action.kernel();
        let complement = annihilator.orthogonal_complement();

        let mut cols = vec![phi.coords.coords().to_vec()];
        if let Some(jp) = &j_phi {
            cols.push(jp.coords().to_vec());
        }
        for i in 1..=n as u8 {
            cols.push(rep.act(&MultiVector::e(n, i), &phi.coords)?.into_coords());
        }
        let decomposer = Matrix::from_columns(SPINOR_DIM, &cols)?
            .inverse()
            .ok_or_else(|| GStructError::BrokenRepresentation("φ, j·φ, e_i·φ do not span Δ".into()))?;

        let mut s = Self {
            rep,
            phi,
            j_phi,
            annihilator,
            complement,
            decomposer,
            psi: MultiVector::zero(n),
        };
        s.psi = s.psi_form(PsiSign::default_for(n))?;
        Ok(s)
    }

    pub fn n(&self) -> usize {
        self.phi.n
    }

    pub fn rep(&self) -> &SpinRep {
        &self.rep
    }

    pub fn phi(&self) -> &UnitSpinor {
        &self.phi
    }

    /// `j·φ` (n = 6).
    pub fn j_phi(&self) -> Option<&Spinor> {
        self.j_phi.as_ref()
    }

    /// Stabilizer algebra of φ inside Λ², in pair coordinates.
    pub fn annihilator(&self) -> &Subspace {
        &self.annihilator
    }

    /// Orthogonal complement `m` of the stabilizer.
    pub fn complement_m(&self) -> &Subspace {
        &self.complement
    }

    /// `ψ_φ` with the sign convention for this dimension.
    pub fn psi(&self) -> &MultiVector {
        &self.psi
    }

    fn check_square(&self, s: &Matrix) -> Result<(), GStructError> {
        let n = self.n();
        if s.rows() != n || s.cols() != n {
            return Err(GStructError::Shape {
                expected: format!("{n}x{n}"),
                found: format!("{}x{}", s.rows(), s.cols()),
            });
        }
        Ok(())
    }

    fn check_len(&self, v: &[Scalar]) -> Result<(), GStructError> {
        if v.len() != self.n() {
            return Err(GStructError::Shape { expected: self.n().to_string(), found: v.len().to_string() });
        }
        Ok(())
    }

    pub fn decompose_spinor(&self, psi: &Spinor) -> SpinorParts {
        let c = self.decomposer.mul_vec(psi.coords());
        let (b, offset) = if self.n() == 6 { (Some(c[1].clone()), 2) } else { (None, 1) };
        SpinorParts { a: c[0].clone(), b, x: c[offset..].to_vec() }
    }

    pub fn recompose(&self, parts: &SpinorParts) -> Result<Spinor, GStructError> {
        let mut out = self.phi.coords.scale(&parts.a);
        if let (Some(b), Some(jp)) = (&parts.b, &self.j_phi) {
            out = &out + &jp.scale(b);
        }
        self.check_len(&parts.x)?;
        let xphi = self.rep.act(&MultiVector::vector(&parts.x), &self.phi.coords)?;
        Ok(&out + &xphi)
    }

    /// Checks that `m·φ` is exactly the orthogonal complement of φ.
    pub fn m_action_is_complement(&self) -> Result<bool, GStructError> {
        let n = self.n();
        let images: Vec<Vec<Scalar>> = self
            .complement
            .basis()
            .iter()
            .map(|w| self.rep.act(&MultiVector::from_pair_coords(n, w), &self.phi.coords).map(Spinor::into_coords))
            .collect::<Result<_, _>>()?;
        let orthogonal = images.iter().all(|v| crate::exactla::dot(v, self.phi.coords.coords()).is_zero());
        let span = Subspace::span(SPINOR_DIM, images)?;
        Ok(orthogonal && span.dim() == SPINOR_DIM - 1)
    }

    /// `J_φ` defined by `J_φ(X)·φ = j·X·φ`; column `k` is `J_φ(e_k)`.
    pub fn almost_complex_j(&self) -> Result<Matrix, GStructError> {
        if self.n() != 6 {
            return Err(GStructError::WrongDimension("J_φ", 6));
        }
        let vol = self.rep.volume_element()?;
        let mut cols = Vec::with_capacity(6);
        for k in 1..=6u8 {
            let xphi = self.rep.act(&MultiVector::e(6, k), &self.phi.coords)?;
            let parts = self.decompose_spinor(&self.rep.act(&vol, &xphi)?);
            if !parts.a.is_zero() || !parts.b.as_ref().is_some_and(Scalar::is_zero) {
                return Err(GStructError::BrokenRepresentation("j·X·φ has a φ or j·φ component".into()));
            }
            cols.push(parts.x);
        }
        Ok(Matrix::from_columns(6, &cols)?)
    }

    /// 3-form with `ψ_ijk = ±⟨e_i·e_j·e_k·φ, φ⟩`.
    pub fn psi_form(&self, sign: PsiSign) -> Result<MultiVector, GStructError> {
        let n = self.n();
        let mut out = MultiVector::zero(n);
        for (i, j, k) in triples(n) {
            let blade = MultiVector::blade(n, &[i, j, k], Scalar::one())?;
            let v = self.rep.act(&blade, &self.phi.coords)?.dot(&self.phi.coords);
            let v = if sign == PsiSign::Negative { -v } else { v };
            out = &out + &MultiVector::blade(n, &[i, j, k], v)?;
        }
        Ok(out)
    }

    /// `ξ_{X_i} = c · S(X_i) ⌟ ψ_φ` with `c = 1` (n = 6, η = 0) or `c = 2/3` (n = 7).
    pub fn torsion_from_s(&self, s: &Matrix, eta: Option<&[Scalar]>) -> Result<Torsion, GStructError> {
        self.check_square(s)?;
        let n = self.n();
        if n == 6 && eta.is_some_and(|e| !is_zero_vector(e)) {
            return Err(GStructError::NonzeroEta);
        }
        let factor = if n == 7 { Scalar::from_rational(rat(2, 3)) } else { Scalar::one() };
        let slots = (0..n)
            .map(|i| Ok(self.psi.interior(&MultiVector::vector(&s.column(i)))?.scale(&factor)))
            .collect::<Result<Vec<_>, GStructError>>()?;
        Ok(FrameTensor::new(slots)?)
    }

    /// `χ^S = Σ_i ξ_{e_i} S(e_i)`.
    pub fn chi_s(&self, xi: &Torsion, s: &Matrix) -> Result<MultiVector, GStructError> {
        self.check_square(s)?;
        let n = self.n();
        let mut out = vec![Scalar::zero(); n];
        for (i, slot) in xi.slots().iter().enumerate() {
            let v = slot.to_skew_matrix()?.mul_vec(&s.column(i));
            out.iter_mut().zip(v).for_each(|(o, x)| *o += x);
        }
        Ok(MultiVector::vector(&out))
    }

    /// `Σ_i e_i·(S(e_i)·φ + η(e_i) j·φ)`.
    pub fn dirac_pointwise(&self, s: &Matrix, eta: &[Scalar]) -> Result<Spinor, GStructError> {
        self.check_square(s)?;
        self.check_len(eta)?;
        let n = self.n();
        let mut out = Spinor::zero();
        for (i, e) in eta.iter().enumerate() {
            let mut d = self.rep.act(&MultiVector::vector(&s.column(i)), &self.phi.coords)?;
            if let Some(jp) = &self.j_phi {
                d = &d + &jp.scale(e);
            }
            out = &out + &self.rep.act(&MultiVector::e(n, i as u8 + 1), &d)?;
        }
        Ok(out)
    }

    /// Skew endomorphism `V ⌟ ψ_φ` as a matrix.
    pub fn vector_psi_endo(&self, v: &[Scalar]) -> Result<Matrix, GStructError> {
        self.check_len(v)?;
        Ok(self.psi.interior(&MultiVector::vector(v))?.to_skew_matrix()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn structure(n: usize) -> GStructure {
        GStructure::new(UnitSpinor::basis(n, 5).unwrap()).unwrap()
    }

    #[test]
    fn unit_spinor_validation() {
        assert_eq!(UnitSpinor::new(6, Spinor::zero()), Err(GStructError::ZeroSpinor));
        let two = Spinor::basis(1).scale(&Scalar::from_int(2));
        assert!(matches!(UnitSpinor::new(6, two.clone()), Err(GStructError::NotUnit(_))));
        assert_eq!(UnitSpinor::normalized(6, two).unwrap(), UnitSpinor::basis(6, 1).unwrap());
    }

    #[test]
    fn decomposition_of_phi_and_j_phi() {
        let g = structure(6);
        let p = g.decompose_spinor(&Spinor::basis(5));
        assert_eq!((p.a, p.b), (Scalar::one(), Some(Scalar::zero())));
        assert!(is_zero_vector(&p.x));
        let q = g.decompose_spinor(&Spinor::basis(6));
        assert_eq!((q.a, q.b), (Scalar::zero(), Some(Scalar::one())));
    }

    #[test]
    fn stabilizer_dimensions() {
        assert_eq!(structure(6).annihilator().dim(), 8);
        assert_eq!(structure(7).annihilator().dim(), 14);
        assert!(structure(6).m_action_is_complement().unwrap());
        assert!(structure(7).m_action_is_complement().unwrap());
    }

    #[test]
    fn j_squares_to_minus_one() {
        let j = structure(6).almost_complex_j().unwrap();
        assert_eq!(&j * &j, Matrix::identity(6).scale(&Scalar::from_int(-1)));
        assert!(j.is_skew());
        assert!(structure(7).almost_complex_j().is_err());
    }

    #[test]
    fn psi_has_expected_support() {
        assert_eq!(structure(7).psi().terms().count(), 7);
        assert_eq!(structure(6).psi().norm2(), Scalar::from_int(4));
    }

    #[test]
    fn nonzero_eta_rejected() {
        let g = structure(6);
        let mut eta = vec![Scalar::zero(); 6];
        eta[0] = Scalar::one();
        assert_eq!(g.torsion_from_s(&Matrix::zeros(6, 6), Some(&eta)), Err(GStructError::NonzeroEta));
    }

    #[test]
    fn dirac_of_identity_in_seven_dimensions() {
        let g = structure(7);
        let d = g.dirac_pointwise(&Matrix::identity(7), &vec![Scalar::zero(); 7]).unwrap();
        assert_eq!(d, Spinor::basis(5).scale(&Scalar::from_int(-7)));
    }
}
