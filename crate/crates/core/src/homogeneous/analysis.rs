use crate::clifford::{c_sigma, CliffordError, FrameTensor, MultiVector, Spinor};
use crate::exactla::{axpy, zero_vector, Matrix};
use crate::gstruct::{G2ClassReport, GStructError, GStructure, SU3ClassReport, Torsion};
use crate::scalar::{rat, Rational, Scalar, ScalarError};

use super::zeroset::{common_zero_set, Conversion, ZeroSet};
use super::{HomogeneousModel, ModelError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomogeneousError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    GStruct(#[from] GStructError),
    #[error(transparent)]
    Clifford(#[from] CliffordError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("lifted Λ(X_{slot}) moves φ along φ itself (coefficient {value}); the lift convention is inconsistent")]
    PhiComponent { slot: usize, value: String },
    #[error("{0} needs n = {1}")]
    WrongDimension(&'static str, usize),
}

/// Normalization choices that the pipeline exposes for mutation testing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Conventions {
    /// Factor in the lift `so(n) -> spin(n)`; ½ is the correct value.
    pub lift_factor: Scalar,
}

impl Default for Conventions {
    fn default() -> Self {
        Self { lift_factor: Scalar::from_rational(rat(1, 2)) }
    }
}

/// Harmonicity residual with its zero set in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicityVerdict {
    /// Spinor coordinates (n = 6) or vector coordinates (n = 7).
    pub residual: Vec<Scalar>,
    pub zero_set: ZeroSet,
}

#[derive(Clone, Debug)]
pub struct LaplacianCheck {
    pub delta_phi: Spinor,
    pub c_xi_phi: Spinor,
    /// `Δφ + ½ c_ξ·φ`.
    pub residual: Spinor,
    /// `½ L·φ` computed directly from `L`.
    pub half_l_phi: Spinor,
    pub kappa: Option<Scalar>,
    pub zero_set: ZeroSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification {
    SU3(SU3ClassReport),
    G2(G2ClassReport),
}

impl Classification {
    pub fn flags(&self) -> Vec<String> {
        match self {
            Classification::SU3(r) => r.flags().iter().map(ToString::to_string).collect(),
            Classification::G2(r) => r.flags().iter().map(ToString::to_string).collect(),
        }
    }

    pub fn flags_at(&self, sub: crate::scalar::Substitution, t0: &Rational) -> Result<Vec<String>, ScalarError> {
        Ok(match self {
            Classification::SU3(r) => r.flags_at(sub, t0)?.iter().map(ToString::to_string).collect(),
            Classification::G2(r) => r.flags_at(sub, t0)?.iter().map(ToString::to_string).collect(),
        })
    }
}

/// A model together with its structure data and lifted Wang map.
#[derive(Clone, Debug)]
pub struct ModelAnalysis {
    model: HomogeneousModel,
    gs: GStructure,
    skews: Vec<Matrix>,
    lifts: Vec<Matrix>,
}

impl ModelAnalysis {
    pub fn new(model: HomogeneousModel) -> Result<Self, HomogeneousError> {
        Self::with_conventions(model, &Conventions::default())
    }

    pub fn with_conventions(model: HomogeneousModel, conv: &Conventions) -> Result<Self, HomogeneousError> {
        let gs = GStructure::new(model.phi0.clone())?;
        let skews = model.lambda.iter().map(MultiVector::to_skew_matrix).collect::<Result<Vec<_>, _>>()?;
        let lifts = skews
            .iter()
            .map(|a| gs.rep().spin_lift_scaled(a, &conv.lift_factor))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { model, gs, skews, lifts })
    }

    pub fn model(&self) -> &HomogeneousModel {
        &self.model
    }

    pub fn structure(&self) -> &GStructure {
        &self.gs
    }

    fn n(&self) -> usize {
        self.model.n
    }

    fn phi(&self) -> &Spinor {
        self.gs.phi().spinor()
    }

    /// Skew matrices `A_i` of `Λ(X_i)`.
    pub fn lambda_matrices(&self) -> &[Matrix] {
        &self.skews
    }

    /// `S` and `η` from `Λ̃(X_i)·φ = S(X_i)·φ + η(X_i) j·φ`; column `i` of `S` is `S(X_i)`.
    pub fn extract_s_eta(&self) -> Result<(Matrix, Vec<Scalar>), HomogeneousError> {
        let n = self.n();
        let mut cols = Vec::with_capacity(n);
        let mut eta = Vec::with_capacity(n);
        for (i, lift) in self.lifts.iter().enumerate() {
            let parts = self.gs.decompose_spinor(&Spinor::apply(lift, self.phi()));
            if !parts.a.is_zero() {
                return Err(HomogeneousError::PhiComponent { slot: i + 1, value: parts.a.to_string() });
            }
            cols.push(parts.x);
            eta.push(parts.b.unwrap_or_default());
        }
        Ok((Matrix::from_columns(n, &cols).expect("columns of length n"), eta))
    }

    /// Pair coordinates of the stabilizer components `Λ_g(X_i)`.
    pub fn stabilizer_parts(&self) -> Vec<Vec<Scalar>> {
        self.model
            .lambda
            .iter()
            .map(|w| {
                let c = w.pair_coords().expect("lambda slots are 2-forms");
                self.gs.annihilator().project(&c).expect("pair coordinate length")
            })
            .collect()
    }

    /// `ξ_{X_i}` as the `m`-projection of `Λ(X_i)`.
    pub fn torsion(&self) -> Result<Torsion, HomogeneousError> {
        let n = self.n();
        let slots = self
            .model
            .lambda
            .iter()
            .map(|w| {
                let c = w.pair_coords()?;
                let p = self.gs.complement_m().project(&c).map_err(GStructError::from)?;
                Ok(MultiVector::from_pair_coords(n, &p))
            })
            .collect::<Result<Vec<_>, HomogeneousError>>()?;
        Ok(FrameTensor::new(slots)?)
    }

    /// Parameters where `Λ_g ≡ 0`, i.e. the canonical connection is the minimal one.
    pub fn canonical_parameters(&self) -> Result<ZeroSet, HomogeneousError> {
        let entries: Vec<Scalar> = self.stabilizer_parts().into_iter().flatten().collect();
        Ok(common_zero_set(&entries, self.model.substitution, Conversion::ParityNormalized)?)
    }

    /// `div S = Σ_i [A_i, S](X_i)`.
    pub fn divergence_endo(&self, s: &Matrix) -> Vec<Scalar> {
        let mut out = zero_vector(self.n());
        for (i, a) in self.skews.iter().enumerate() {
            let col = a.commutator(s).column(i);
            axpy(&Scalar::one(), &col, &mut out);
        }
        out
    }

    /// `div V = Σ_i ⟨A_i V, X_i⟩` for an invariant vector field.
    pub fn divergence_vector(&self, v: &[Scalar]) -> Scalar {
        self.skews.iter().enumerate().map(|(i, a)| a.mul_vec(v)[i].clone()).sum()
    }

    /// `Σ_i A_i X_i`, which enters through `∇_{X_i} X_i`.
    pub fn lambda_trace_vector(&self) -> Vec<Scalar> {
        let mut out = zero_vector(self.n());
        for (i, a) in self.skews.iter().enumerate() {
            axpy(&Scalar::one(), &a.column(i), &mut out);
        }
        out
    }

    /// `ξ_V = Σ_i V_i ξ_{X_i}`.
    pub fn torsion_along(xi: &Torsion, v: &[Scalar]) -> MultiVector {
        xi.slots().iter().zip(v).fold(MultiVector::zero(xi.n()), |acc, (w, c)| &acc + &w.scale(c))
    }

    fn act(&self, m: &MultiVector, psi: &Spinor) -> Result<Spinor, HomogeneousError> {
        Ok(self.gs.rep().act(m, psi)?)
    }

    /// The SU(3) harmonicity spinor
    /// `−χ^S·φ − ½ξ_{η♯}·j·φ + (div S)·φ + div(η♯) j·φ + j·S(η♯)·φ − |η|²φ`.
    pub fn harmonicity_su3(&self) -> Result<HarmonicityVerdict, HomogeneousError> {
        if self.n() != 6 {
            return Err(HomogeneousError::WrongDimension("harmonicity_su3", 6));
        }
        let (s, eta) = self.extract_s_eta()?;
        let xi = self.torsion()?;
        let phi = self.phi().clone();
        let jphi = self.gs.j_phi().expect("n = 6").clone();
        let vol = self.gs.rep().volume_element()?;

        let chi = self.gs.chi_s(&xi, &s)?;
        let xi_eta = Self::torsion_along(&xi, &eta);
        let div_s = MultiVector::vector(&self.divergence_endo(&s));
        let div_eta = self.divergence_vector(&eta);
        let s_eta = MultiVector::vector(&s.mul_vec(&eta));
        let eta2: Scalar = eta.iter().map(|x| x * x).sum();

        let mut r = -&self.act(&chi, &phi)?;
        r = &r - &self.act(&xi_eta, &jphi)?.scale(&Scalar::from_rational(rat(1, 2)));
        r = &r + &self.act(&div_s, &phi)?;
        r = &r + &jphi.scale(&div_eta);
        r = &r + &self.act(&vol, &self.act(&s_eta, &phi)?)?;
        r = &r - &phi.scale(&eta2);

        let residual = r.into_coords();
        let zero_set = common_zero_set(&residual, self.model.substitution, Conversion::Strict)?;
        Ok(HarmonicityVerdict { residual, zero_set })
    }

    /// The G2 criterion: harmonic exactly where `div S = 0`.
    pub fn harmonicity_g2(&self) -> Result<HarmonicityVerdict, HomogeneousError> {
        if self.n() != 7 {
            return Err(HomogeneousError::WrongDimension("harmonicity_g2", 7));
        }
        let (s, _) = self.extract_s_eta()?;
        let residual = self.divergence_endo(&s);
        let zero_set = common_zero_set(&residual, self.model.substitution, Conversion::Strict)?;
        Ok(HarmonicityVerdict { residual, zero_set })
    }

    pub fn harmonicity(&self) -> Result<HarmonicityVerdict, HomogeneousError> {
        if self.n() == 6 {
            self.harmonicity_su3()
        } else {
            self.harmonicity_g2()
        }
    }

    /// `L = Σ_i [A_i, Ξ_i] − Ξ(Σ_i A_i X_i)` with `Ξ_i` the skew matrix of `ξ_{X_i}`.
    pub fn intrinsic_l(&self) -> Result<Matrix, HomogeneousError> {
        let xi = self.torsion()?;
        let xs = xi.slots().iter().map(MultiVector::to_skew_matrix).collect::<Result<Vec<_>, _>>()?;
        let mut l = Matrix::zeros(self.n(), self.n());
        for (a, x) in self.skews.iter().zip(&xs) {
            l = &l + &a.commutator(x);
        }
        let along = Self::torsion_along(&xi, &self.lambda_trace_vector()).to_skew_matrix()?;
        Ok(&l - &along)
    }

    /// Spinor Laplacian `Δφ = −Σ_i Λ̃_i Λ̃_i φ + Λ̃(Σ_i A_i X_i) φ` against `−½ c_ξ·φ`.
    pub fn laplacian_cross_check(&self) -> Result<LaplacianCheck, HomogeneousError> {
        let phi = self.phi();
        let mut delta = Spinor::zero();
        for lift in &self.lifts {
            delta = &delta - &Spinor::apply(lift, &Spinor::apply(lift, phi));
        }
        for (lift, c) in self.lifts.iter().zip(self.lambda_trace_vector()) {
            if !c.is_zero() {
                delta = &delta + &Spinor::apply(lift, phi).scale(&c);
            }
        }
        let xi = self.torsion()?;
        let cs = c_sigma(self.gs.rep(), &xi)?;
        let c_xi_phi = Spinor::apply(&cs.c, phi);
        let half = Scalar::from_rational(rat(1, 2));
        let residual = &delta + &c_xi_phi.scale(&half);
        let l_form = MultiVector::from_skew_matrix(&self.intrinsic_l()?)?;
        let half_l_phi = self.act(&l_form, phi)?.scale(&half);
        let zero_set =
            common_zero_set(residual.coords(), self.model.substitution, Conversion::ParityNormalized)?;
        Ok(LaplacianCheck { delta_phi: delta, c_xi_phi, residual, half_l_phi, kappa: cs.kappa, zero_set })
    }

    pub fn classify(&self) -> Result<Classification, HomogeneousError> {
        let (s, eta) = self.extract_s_eta()?;
        Ok(if self.n() == 6 {
            Classification::SU3(self.gs.classify_su3(&s, &eta)?)
        } else {
            Classification::G2(self.gs.classify_g2(&s)?)
        })
    }

    /// `ξ_{η♯}·φ` and `ξ_{η♯}·j·φ` (n = 6).
    pub fn xi_eta_actions(&self) -> Result<(Spinor, Spinor), HomogeneousError> {
        if self.n() != 6 {
            return Err(HomogeneousError::WrongDimension("xi_eta_actions", 6));
        }
        let (_, eta) = self.extract_s_eta()?;
        let xi_eta = Self::torsion_along(&self.torsion()?, &eta);
        let jphi = self.gs.j_phi().expect("n = 6").clone();
        Ok((self.act(&xi_eta, self.phi())?, self.act(&xi_eta, &jphi)?))
    }
}
