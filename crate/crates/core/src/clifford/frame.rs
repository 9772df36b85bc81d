use crate::exactla::Matrix;
use crate::scalar::{rat, Scalar};

use super::{CliffordError, MultiVector, SpinRep, SPINOR_DIM};

/// A tensor in `T*M ⊗ so(TM)` given by its values `T_{e_1}, ..., T_{e_n}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameTensor {
    n: usize,
    slots: Vec<MultiVector>,
}

impl FrameTensor {
    pub fn new(slots: Vec<MultiVector>) -> Result<Self, CliffordError> {
        let n = slots.len();
        for s in &slots {
            if s.n() != n {
                return Err(CliffordError::DimensionMismatch { expected: n, found: s.n() });
            }
            if let Some((b, _)) = s.terms().find(|(b, _)| b.grade() != 2) {
                return Err(CliffordError::WrongGrade { expected: 2, found: b.grade() });
            }
        }
        Ok(Self { n, slots })
    }

    pub fn zero(n: usize) -> Self {
        Self { n, slots: vec![MultiVector::zero(n); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> &[MultiVector] {
        &self.slots
    }

    /// `|T|² = Σ_i Σ_{j<k} (T_i)_{jk}²`.
    pub fn norm2(&self) -> Scalar {
        self.slots.iter().map(MultiVector::norm2).sum()
    }
}

#[derive(Clone, Debug)]
pub struct CSigma {
    /// `c_T = ½ Σ_i T_i · T_i` as an endomorphism of Δ.
    pub c: Matrix,
    /// `σ_T = ½ Σ_i T_i ∧ T_i`.
    pub sigma: MultiVector,
    pub norm2: Scalar,
    /// The constant with `c_T = σ_T - κ|T|² Id`, when `|T| ≠ 0` and the
    /// difference is scalar.
    pub kappa: Option<Scalar>,
}

pub fn c_sigma(rep: &SpinRep, t: &FrameTensor) -> Result<CSigma, CliffordError> {
    let half = Scalar::from_rational(rat(1, 2));
    let mut c = Matrix::zeros(SPINOR_DIM, SPINOR_DIM);
    let mut sigma = MultiVector::zero(t.n);
    for slot in &t.slots {
        let e = rep.endo(slot)?;
        c = &c + &(&e * &e);
        sigma = &sigma + &slot.wedge(slot)?;
    }
    let c = c.scale(&half);
    let sigma = sigma.scale(&half);
    let norm2 = t.norm2();
    let diff = &rep.endo(&sigma)? - &c;
    let lambda = diff[(0, 0)].clone();
    let is_scalar = diff == Matrix::identity(SPINOR_DIM).scale(&lambda);
    let kappa = (is_scalar && !norm2.is_zero()).then(|| &lambda / &norm2);
    Ok(CSigma { c, sigma, norm2, kappa })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_slot_fixes_kappa() {
        let rep = SpinRep::build(6).unwrap();
        let mut slots = vec![MultiVector::zero(6); 6];
        slots[0] = MultiVector::e2(6, 1, 2);
        let cs = c_sigma(&rep, &FrameTensor::new(slots).unwrap()).unwrap();
        assert_eq!(cs.c, Matrix::identity(8).scale(&Scalar::from_rational(rat(-1, 2))));
        assert!(cs.sigma.is_zero());
        assert_eq!(cs.norm2, Scalar::one());
        assert_eq!(cs.kappa, Some(Scalar::from_rational(rat(1, 2))));
    }

    #[test]
    fn zero_tensor() {
        let rep = SpinRep::build(7).unwrap();
        let cs = c_sigma(&rep, &FrameTensor::zero(7)).unwrap();
        assert!(cs.c.is_zero() && cs.sigma.is_zero() && cs.norm2.is_zero());
        assert_eq!(cs.kappa, None);
    }

    #[test]
    fn rejects_non_two_forms() {
        let slots = vec![MultiVector::e(2, 1), MultiVector::zero(2)];
        assert!(FrameTensor::new(slots).is_err());
    }
}
