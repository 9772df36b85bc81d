//! Real spin representations of Spin(6) and Spin(7) on the 8-dimensional
//! module Δ, Clifford action of multivectors, the spin lift of so(n) and the
//! `c_T`/`σ_T` constructions.

mod frame;
mod multivector;
mod spinor;

pub use frame::{c_sigma, CSigma, FrameTensor};
pub use multivector::{pairs, triples, Blade, MultiVector};
pub use spinor::Spinor;

use crate::exactla::Matrix;
use crate::scalar::{rat, Scalar};

/// Dimension of the spinor module for n = 6, 7.
pub const SPINOR_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CliffordError {
    #[error("unsupported dimension n = {0} (only 6 and 7)")]
    UnsupportedDimension(usize),
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not skew-symmetric")]
    NotSkew,
    #[error("expected a pure grade-{expected} element, found a grade-{found} term")]
    WrongGrade { expected: usize, found: usize },
}

/// `E_ij` terms of each generator: `(sign, i, j)` with 1-based spinor indices.
pub const GENERATORS: [[(i8, u8, u8); 4]; 7] = [
    [(1, 1, 8), (1, 2, 7), (-1, 3, 6), (-1, 4, 5)],
    [(-1, 1, 7), (1, 2, 8), (1, 3, 5), (-1, 4, 6)],
    [(-1, 1, 6), (1, 2, 5), (-1, 3, 8), (1, 4, 7)],
    [(-1, 1, 5), (-1, 2, 6), (-1, 3, 7), (-1, 4, 8)],
    [(-1, 1, 3), (-1, 2, 4), (1, 5, 7), (1, 6, 8)],
    [(1, 1, 4), (-1, 2, 3), (-1, 5, 8), (1, 6, 7)],
    [(1, 1, 2), (-1, 3, 4), (-1, 5, 6), (1, 7, 8)],
];

/// Signed permutation `e_j -> sign[j] * e_{target[j]}`, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct SignedPerm {
    target: [u8; SPINOR_DIM],
    sign: [i8; SPINOR_DIM],
}

impl SignedPerm {
    const IDENTITY: Self = Self { target: [0, 1, 2, 3, 4, 5, 6, 7], sign: [1; SPINOR_DIM] };

    /// `self ∘ rhs`.
    fn compose(&self, rhs: &Self) -> Self {
        let mut out = Self::IDENTITY;
        for j in 0..SPINOR_DIM {
            let mid = rhs.target[j] as usize;
            out.target[j] = self.target[mid];
            out.sign[j] = self.sign[mid] * rhs.sign[j];
        }
        out
    }

    fn add_to(&self, m: &mut Matrix, coeff: &Scalar) {
        for j in 0..SPINOR_DIM {
            let i = self.target[j] as usize;
            if self.sign[j] > 0 {
                m[(i, j)] += coeff;
            } else {
                m[(i, j)] -= coeff;
            }
        }
    }
}

/// The representation `e_1, ..., e_n` on Δ = R^8, spinor basis `s_1..s_8`.
#[derive(Clone, Debug)]
pub struct SpinRep {
    n: usize,
    perms: Vec<SignedPerm>,
}

impl SpinRep {
    pub fn build(n: usize) -> Result<Self, CliffordError> {
        if n != 6 && n != 7 {
            return Err(CliffordError::UnsupportedDimension(n));
        }
        let perms = GENERATORS[..n]
            .iter()
            .map(|terms| {
                let mut p = SignedPerm { target: [0; SPINOR_DIM], sign: [0; SPINOR_DIM] };
                for &(s, i, j) in terms {
                    let (i, j) = (i as usize - 1, j as usize - 1);
                    // E_ij: entry (i, j) = -1 and (j, i) = +1.
                    p.target[j] = i as u8;
                    p.sign[j] = -s;
                    p.target[i] = j as u8;
                    p.sign[i] = s;
                }
                p
            })
            .collect();
        Ok(Self { n, perms })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Matrix of `e_i`, 1-based.
    pub fn generator(&self, i: usize) -> Matrix {
        let mut m = Matrix::zeros(SPINOR_DIM, SPINOR_DIM);
        self.perms[i - 1].add_to(&mut m, &Scalar::one());
        m
    }

    pub fn generators(&self) -> Vec<Matrix> {
        (1..=self.n).map(|i| self.generator(i)).collect()
    }

    fn blade_perm(&self, blade: &Blade) -> SignedPerm {
        blade
            .indices()
            .iter()
            .fold(SignedPerm::IDENTITY, |acc, &i| acc.compose(&self.perms[i as usize - 1]))
    }

    fn check_n(&self, m: &MultiVector) -> Result<(), CliffordError> {
        if m.n() != self.n {
            return Err(CliffordError::DimensionMismatch { expected: self.n, found: m.n() });
        }
        Ok(())
    }

    /// Endomorphism of Δ given by Clifford multiplication with `m`; each blade
    /// acts as the ordered product of its generators.
    pub fn endo(&self, m: &MultiVector) -> Result<Matrix, CliffordError> {
        self.check_n(m)?;
        let mut out = Matrix::zeros(SPINOR_DIM, SPINOR_DIM);
        for (b, c) in m.terms() {
            self.blade_perm(b).add_to(&mut out, c);
        }
        Ok(out)
    }

    pub fn act(&self, m: &MultiVector, psi: &Spinor) -> Result<Spinor, CliffordError> {
        self.check_n(m)?;
        let mut out = Spinor::zero();
        for (b, c) in m.terms() {
            let p = self.blade_perm(b);
            for j in 0..SPINOR_DIM {
                let v = &psi[j];
                if v.is_zero() {
                    continue;
                }
                let term = c * v;
                let i = p.target[j] as usize;
                if p.sign[j] > 0 {
                    out[i] += &term;
                } else {
                    out[i] -= &term;
                }
            }
        }
        Ok(out)
    }

    /// `j = e_1 e_2 ... e_6`, defined for n = 6 only.
    pub fn volume_element(&self) -> Result<MultiVector, CliffordError> {
        if self.n != 6 {
            return Err(CliffordError::UnsupportedDimension(self.n));
        }
        MultiVector::blade(6, &[1, 2, 3, 4, 5, 6], Scalar::one())
    }

    /// `½ Σ_{i<j} A_ji e_i e_j` for a skew `A`.
    pub fn spin_lift(&self, a: &Matrix) -> Result<Matrix, CliffordError> {
        self.spin_lift_scaled(a, &Scalar::from_rational(rat(1, 2)))
    }

    /// Spin lift with an arbitrary factor in place of ½.
    pub fn spin_lift_scaled(&self, a: &Matrix, factor: &Scalar) -> Result<Matrix, CliffordError> {
        if a.rows() != self.n || a.cols() != self.n {
            return Err(CliffordError::DimensionMismatch { expected: self.n, found: a.rows() });
        }
        let omega = MultiVector::from_skew_matrix(a)?;
        Ok(self.endo(&omega)?.scale(factor))
    }
}
