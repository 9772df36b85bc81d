use std::collections::BTreeSet;
use std::fmt;

use crate::clifford::MultiVector;
use crate::exactla::{dot, is_zero_vector, Matrix, Subspace};
use crate::scalar::{rat, Rational, Scalar, ScalarError, Substitution};

use super::{GStructError, GStructure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SU3Class {
    W1Plus,
    W1Minus,
    W2Plus,
    W2Minus,
    W3,
    W4,
    W5,
}

impl SU3Class {
    pub fn label(self) -> &'static str {
        match self {
            SU3Class::W1Plus => "W1+",
            SU3Class::W1Minus => "W1-",
            SU3Class::W2Plus => "W2+",
            SU3Class::W2Minus => "W2-",
            SU3Class::W3 => "W3",
            SU3Class::W4 => "W4",
            SU3Class::W5 => "W5",
        }
    }
}

impl fmt::Display for SU3Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum G2Class {
    W1,
    W2,
    W3,
    W4,
}

impl G2Class {
    pub fn label(self) -> &'static str {
        match self {
            G2Class::W1 => "W1",
            G2Class::W2 => "W2",
            G2Class::W3 => "W3",
            G2Class::W4 => "W4",
        }
    }
}

impl fmt::Display for G2Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

fn matrix_vanishes_at(m: &Matrix, sub: Substitution, t0: &Rational) -> Result<bool, ScalarError> {
    for x in m.entries() {
        if !x.vanishes_at(sub, t0)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Splits a square matrix into symmetric and skew halves.
fn sym_skew(s: &Matrix) -> (Matrix, Matrix) {
    let half = Scalar::from_rational(rat(1, 2));
    let t = s.transpose();
    ((s + &t).scale(&half), (s - &t).scale(&half))
}

/// Projects a skew matrix onto a subspace of Λ² and returns the projected matrix.
fn project_skew(a: &Matrix, sub: &Subspace) -> Result<Matrix, GStructError> {
    let n = a.rows();
    let coords = MultiVector::from_skew_matrix(a)?.pair_coords()?;
    let p = sub.project(&coords)?;
    Ok(MultiVector::from_pair_coords(n, &p).to_skew_matrix()?)
}

/// SU(3) Gray-Hervella components of `(S, η)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SU3ClassReport {
    pub lambda_w1_plus: Scalar,
    pub mu_w1_minus: Scalar,
    pub w1_plus: Matrix,
    pub w1_minus: Matrix,
    pub w2_plus: Matrix,
    pub w2_minus: Matrix,
    pub w3: Matrix,
    pub w4: Matrix,
    pub w5: Vec<Scalar>,
}

impl SU3ClassReport {
    pub fn components(&self) -> [(SU3Class, &Matrix); 6] {
        [
            (SU3Class::W1Plus, &self.w1_plus),
            (SU3Class::W1Minus, &self.w1_minus),
            (SU3Class::W2Plus, &self.w2_plus),
            (SU3Class::W2Minus, &self.w2_minus),
            (SU3Class::W3, &self.w3),
            (SU3Class::W4, &self.w4),
        ]
    }

    /// Classes with a nonzero component as functions of the parameter.
    pub fn flags(&self) -> BTreeSet<SU3Class> {
        let mut out: BTreeSet<_> = self.components().into_iter().filter(|(_, m)| !m.is_zero()).map(|(c, _)| c).collect();
        if !is_zero_vector(&self.w5) {
            out.insert(SU3Class::W5);
        }
        out
    }

    /// Classes with a nonzero component at `t = t0`.
    pub fn flags_at(&self, sub: Substitution, t0: &Rational) -> Result<BTreeSet<SU3Class>, ScalarError> {
        let mut out = BTreeSet::new();
        for (c, m) in self.components() {
            if !matrix_vanishes_at(m, sub, t0)? {
                out.insert(c);
            }
        }
        for x in &self.w5 {
            if !x.vanishes_at(sub, t0)? {
                out.insert(SU3Class::W5);
            }
        }
        Ok(out)
    }

    /// Sum of the endomorphism components, which must equal the input `S`.
    pub fn recombine(&self) -> Matrix {
        self.components().into_iter().fold(Matrix::zeros(6, 6), |acc, (_, m)| &acc + m)
    }
}

/// G2 Gray-Hervella components of `S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct G2ClassReport {
    pub lambda_w1: Scalar,
    pub w1: Matrix,
    pub w2: Matrix,
    pub w3: Matrix,
    pub w4: Matrix,
    /// The vector `V` with `W4 = V ⌟ ψ_φ`.
    pub w4_vector: Vec<Scalar>,
}

impl G2ClassReport {
    pub fn components(&self) -> [(G2Class, &Matrix); 4] {
        [(G2Class::W1, &self.w1), (G2Class::W2, &self.w2), (G2Class::W3, &self.w3), (G2Class::W4, &self.w4)]
    }

    pub fn flags(&self) -> BTreeSet<G2Class> {
        self.components().into_iter().filter(|(_, m)| !m.is_zero()).map(|(c, _)| c).collect()
    }

    pub fn flags_at(&self, sub: Substitution, t0: &Rational) -> Result<BTreeSet<G2Class>, ScalarError> {
        let mut out = BTreeSet::new();
        for (c, m) in self.components() {
            if !matrix_vanishes_at(m, sub, t0)? {
                out.insert(c);
            }
        }
        Ok(out)
    }

    pub fn recombine(&self) -> Matrix {
        self.components().into_iter().fold(Matrix::zeros(7, 7), |acc, (_, m)| &acc + m)
    }
}

impl GStructure {
    /// Splits `S` into the SU(3) classes: the symmetric part into trace
    /// (W1-), `J`-commuting (W2-) and `J`-anticommuting (W3) pieces; the skew
    /// part into the stabilizer (W2+), the `J` line (W1+) and the rest (W4).
    pub fn classify_su3(&self, s: &Matrix, eta: &[Scalar]) -> Result<SU3ClassReport, GStructError> {
        if self.n() != 6 {
            return Err(GStructError::WrongDimension("classify_su3", 6));
        }
        self.check_square(s)?;
        self.check_len(eta)?;
        let half = Scalar::from_rational(rat(1, 2));
        let j = self.almost_complex_j()?;
        let (sym, skew) = sym_skew(s);

        let mu = &sym.trace() / &Scalar::from_int(6);
        let w1_minus = Matrix::identity(6).scale(&mu);
        let s0 = &sym - &w1_minus;
        let js0j = &(&j * &s0) * &j;
        let w2_minus = (&s0 - &js0j).scale(&half);
        let w3 = (&s0 + &js0j).scale(&half);

        let w2_plus = project_skew(&skew, self.annihilator())?;
        let rest = &skew - &w2_plus;
        let jc = MultiVector::from_skew_matrix(&j)?.pair_coords()?;
        let rc = MultiVector::from_skew_matrix(&rest)?.pair_coords()?;
        let lambda = &dot(&rc, &jc) / &dot(&jc, &jc);
        let w1_plus = j.scale(&lambda);
        let w4 = &rest - &w1_plus;

        Ok(SU3ClassReport {
            lambda_w1_plus: lambda,
            mu_w1_minus: mu,
            w1_plus,
            w1_minus,
            w2_plus,
            w2_minus,
            w3,
            w4,
            w5: eta.to_vec(),
        })
    }

    /// Splits `S` into the G2 classes; the skew part off the stabilizer is
    /// solved as `V ⌟ ψ_φ`.
    pub fn classify_g2(&self, s: &Matrix) -> Result<G2ClassReport, GStructError> {
        if self.n() != 7 {
            return Err(GStructError::WrongDimension("classify_g2", 7));
        }
        self.check_square(s)?;
        let (sym, skew) = sym_skew(s);
        let lambda = &sym.trace() / &Scalar::from_int(7);
        let w1 = Matrix::identity(7).scale(&lambda);
        let w3 = &sym - &w1;
        let w2 = project_skew(&skew, self.annihilator())?;
        let rest = &skew - &w2;

        let columns: Vec<Vec<Scalar>> = (0..7)
            .map(|k| {
                let mut e = vec![Scalar::zero(); 7];
                e[k] = Scalar::one();
                let m = self.vector_psi_endo(&e)?;
                Ok(MultiVector::from_skew_matrix(&m)?.pair_coords()?)
            })
            .collect::<Result<_, GStructError>>()?;
        let map = Matrix::from_columns(21, &columns)?;
        let target = MultiVector::from_skew_matrix(&rest)?.pair_coords()?;
        let v = map.solve(&target)?.ok_or_else(|| {
            GStructError::BrokenRepresentation("skew part off g2 is not of the form V ⌟ ψ".into())
        })?;
        let w4 = self.vector_psi_endo(&v)?;
        Ok(G2ClassReport { lambda_w1: lambda, w1, w2, w3, w4, w4_vector: v })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gstruct::UnitSpinor;

    fn structure(n: usize) -> GStructure {
        GStructure::new(UnitSpinor::basis(n, 5).unwrap()).unwrap()
    }

    #[test]
    fn pure_classes_su3() {
        let g = structure(6);
        let zero_eta = vec![Scalar::zero(); 6];
        let j = g.almost_complex_j().unwrap();
        let r = g.classify_su3(&j, &zero_eta).unwrap();
        assert_eq!(r.flags(), BTreeSet::from([SU3Class::W1Plus]));
        assert_eq!(r.lambda_w1_plus, Scalar::one());
        let r = g.classify_su3(&Matrix::identity(6), &zero_eta).unwrap();
        assert_eq!(r.flags(), BTreeSet::from([SU3Class::W1Minus]));
        let mut eta = zero_eta.clone();
        eta[3] = Scalar::one();
        let r = g.classify_su3(&Matrix::zeros(6, 6), &eta).unwrap();
        assert_eq!(r.flags(), BTreeSet::from([SU3Class::W5]));
    }

    #[test]
    fn j_form_is_orthogonal_to_stabilizer() {
        let g = structure(6);
        let jc = MultiVector::from_skew_matrix(&g.almost_complex_j().unwrap()).unwrap().pair_coords().unwrap();
        assert!(is_zero_vector(&g.annihilator().project(&jc).unwrap()));
    }

    #[test]
    fn pure_classes_g2() {
        let g = structure(7);
        let r = g.classify_g2(&Matrix::identity(7).scale(&Scalar::from_int(3))).unwrap();
        assert_eq!(r.flags(), BTreeSet::from([G2Class::W1]));
        assert_eq!(r.lambda_w1, Scalar::from_int(3));
        let v: Vec<Scalar> = (1..=7).map(Scalar::from_int).collect();
        let r = g.classify_g2(&g.vector_psi_endo(&v).unwrap()).unwrap();
        assert_eq!(r.flags(), BTreeSet::from([G2Class::W4]));
        assert_eq!(r.w4_vector, v);
    }
}
