use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::exactla::Matrix;
use crate::scalar::Scalar;

use super::CliffordError;

/// Strictly increasing list of 1-based indices naming `e_{i1} ∧ ... ∧ e_{ik}`.
///
/// Ordered by grade first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Blade(Vec<u8>);

impl Blade {
    pub fn scalar() -> Self {
        Self(Vec::new())
    }

    /// Sorts `indices` and returns the blade with the sign of the sorting
    /// permutation, or `None` if an index repeats.
    pub fn from_unsorted(indices: &[u8]) -> Option<(Self, i8)> {
        let mut v = indices.to_vec();
        let mut sign = 1i8;
        // Bubble sort keeps the sign bookkeeping obvious; grades are at most 7.
        for i in 0..v.len() {
            for j in 0..v.len() - 1 - i {
                match v[j].cmp(&v[j + 1]) {
                    Ordering::Greater => {
                        v.swap(j, j + 1);
                        sign = -sign;
                    }
                    Ordering::Equal => return None,
                    Ordering::Less => {}
                }
            }
        }
        if v.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some((Self(v), sign))
    }

    pub fn indices(&self) -> &[u8] {
        &self.0
    }

    pub fn grade(&self) -> usize {
        self.0.len()
    }

    pub fn label(&self) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        let digits: String = self.0.iter().map(|i| i.to_string()).collect();
        format!("e{digits}")
    }
}

impl Ord for Blade {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Blade {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Element of the exterior (equivalently, Clifford) algebra on `R^n`,
/// with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiVector {
    n: usize,
    terms: BTreeMap<Blade, Scalar>,
}

/// The pairs `(i, j)`, `1 <= i < j <= n`, in lexicographic order.
pub fn pairs(n: usize) -> Vec<(u8, u8)> {
    let n = n as u8;
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// The triples `i < j < k` in lexicographic order.
pub fn triples(n: usize) -> Vec<(u8, u8, u8)> {
    let n = n as u8;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                out.push((i, j, k));
            }
        }
    }
    out
}

impl MultiVector {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn scalar(n: usize, s: Scalar) -> Self {
        let mut m = Self::zero(n);
        m.add_term(Blade::scalar(), s);
        m
    }

    /// `±e_{i1}...e_{ik}` for arbitrary distinct 1-based indices.
    pub fn blade(n: usize, indices: &[u8], coeff: Scalar) -> Result<Self, CliffordError> {
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i as usize > n) {
            return Err(CliffordError::IndexOutOfRange { index: bad as usize, n });
        }
        let mut m = Self::zero(n);
        if let Some((b, sign)) = Blade::from_unsorted(indices) {
            m.add_term(b, if sign < 0 { -coeff } else { coeff });
        }
        Ok(m)
    }

    pub fn e(n: usize, i: u8) -> Self {
        Self::blade(n, &[i], Scalar::one()).expect("index within range")
    }

    /// `e_i ∧ e_j`.
    pub fn e2(n: usize, i: u8, j: u8) -> Self {
        Self::blade(n, &[i, j], Scalar::one()).expect("index within range")
    }

    /// Grade-1 element with the given coordinates.
    pub fn vector(coords: &[Scalar]) -> Self {
        let n = coords.len();
        let mut m = Self::zero(n);
        for (i, c) in coords.iter().enumerate() {
            m.add_term(Blade(vec![i as u8 + 1]), c.clone());
        }
        m
    }

    /// Grade-2 element from coefficients over [`pairs`].
    pub fn from_pair_coords(n: usize, coords: &[Scalar]) -> Self {
        assert_eq!(coords.len(), n * (n - 1) / 2, "pair coordinate length");
        let mut m = Self::zero(n);
        for (c, (i, j)) in coords.iter().zip(pairs(n)) {
            m.add_term(Blade(vec![i, j]), c.clone());
        }
        m
    }

    /// 2-form `Σ_{i<j} ω_ij e_ij` from a skew matrix with `A_ji = ω_ij`.
    pub fn from_skew_matrix(a: &Matrix) -> Result<Self, CliffordError> {
        if !a.is_skew() {
            return Err(CliffordError::NotSkew);
        }
        let n = a.rows();
        let coords: Vec<Scalar> =
            pairs(n).into_iter().map(|(i, j)| a[(j as usize - 1, i as usize - 1)].clone()).collect();
        Ok(Self::from_pair_coords(n, &coords))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, indices: &[u8]) -> Scalar {
        match Blade::from_unsorted(indices) {
            Some((b, sign)) => {
                let c = self.terms.get(&b).cloned().unwrap_or_default();
                if sign < 0 {
                    -c
                } else {
                    c
                }
            }
            None => Scalar::zero(),
        }
    }

    pub fn add_term(&mut self, blade: Blade, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&blade) {
            Some(c) => {
                *c += &coeff;
                if c.is_zero() {
                    self.terms.remove(&blade);
                }
            }
            None => {
                self.terms.insert(blade, coeff);
            }
        }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero(self.n);
        for (b, c) in &self.terms {
            out.add_term(b.clone(), c * s);
        }
        out
    }

    /// Part of exact grade `k`.
    pub fn grade(&self, k: usize) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().filter(|(b, _)| b.grade() == k).map(|(b, c)| (b.clone(), c.clone())).collect(),
        }
    }

    pub fn is_pure_grade(&self, k: usize) -> bool {
        self.terms.keys().all(|b| b.grade() == k)
    }

    fn require_grade(&self, k: usize) -> Result<(), CliffordError> {
        match self.terms.keys().find(|b| b.grade() != k) {
            Some(b) => Err(CliffordError::WrongGrade { expected: k, found: b.grade() }),
            None => Ok(()),
        }
    }

    /// Coordinates of a grade-1 element.
    pub fn vector_coords(&self) -> Result<Vec<Scalar>, CliffordError> {
        self.require_grade(1)?;
        Ok((1..=self.n as u8).map(|i| self.coeff(&[i])).collect())
    }

    /// Coordinates of a grade-2 element over [`pairs`].
    pub fn pair_coords(&self) -> Result<Vec<Scalar>, CliffordError> {
        self.require_grade(2)?;
        Ok(pairs(self.n).into_iter().map(|(i, j)| self.coeff(&[i, j])).collect())
    }

    /// Skew matrix of a 2-form: `A_ji = ω_ij`, so that `A v = v ⌟ ω`.
    pub fn to_skew_matrix(&self) -> Result<Matrix, CliffordError> {
        self.require_grade(2)?;
        let mut a = Matrix::zeros(self.n, self.n);
        for (b, c) in &self.terms {
            let (i, j) = (b.0[0] as usize - 1, b.0[1] as usize - 1);
            a[(j, i)] = c.clone();
            a[(i, j)] = -c;
        }
        Ok(a)
    }

    fn same_n(&self, other: &Self) -> Result<(), CliffordError> {
        if self.n != other.n {
            return Err(CliffordError::DimensionMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    pub fn wedge(&self, other: &Self) -> Result<Self, CliffordError> {
        self.same_n(other)?;
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let joined: Vec<u8> = a.0.iter().chain(&b.0).copied().collect();
                if let Some((blade, sign)) = Blade::from_unsorted(&joined) {
                    let c = ca * cb;
                    out.add_term(blade, if sign < 0 { -c } else { c });
                }
            }
        }
        Ok(out)
    }

    /// Left contraction `X ⌟ self` by a grade-1 element.
    pub fn interior(&self, x: &Self) -> Result<Self, CliffordError> {
        self.same_n(x)?;
        x.require_grade(1)?;
        let mut out = Self::zero(self.n);
        for (xb, xc) in &x.terms {
            let i = xb.0[0];
            for (b, c) in &self.terms {
                if let Some(pos) = b.0.iter().position(|&k| k == i) {
                    let mut rest = b.0.clone();
                    rest.remove(pos);
                    let v = xc * c;
                    out.add_term(Blade(rest), if pos % 2 == 1 { -v } else { v });
                }
            }
        }
        Ok(out)
    }

    /// `[ω, τ] = Σ_i (e_i ⌟ ω) ∧ (e_i ⌟ τ)` for 2-forms.
    pub fn bracket(&self, other: &Self) -> Result<Self, CliffordError> {
        self.same_n(other)?;
        self.require_grade(2)?;
        other.require_grade(2)?;
        let mut out = Self::zero(self.n);
        for i in 1..=self.n as u8 {
            let e = Self::e(self.n, i);
            out = &out + &self.interior(&e)?.wedge(&other.interior(&e)?)?;
        }
        Ok(out)
    }

    /// Sum of squared coefficients.
    pub fn norm2(&self) -> Scalar {
        self.terms.values().map(|c| c * c).sum()
    }
}

impl Add for &MultiVector {
    type Output = MultiVector;
    fn add(self, rhs: &MultiVector) -> MultiVector {
        assert_eq!(self.n, rhs.n, "multivector dimension mismatch");
        let mut out = self.clone();
        for (b, c) in &rhs.terms {
            out.add_term(b.clone(), c.clone());
        }
        out
    }
}

impl Sub for &MultiVector {
    type Output = MultiVector;
    fn sub(self, rhs: &MultiVector) -> MultiVector {
        self + &(-rhs)
    }
}

impl Neg for &MultiVector {
    type Output = MultiVector;
    fn neg(self) -> MultiVector {
        self.scale(&Scalar::from_int(-1))
    }
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("({c})*{}", b.label())).collect();
        f.write_str(&parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blade_sorting_sign() {
        assert_eq!(Blade::from_unsorted(&[2, 1]), Some((Blade(vec![1, 2]), -1)));
        assert_eq!(Blade::from_unsorted(&[3, 1, 2]), Some((Blade(vec![1, 2, 3]), 1)));
        assert_eq!(Blade::from_unsorted(&[1, 1]), None);
        assert!(Blade(vec![7]) < Blade(vec![1, 2]));
    }

    #[test]
    fn wedge_and_interior_rules() {
        let n = 6;
        assert!(MultiVector::e(n, 1).wedge(&MultiVector::e2(n, 1, 2)).unwrap().is_zero());
        assert_eq!(MultiVector::e2(n, 1, 2).interior(&MultiVector::e(n, 1)).unwrap(), MultiVector::e(n, 2));
        assert_eq!(MultiVector::e2(n, 1, 2).interior(&MultiVector::e(n, 2)).unwrap(), -&MultiVector::e(n, 1));
        assert!(MultiVector::e2(n, 1, 2).interior(&MultiVector::e(n, 3)).unwrap().is_zero());
    }

    #[test]
    fn brackets() {
        let n = 6;
        let b = MultiVector::e2(n, 1, 2).bracket(&MultiVector::e2(n, 1, 3)).unwrap();
        assert_eq!(b, MultiVector::e2(n, 2, 3));
        assert!(MultiVector::e2(n, 1, 2).bracket(&MultiVector::e2(n, 3, 4)).unwrap().is_zero());
        assert!(MultiVector::e(n, 1).bracket(&MultiVector::e2(n, 3, 4)).is_err());
    }

    #[test]
    fn skew_matrix_round_trip() {
        let w = &MultiVector::e2(4, 1, 2) + &MultiVector::e2(4, 3, 4).scale(&Scalar::from_int(3));
        let a = w.to_skew_matrix().unwrap();
        // A e1 = e1 ⌟ ω = e2
        assert_eq!(a.column(0), MultiVector::e(4, 2).vector_coords().unwrap());
        assert_eq!(MultiVector::from_skew_matrix(&a).unwrap(), w);
    }
}
