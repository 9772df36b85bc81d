use std::fmt;
use std::ops::{Add, Index, IndexMut, Neg, Sub};

use crate::exactla::{dot, Matrix};
use crate::scalar::Scalar;

use super::SPINOR_DIM;

/// Coordinates over `s_1..s_8`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spinor(Vec<Scalar>);

impl Spinor {
    pub fn zero() -> Self {
        Self(vec![Scalar::zero(); SPINOR_DIM])
    }

    /// `s_k`, 1-based.
    pub fn basis(k: usize) -> Self {
        let mut s = Self::zero();
        s.0[k - 1] = Scalar::one();
        s
    }

    /// Panics unless `coords` has length 8.
    pub fn from_coords(coords: Vec<Scalar>) -> Self {
        assert_eq!(coords.len(), SPINOR_DIM, "spinor length");
        Self(coords)
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Scalar> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Scalar::is_zero)
    }

    pub fn dot(&self, other: &Self) -> Scalar {
        dot(&self.0, &other.0)
    }

    pub fn norm2(&self) -> Scalar {
        self.dot(self)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self(self.0.iter().map(|x| x * c).collect())
    }

    pub fn apply(m: &Matrix, psi: &Self) -> Self {
        Self(m.mul_vec(&psi.0))
    }
}

impl Index<usize> for Spinor {
    type Output = Scalar;
    fn index(&self, i: usize) -> &Scalar {
        &self.0[i]
    }
}

impl IndexMut<usize> for Spinor {
    fn index_mut(&mut self, i: usize) -> &mut Scalar {
        &mut self.0[i]
    }
}

impl Add for &Spinor {
    type Output = Spinor;
    fn add(self, rhs: &Spinor) -> Spinor {
        Spinor(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Spinor {
    type Output = Spinor;
    fn sub(self, rhs: &Spinor) -> Spinor {
        Spinor(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Spinor {
    type Output = Spinor;
    fn neg(self) -> Spinor {
        Spinor(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Spinor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", cells.join(", "))
    }
}
