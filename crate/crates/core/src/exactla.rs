//! Dense linear algebra over Q(u): elimination, kernels, exact solving and
//! coordinate subspaces with their orthogonal complements and projections.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("rows have unequal lengths")]
    Ragged,
}

pub type Vector = Vec<Scalar>;

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn axpy(alpha: &Scalar, x: &[Scalar], y: &mut [Scalar]) {
    if alpha.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += alpha * xi;
        }
    }
}

/// Row-major rectangular matrix over Q(u).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self, LinAlgError> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(LinAlgError::Ragged);
        }
        let n = rows.len();
        Ok(Self { rows: n, cols, data: rows.into_iter().flatten().collect() })
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Result<Self, LinAlgError> {
        if let Some(bad) = columns.iter().find(|c| c.len() != rows) {
            return Err(LinAlgError::DimensionMismatch { expected: rows, found: bad.len() });
        }
        Ok(Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone()))
    }

    pub fn diagonal(entries: &[Scalar]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { Scalar::zero() })
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Self { rows, cols, data: entries.iter().map(|&x| Scalar::from_int(x)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..=i).all(|j| self[(i, j)] == -&self[(j, i)]))
    }

    pub fn trace(&self) -> Scalar {
        (0..self.rows.min(self.cols)).map(|i| &self[(i, i)]).sum()
    }

    /// Sum of squares of all entries.
    pub fn frobenius2(&self) -> Scalar {
        self.data.iter().map(|x| x * x).sum()
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn try_mul_vec(&self, v: &[Scalar]) -> Result<Vector, LinAlgError> {
        if self.cols != v.len() {
            return Err(LinAlgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    /// Panics on shape mismatch.
    pub fn mul_vec(&self, v: &[Scalar]) -> Vector {
        self.try_mul_vec(v).expect("matrix-vector shape mismatch")
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &(self * rhs) - &(rhs * self)
    }

    /// Reduced row-echelon form and pivot columns.
    ///
    /// Forward elimination is fraction-free (Bareiss): every update is a 2x2
    /// determinant divided exactly by the previous pivot. A final pass scales
    /// pivots to one and clears the entries above them.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut prev = Scalar::one();
        let mut r = 0;
        for c in 0..a.cols {
            if r == a.rows {
                break;
            }
            let Some(p) = pick_pivot(&a, r, c) else { continue };
            a.swap_rows(r, p);
            let piv = a[(r, c)].clone();
            for i in r + 1..a.rows {
                let lead = a[(i, c)].clone();
                for j in c + 1..a.cols {
                    let v = &(&piv * &a[(i, j)]) - &(&lead * &a[(r, j)]);
                    a[(i, j)] = &v / &prev;
                }
                a[(i, c)] = Scalar::zero();
            }
            // Rows above the pivot were never scaled, so they are left alone here.
            prev = piv;
            pivots.push(c);
            r += 1;
        }
        for (k, &c) in pivots.iter().enumerate().rev() {
            let inv = a[(k, c)].recip().expect("pivot is nonzero");
            for j in c..a.cols {
                a[(k, j)] = &a[(k, j)] * &inv;
            }
            for i in 0..k {
                let f = a[(i, c)].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..a.cols {
                    let v = &a[(k, j)] * &f;
                    a[(i, j)] -= &v;
                }
            }
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = zero_vector(self.cols);
            v[free] = Scalar::one();
            for (k, &pc) in pivots.iter().enumerate() {
                v[pc] = -&r[(k, free)];
            }
            basis.push(v);
        }
        Subspace::span(self.cols, basis).expect("kernel vectors have ambient length")
    }

    /// One exact solution of `A x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vector>, LinAlgError> {
        if b.len() != self.rows {
            return Err(LinAlgError::DimensionMismatch { expected: self.rows, found: b.len() });
        }
        let aug = Self::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = zero_vector(self.cols);
        for (k, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(k, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let aug = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self[(i, j)].clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(Self::from_fn(n, n, |i, j| r[(i, n + j)].clone()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Prefers constant pivots, then the lowest-degree nonzero entry.
fn pick_pivot(a: &Matrix, from: usize, c: usize) -> Option<usize> {
    (from..a.rows)
        .filter(|&i| !a[(i, c)].is_zero())
        .min_by_key(|&i| {
            let s = &a[(i, c)];
            s.num().degree().unwrap_or(0) + s.den().degree().unwrap_or(0)
        })
}

impl Index<(usize, usize)> for Matrix {
    type Output = Scalar;
    fn index(&self, (i, j): (usize, usize)) -> &Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Scalar {
        assert!(i < self.rows && j < self.cols, "matrix index out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.try_mul(rhs).expect("matrix shape mismatch")
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

/// Linear subspace of a coordinate space, stored as the nonzero rows of a
/// reduced row-echelon basis so that equality is syntactic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<Vector>,
}

impl Subspace {
    pub fn span(ambient_dim: usize, vectors: Vec<Vector>) -> Result<Self, LinAlgError> {
        if let Some(bad) = vectors.iter().find(|v| v.len() != ambient_dim) {
            return Err(LinAlgError::DimensionMismatch { expected: ambient_dim, found: bad.len() });
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient_dim));
        }
        let m = Matrix::from_rows(vectors)?;
        let (r, pivots) = m.rref();
        let basis = (0..pivots.len()).map(|k| r.row(k).to_vec()).collect();
        Ok(Self { ambient_dim, basis })
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Matrix::identity(ambient_dim).row_vectors() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vector] {
        &self.basis
    }

    fn basis_matrix(&self) -> Matrix {
        Matrix::from_rows(self.basis.clone()).unwrap_or_else(|_| Matrix::zeros(0, self.ambient_dim))
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        v.len() == self.ambient_dim && is_zero_vector(&self.residual(v))
    }

    /// Complement under the coefficient dot product.
    pub fn orthogonal_complement(&self) -> Self {
        if self.basis.is_empty() {
            return Self::full(self.ambient_dim);
        }
        self.basis_matrix().kernel()
    }

    /// Orthogonal projection onto the subspace.
    pub fn project(&self, x: &[Scalar]) -> Result<Vector, LinAlgError> {
        if x.len() != self.ambient_dim {
            return Err(LinAlgError::DimensionMismatch { expected: self.ambient_dim, found: x.len() });
        }
        if self.basis.is_empty() {
            return Ok(zero_vector(self.ambient_dim));
        }
        let b = self.basis_matrix();
        let gram = &b * &b.transpose();
        let rhs = b.mul_vec(x);
        let coeffs = gram
            .solve(&rhs)?
            .expect("Gram matrix of an independent basis is invertible");
        let mut out = zero_vector(self.ambient_dim);
        for (c, v) in coeffs.iter().zip(&self.basis) {
            axpy(c, v, &mut out);
        }
        Ok(out)
    }

    /// `x` minus its projection. Panics on length mismatch.
    pub fn residual(&self, x: &[Scalar]) -> Vector {
        let p = self.project(x).expect("vector length matches ambient dimension");
        x.iter().zip(&p).map(|(a, b)| a - b).collect()
    }
}

/// Equality of subspaces via their canonical echelon bases.
pub fn subspace_equal(u: &Subspace, v: &Subspace) -> bool {
    u == v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Polynomial;

    fn ints(v: &[i64]) -> Vector {
        v.iter().map(|&x| Scalar::from_int(x)).collect()
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = Matrix::zeros(3, 3).kernel();
        assert_eq!(k, Subspace::full(3));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = Matrix::from_i64(2, 4, &[1, 2, 3, 4, 2, 4, 7, 9]);
        let k = a.kernel();
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(is_zero_vector(&a.mul_vec(v)));
        }
    }

    #[test]
    fn solve_identity_and_inconsistent() {
        let b = ints(&[3, -1, 2]);
        assert_eq!(Matrix::identity(3).solve(&b).unwrap(), Some(b.clone()));
        let a = Matrix::from_i64(2, 2, &[1, 1, 0, 0]);
        assert_eq!(a.solve(&ints(&[1, 1])).unwrap(), None);
        assert!(matches!(a.solve(&ints(&[1])), Err(LinAlgError::DimensionMismatch { .. })));
    }

    #[test]
    fn symbolic_inverse() {
        let u = Scalar::u();
        let a = Matrix::from_rows(vec![
            vec![u.clone(), Scalar::one()],
            vec![Scalar::one(), Scalar::from_poly(Polynomial::from_ints(&[1, 0, 1]))],
        ])
        .unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(&a * &inv, Matrix::identity(2));
        assert!(Matrix::from_i64(2, 2, &[1, 2, 2, 4]).inverse().is_none());
    }

    #[test]
    fn subspace_basis_independence() {
        let u = Subspace::span(3, vec![ints(&[1, 1, 0]), ints(&[0, 1, 1])]).unwrap();
        let v = Subspace::span(3, vec![ints(&[2, 4, 2]), ints(&[-1, 0, 1]), ints(&[1, 2, 1])]).unwrap();
        assert!(subspace_equal(&u, &v));
        assert!(!subspace_equal(&u, &u.orthogonal_complement()));
        assert_eq!(Subspace::full(4).orthogonal_complement(), Subspace::zero(4));
    }

    #[test]
    fn projection_properties() {
        let u = Subspace::span(3, vec![ints(&[1, 1, 0])]).unwrap();
        assert_eq!(u.project(&ints(&[2, 2, 0])).unwrap(), ints(&[2, 2, 0]));
        assert_eq!(u.project(&ints(&[1, -1, 5])).unwrap(), ints(&[0, 0, 0]));
        let x = ints(&[3, 1, 4]);
        let r = u.residual(&x);
        assert!(u.basis().iter().all(|b| dot(b, &r).is_zero()));
    }
}
