//! Dense complex square matrices.

use crate::error::{Error, Result};
use crate::scalar::{cplx, real, Scalar, C};
use crate::tol;
use num_complex::Complex;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Dense complex square matrix, row-major.
///
/// The universal carrier for algebra elements, Dirac operators and
/// representation images. All entries must be finite.
#[derive(Clone, PartialEq)]
pub struct CMatrix<T: Scalar> {
    dim: usize,
    entries: Vec<C<T>>,
}

impl<T: Scalar> fmt::Debug for CMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CMatrix({}x{}) [", self.dim, self.dim)?;
        for i in 0..self.dim {
            write!(f, "  ")?;
            for j in 0..self.dim {
                let z = self[(i, j)];
                write!(f, "{:+.4}{:+.4}i  ", z.re, z.im)?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<T: Scalar> CMatrix<T> {
    /// Zero matrix of dimension `dim`.
    pub fn zeros(dim: usize) -> Self {
        CMatrix {
            dim,
            entries: vec![C::zero(); dim * dim],
        }
    }

    /// Identity matrix of dimension `dim`.
    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = C::one();
        }
        m
    }

    /// Build from a row-major entry vector. Fails on non-square data or
    /// non-finite entries.
    pub fn from_entries(dim: usize, entries: Vec<C<T>>) -> Result<Self> {
        if entries.len() != dim * dim {
            return Err(Error::Dimension {
                expected: dim * dim,
                got: entries.len(),
            });
        }
        let m = CMatrix { dim, entries };
        m.check_finite()?;
        Ok(m)
    }

    /// Build from nested rows of `(re, im)` pairs in `f64`.
    pub fn from_rows_f64(rows: &[Vec<(f64, f64)>]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    got: row.len(),
                });
            }
            for &(re, im) in row {
                entries.push(cplx(re, im));
            }
        }
        Self::from_entries(dim, entries)
    }

    fn check_finite(&self) -> Result<()> {
        for z in &self.entries {
            if !z.re.is_finite() || !z.im.is_finite() {
                return Err(Error::argument("matrix entries must be finite"));
            }
        }
        Ok(())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn entries(&self) -> &[C<T>] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> C<T> {
        self.entries[i * self.dim + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: C<T>) {
        self.entries[i * self.dim + j] = v;
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out[(j, i)] = self[(i, j)].conj();
            }
        }
        out
    }

    /// Matrix trace.
    pub fn trace(&self) -> C<T> {
        (0..self.dim).map(|i| self[(i, i)]).fold(C::zero(), |a, b| a + b)
    }

    /// Frobenius (Hilbert-Schmidt) norm.
    pub fn hs_norm(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> T {
        self.entries
            .iter()
            .map(|z| z.norm())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    /// Scale by a complex factor.
    pub fn scale(&self, factor: C<T>) -> Self {
        CMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * factor).collect(),
        }
    }

    /// Scale by a real factor.
    pub fn scale_re(&self, factor: T) -> Self {
        self.scale(Complex::new(factor, T::zero()))
    }

    /// Matrix product `self * rhs`.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = out[(i, j)] + a * rhs[(k, j)];
                    out[(i, j)] = v;
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn matvec(&self, v: &[C<T>]) -> Vec<C<T>> {
        assert_eq!(self.dim, v.len(), "matvec dimension mismatch");
        let n = self.dim;
        let mut out = vec![C::zero(); n];
        for i in 0..n {
            let mut acc = C::zero();
            for j in 0..n {
                acc += self[(i, j)] * v[j];
            }
            out[i] = acc;
        }
        out
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let (n, m) = (self.dim, rhs.dim);
        let mut out = Self::zeros(n * m);
        for i in 0..n {
            for j in 0..n {
                let a = self[(i, j)];
                if a.re.is_zero() && a.im.is_zero() {
                    continue;
                }
                for k in 0..m {
                    for l in 0..m {
                        out[(i * m + k, j * m + l)] = a * rhs[(k, l)];
                    }
                }
            }
        }
        out
    }

    /// Commutator `[self, rhs] = self*rhs - rhs*self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        &self.matmul(rhs) - &rhs.matmul(self)
    }

    /// Hilbert-Schmidt inner product `tr(self† rhs)`.
    pub fn hs_inner(&self, rhs: &Self) -> C<T> {
        assert_eq!(self.dim, rhs.dim, "hs_inner dimension mismatch");
        self.entries
            .iter()
            .zip(rhs.entries.iter())
            .map(|(a, b)| a.conj() * b)
            .fold(C::zero(), |acc, z| acc + z)
    }

    /// Hermitian deviation `max_{ij} |A_ij - conj(A_ji)|`.
    pub fn hermitian_deviation(&self) -> T {
        let n = self.dim;
        let mut dev = T::zero();
        for i in 0..n {
            for j in i..n {
                let d = (self[(i, j)] - self[(j, i)].conj()).norm();
                if d > dev {
                    dev = d;
                }
            }
        }
        dev
    }

    /// `(self + self†)/2`.
    pub fn symmetrize(&self) -> Self {
        (self + &self.adjoint()).scale_re(real(0.5))
    }

    /// True when `‖self - rhs‖_max ≤ tol`.
    pub fn approx_eq(&self, rhs: &Self, atol: T) -> bool {
        self.dim == rhs.dim && (self - rhs).max_abs() <= atol
    }
}

impl<T: Scalar> std::ops::Index<(usize, usize)> for CMatrix<T> {
    type Output = C<T>;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &C<T> {
        &self.entries[i * self.dim + j]
    }
}

impl<T: Scalar> std::ops::IndexMut<(usize, usize)> for CMatrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut C<T> {
        &mut self.entries[i * self.dim + j]
    }
}

macro_rules! elementwise {
    ($trait:ident, $fn:ident, $op:tt) => {
        impl<'a, T: Scalar> $trait<&'a CMatrix<T>> for &'a CMatrix<T> {
            type Output = CMatrix<T>;
            fn $fn(self, rhs: &'a CMatrix<T>) -> CMatrix<T> {
                assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
                CMatrix {
                    dim: self.dim,
                    entries: self
                        .entries
                        .iter()
                        .zip(rhs.entries.iter())
                        .map(|(a, b)| *a $op *b)
                        .collect(),
                }
            }
        }
    };
}

elementwise!(Add, add, +);
elementwise!(Sub, sub, -);

impl<T: Scalar> Neg for &CMatrix<T> {
    type Output = CMatrix<T>;
    fn neg(self) -> CMatrix<T> {
        self.scale_re(-T::one())
    }
}

impl<'a, T: Scalar> Mul<&'a CMatrix<T>> for &'a CMatrix<T> {
    type Output = CMatrix<T>;
    fn mul(self, rhs: &'a CMatrix<T>) -> CMatrix<T> {
        self.matmul(rhs)
    }
}

/// Hermitian matrix: validated wrapper around [`CMatrix`].
///
/// Construction enforces `max_{ij} |A_ij - conj(A_ji)| <= 1e-12 (1 + ‖A‖_op)`
/// and then stores the exactly symmetrized matrix, so downstream code can
/// rely on `A = A†` holding bit-wise.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix<T: Scalar> {
    mat: CMatrix<T>,
}

impl<T: Scalar> HermitianMatrix<T> {
    /// Validate Hermiticity (`max |A_ij - conj(A_ji)| <= tol (1 + ‖A‖_op)`)
    /// and wrap.
    pub fn new(mat: CMatrix<T>) -> Result<Self> {
        mat.check_finite()?;
        let dev = mat.hermitian_deviation();
        // Cheap accept first: max_abs <= ‖A‖_op, so passing against max_abs
        // implies the operator-norm-scaled contract without an eigensolve.
        if dev > tol::construction::<T>() * (T::one() + mat.max_abs()) {
            let op = crate::matcore::eigen::operator_norm(&mat);
            if dev > tol::construction::<T>() * (T::one() + op) {
                return Err(Error::argument(format!(
                    "matrix is not Hermitian: deviation {:e}",
                    dev.to_f64().unwrap_or(f64::NAN)
                )));
            }
        }
        Ok(Self::symmetrized(mat))
    }

    /// Wrap after forcing exact Hermitian symmetry. For internal paths where
    /// the input is Hermitian by construction.
    pub fn symmetrized(mat: CMatrix<T>) -> Self {
        let mut m = mat.symmetrize();
        let n = m.dim();
        for i in 0..n {
            let d = m[(i, i)];
            m[(i, i)] = Complex::new(d.re, T::zero());
        }
        HermitianMatrix { mat: m }
    }

    pub fn zeros(dim: usize) -> Self {
        HermitianMatrix {
            mat: CMatrix::zeros(dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        HermitianMatrix {
            mat: CMatrix::identity(dim),
        }
    }

    /// Real diagonal matrix.
    pub fn diagonal(diag: &[T]) -> Self {
        let mut m = CMatrix::zeros(diag.len());
        for (i, &d) in diag.iter().enumerate() {
            m[(i, i)] = Complex::new(d, T::zero());
        }
        HermitianMatrix { mat: m }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    #[inline]
    pub fn matrix(&self) -> &CMatrix<T> {
        &self.mat
    }

    pub fn into_matrix(self) -> CMatrix<T> {
        self.mat
    }

    /// Real trace.
    pub fn trace_re(&self) -> T {
        self.mat.trace().re
    }

    /// Remove the trace part: `A - (tr A / n) I`.
    pub fn traceless_part(&self) -> Self {
        let n = self.dim();
        let shift = self.trace_re() / real(n as f64);
        let mut m = self.mat.clone();
        for i in 0..n {
            let d = m[(i, i)];
            m[(i, i)] = Complex::new(d.re - shift, T::zero());
        }
        HermitianMatrix { mat: m }
    }

    pub fn scale_re(&self, factor: T) -> Self {
        HermitianMatrix {
            mat: self.mat.scale_re(factor),
        }
    }

    /// Real Hilbert-Schmidt inner product of two Hermitian matrices.
    pub fn hs_inner_re(&self, rhs: &Self) -> T {
        self.mat.hs_inner(&rhs.mat).re
    }
}

impl<'a, T: Scalar> Add<&'a HermitianMatrix<T>> for &'a HermitianMatrix<T> {
    type Output = HermitianMatrix<T>;
    fn add(self, rhs: &'a HermitianMatrix<T>) -> HermitianMatrix<T> {
        HermitianMatrix {
            mat: &self.mat + &rhs.mat,
        }
    }
}

impl<'a, T: Scalar> Sub<&'a HermitianMatrix<T>> for &'a HermitianMatrix<T> {
    type Output = HermitianMatrix<T>;
    fn sub(self, rhs: &'a HermitianMatrix<T>) -> HermitianMatrix<T> {
        HermitianMatrix {
            mat: &self.mat - &rhs.mat,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cplx;

    type M = CMatrix<f64>;

    #[test]
    fn identity_and_trace() {
        let i3 = M::identity(3);
        assert_eq!(i3.trace(), cplx(3.0, 0.0));
        assert_eq!(i3.hs_norm(), 3f64.sqrt());
    }

    #[test]
    fn matmul_against_hand_value() {
        let a = M::from_rows_f64(&[
            vec![(1.0, 0.0), (0.0, 1.0)],
            vec![(0.0, -1.0), (2.0, 0.0)],
        ])
        .unwrap();
        let b = a.matmul(&a.adjoint());
        // row 0: |1|^2 + |i|^2 = 2 ; cross terms
        assert_eq!(b[(0, 0)], cplx(2.0, 0.0));
        assert_eq!(b[(1, 1)], cplx(5.0, 0.0));
        assert!(b.hermitian_deviation() < 1e-15);
    }

    #[test]
    fn kron_dimensions_multiply() {
        let a = M::identity(2);
        let b = M::identity(3);
        assert_eq!(a.kron(&b).dim(), 6);
    }

    #[test]
    fn finite_entries_enforced() {
        let err = M::from_entries(1, vec![cplx(f64::NAN, 0.0)]);
        assert!(err.is_err());
    }

    #[test]
    fn hermitian_rejects_asymmetric() {
        let m = M::from_rows_f64(&[vec![(0.0, 0.0), (1.0, 0.0)], vec![(0.5, 0.0), (0.0, 0.0)]])
            .unwrap();
        assert!(HermitianMatrix::new(m).is_err());
    }

    #[test]
    fn traceless_part_removes_trace() {
        let h = HermitianMatrix::diagonal(&[3.0, 1.0]);
        let t = h.traceless_part();
        assert_eq!(t.trace_re(), 0.0);
        assert_eq!(t.matrix()[(0, 0)], cplx(1.0, 0.0));
    }
}
