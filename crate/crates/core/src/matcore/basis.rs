//! Generalized Gell-Mann basis of the Hermitian matrices.
//!
//! For dimension `n` the basis holds the `n² - 1` traceless elements
//! (symmetric, antisymmetric and diagonal families, each of Hilbert-Schmidt
//! norm √2) followed by the identity. For `n = 2` this is exactly
//! `[σ₁, σ₂, σ₃, I]`. The basis gives the solver its real coordinate system
//! on Hermitian space.

use crate::error::{Error, Result};
use crate::matcore::matrix::{CMatrix, HermitianMatrix};
use crate::scalar::{cplx, real, Scalar};

/// Ordered Hermitian basis of `M_n(C)` viewed as a real vector space.
#[derive(Clone, Debug)]
pub struct HermitianBasis<T: Scalar> {
    n: usize,
    elements: Vec<HermitianMatrix<T>>,
}

impl<T: Scalar> HermitianBasis<T> {
    pub fn new(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::argument("basis dimension must be >= 1"));
        }
        let mut elements = Vec::with_capacity(n * n);

        // Symmetric: E_ij + E_ji for i < j.
        for i in 0..n {
            for j in i + 1..n {
                let mut m = CMatrix::zeros(n);
                m[(i, j)] = cplx(1.0, 0.0);
                m[(j, i)] = cplx(1.0, 0.0);
                elements.push(HermitianMatrix::symmetrized(m));
            }
        }
        // Antisymmetric: -i E_ij + i E_ji for i < j.
        for i in 0..n {
            for j in i + 1..n {
                let mut m = CMatrix::zeros(n);
                m[(i, j)] = cplx(0.0, -1.0);
                m[(j, i)] = cplx(0.0, 1.0);
                elements.push(HermitianMatrix::symmetrized(m));
            }
        }
        // Diagonal: sqrt(2/(l(l+1))) (Σ_{k<=l} E_kk - l E_{l+1,l+1}).
        for l in 1..n {
            let coef = real::<T>((2.0 / (l as f64 * (l as f64 + 1.0))).sqrt());
            let mut diag = vec![T::zero(); n];
            for d in diag.iter_mut().take(l) {
                *d = coef;
            }
            diag[l] = -coef * real(l as f64);
            elements.push(HermitianMatrix::diagonal(&diag));
        }
        // Identity last.
        elements.push(HermitianMatrix::identity(n));

        Ok(HermitianBasis { n, elements })
    }

    #[inline]
    pub fn algebra_dim(&self) -> usize {
        self.n
    }

    /// Number of basis elements, `n²`.
    #[inline]
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    #[inline]
    pub fn element(&self, k: usize) -> &HermitianMatrix<T> {
        &self.elements[k]
    }

    pub fn elements(&self) -> &[HermitianMatrix<T>] {
        &self.elements
    }

    /// Index of the identity element (always the last one).
    #[inline]
    pub fn identity_index(&self) -> usize {
        self.elements.len() - 1
    }

    /// Indices of the traceless elements.
    pub fn traceless_indices(&self) -> Vec<usize> {
        (0..self.elements.len() - 1).collect()
    }

    /// Indices of the elements that are diagonal matrices (the diagonal
    /// family plus the identity). This is the subalgebra mask used by the
    /// two-point space.
    pub fn diagonal_indices(&self) -> Vec<usize> {
        let off = self.n * (self.n - 1); // symmetric + antisymmetric count
        (off..self.elements.len()).collect()
    }

    /// Orthonormal version of element `k` (unit Hilbert-Schmidt norm).
    pub fn orthonormal_element(&self, k: usize) -> HermitianMatrix<T> {
        let e = &self.elements[k];
        let norm = e.matrix().hs_norm();
        e.scale_re(T::one() / norm)
    }

    /// Real coefficients of a Hermitian matrix on the orthonormalized basis.
    pub fn coefficients(&self, e: &HermitianMatrix<T>) -> Result<Vec<T>> {
        if e.dim() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: e.dim(),
            });
        }
        Ok(self
            .elements
            .iter()
            .map(|b| b.hs_inner_re(e) / b.matrix().hs_norm())
            .collect())
    }

    /// Rebuild a Hermitian matrix from orthonormal-basis coefficients.
    pub fn reconstruct(&self, coeffs: &[T]) -> Result<HermitianMatrix<T>> {
        if coeffs.len() != self.elements.len() {
            return Err(Error::Dimension {
                expected: self.elements.len(),
                got: coeffs.len(),
            });
        }
        let mut m = CMatrix::zeros(self.n);
        for (k, &c) in coeffs.iter().enumerate() {
            let b = &self.elements[k];
            let norm = b.matrix().hs_norm();
            m = &m + &b.matrix().scale_re(c / norm);
        }
        Ok(HermitianMatrix::symmetrized(m))
    }
}
