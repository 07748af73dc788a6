//! Pauli matrices and Pauli-string tensor products.

use crate::error::{Error, Result};
use crate::matcore::matrix::{CMatrix, HermitianMatrix};
use crate::scalar::{cplx, Scalar};

/// Sign of a Pauli string.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn factor<T: Scalar>(self) -> T {
        match self {
            Sign::Plus => T::one(),
            Sign::Minus => -T::one(),
        }
    }
}

/// Pauli matrix `σ_i` as a plain complex matrix; index 0 is the identity.
pub fn sigma<T: Scalar>(i: usize) -> CMatrix<T> {
    let rows: [[(f64, f64); 2]; 2] = match i {
        0 => [[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (1.0, 0.0)]],
        1 => [[(0.0, 0.0), (1.0, 0.0)], [(1.0, 0.0), (0.0, 0.0)]],
        2 => [[(0.0, 0.0), (0.0, -1.0)], [(0.0, 1.0), (0.0, 0.0)]],
        3 => [[(1.0, 0.0), (0.0, 0.0)], [(0.0, 0.0), (-1.0, 0.0)]],
        _ => panic!("Pauli index must be 0..=3, got {i}"),
    };
    let mut m = CMatrix::zeros(2);
    for (r, row) in rows.iter().enumerate() {
        for (c, &(re, im)) in row.iter().enumerate() {
            m[(r, c)] = cplx(re, im);
        }
    }
    m
}

/// Pauli matrix `σ_i` as a Hermitian matrix; index 0 is the identity.
pub fn pauli<T: Scalar>(i: usize) -> HermitianMatrix<T> {
    HermitianMatrix::symmetrized(sigma(i))
}

/// Signed tensor product of Pauli matrices `±σ_{i₁} ⊗ … ⊗ σ_{i_k}`.
///
/// The resulting dimension is `2^k`.
pub fn pauli_string<T: Scalar>(indices: &[usize], sign: Sign) -> Result<HermitianMatrix<T>> {
    if indices.is_empty() {
        return Err(Error::argument("pauli_string needs at least one factor"));
    }
    if let Some(&bad) = indices.iter().find(|&&i| i > 3) {
        return Err(Error::argument(format!(
            "Pauli index must be 0..=3, got {bad}"
        )));
    }
    let mut m = sigma::<T>(indices[0]);
    for &i in &indices[1..] {
        m = m.kron(&sigma(i));
    }
    Ok(HermitianMatrix::symmetrized(m.scale_re(sign.factor())))
}

/// Linear combination of real coefficients with the traceless Paulis:
/// `v · σ = v₁σ₁ + v₂σ₂ + v₃σ₃`.
pub fn vector_dot_sigma<T: Scalar>(v: [T; 3]) -> HermitianMatrix<T> {
    let mut m = CMatrix::zeros(2);
    for (k, &coef) in v.iter().enumerate() {
        m = &m + &sigma::<T>(k + 1).scale_re(coef);
    }
    HermitianMatrix::symmetrized(m)
}
