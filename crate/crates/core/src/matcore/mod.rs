//! Dense complex linear algebra: matrices, Hermitian eigendecomposition,
//! norms, Pauli builders, Hermitian bases and seeded random generators.

mod basis;
mod eigen;
mod matrix;
mod pauli;
mod random;

pub use basis::HermitianBasis;
pub use eigen::{
    hermitian_eigen, hermitian_operator_norm, hermitian_trace_norm, operator_norm, trace_norm,
    Eigen,
};
pub use matrix::{CMatrix, HermitianMatrix};
pub use pauli::{pauli, pauli_string, sigma, vector_dot_sigma, Sign};
pub use random::{
    random_bloch, random_density, random_hermitian, random_matrix, random_traceless_hermitian,
    random_unitary, rng_from_seed,
};

use crate::scalar::{Scalar, C};

/// Hilbert-Schmidt inner product `tr(A†B)`.
pub fn hs_inner<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> C<T> {
    a.hs_inner(b)
}

/// Kronecker product `A ⊗ B`.
pub fn kron<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    a.kron(b)
}

/// Commutator `[A, B] = AB - BA`.
pub fn commutator<T: Scalar>(a: &CMatrix<T>, b: &CMatrix<T>) -> CMatrix<T> {
    a.commutator(b)
}
