//! Numerical toolkit for Connes spectral distances on finite spectral
//! triples.
//!
//! A spectral triple `(A, H, D)` is a matrix algebra `A = M_n(C)` acting on a
//! finite-dimensional Hilbert space through a linear representation `π`,
//! together with a Hermitian Dirac operator `D`. The Connes distance between
//! density matrices is
//!
//! ```text
//! d(ρ₁, ρ₂) = sup { tr((ρ₁ - ρ₂) e) : ‖[D, π(e)]‖_op ≤ 1 }
//! ```
//!
//! The crate provides:
//!
//! * [`matcore`] — dense complex linear algebra (Jacobi eigensolver, norms,
//!   Pauli/tensor builders, Hermitian bases, seeded randomness);
//! * [`triple`] — representations, Dirac constructors (two-point space,
//!   corner embedding, the qubit operators `D₄`, `D_{4ⁿ}`, tensor
//!   insertions), the Lipschitz seminorm and its kernel;
//! * [`states`] — density matrices, Bloch vectors, the trace distance and
//!   its closed-form optimal element;
//! * [`solver`] — the distance solver: closed form on isometric triples, a
//!   certified bisection for the general case, and a brute-force oracle;
//! * [`verify`] — named, seeded property suites, one per statement the
//!   toolkit relies on, with machine-readable reports.
//!
//! All numerics are generic over the real scalar (`f32`/`f64`) via
//! [`scalar::Scalar`]; the aliases below fix `f64`, which is what the CLI
//! and the verification suites use.

pub mod error;
pub mod matcore;
pub mod scalar;
pub mod solver;
pub mod states;
pub mod tol;
pub mod triple;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// `f64` complex matrix.
pub type Mat = matcore::CMatrix<f64>;
/// `f64` Hermitian matrix.
pub type Herm = matcore::HermitianMatrix<f64>;
/// `f64` Hermitian basis.
pub type Basis = matcore::HermitianBasis<f64>;
/// `f64` density matrix.
pub type Density = states::DensityMatrix<f64>;
/// `f64` Bloch vector.
pub type Bloch = states::BlochVector<f64>;
/// `f64` spectral triple.
pub type Triple = triple::SpectralTriple<f64>;
/// `f64` solver result.
pub type DistanceResult = solver::SolverResult<f64>;
