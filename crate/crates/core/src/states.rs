//! Density matrices, Bloch-vector conversion for qubits, the trace distance
//! and its closed-form optimal element.
//!
//! The trace distance here is `‖ρ₁ - ρ₂‖₁` without the conventional ½
//! factor, so that for qubits it equals the Euclidean distance between the
//! Bloch vectors.

use crate::error::{Error, Result};
use crate::matcore::{
    hermitian_eigen, hermitian_trace_norm, pauli, CMatrix, HermitianMatrix,
};
use crate::scalar::{real, Scalar, C};
use crate::tol;
use num_complex::Complex;

/// Quantum state: Hermitian, positive semidefinite, unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix<T: Scalar> {
    mat: HermitianMatrix<T>,
}

impl<T: Scalar> DensityMatrix<T> {
    /// Validate positivity (eigenvalues >= -1e-10) and unit trace.
    pub fn new(mat: HermitianMatrix<T>) -> Result<Self> {
        let tr = mat.trace_re();
        if (tr - T::one()).abs() > tol::verification::<T>() {
            return Err(Error::argument(format!(
                "density matrix must have unit trace, got {}",
                tr
            )));
        }
        let eig = hermitian_eigen(&mat)?;
        if let Some(&min) = eig.values.first() {
            if min < -tol::verification::<T>() {
                return Err(Error::argument(format!(
                    "density matrix must be positive semidefinite, min eigenvalue {}",
                    min
                )));
            }
        }
        Ok(DensityMatrix { mat })
    }

    /// Pure state `|k⟩⟨k|` in the computational basis.
    pub fn basis_projector(n: usize, k: usize) -> Result<Self> {
        if k >= n {
            return Err(Error::argument(format!("basis index {k} out of range {n}")));
        }
        let mut diag = vec![T::zero(); n];
        diag[k] = T::one();
        Ok(DensityMatrix {
            mat: HermitianMatrix::diagonal(&diag),
        })
    }

    /// Diagonal qubit state `diag(p, 1-p)`.
    pub fn two_level(p: T) -> Result<Self> {
        if p < T::zero() || p > T::one() {
            return Err(Error::argument("probability must lie in [0, 1]"));
        }
        Ok(DensityMatrix {
            mat: HermitianMatrix::diagonal(&[p, T::one() - p]),
        })
    }

    /// Maximally mixed state `I/n`.
    pub fn maximally_mixed(n: usize) -> Self {
        DensityMatrix {
            mat: HermitianMatrix::identity(n).scale_re(T::one() / real(n as f64)),
        }
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.mat.dim()
    }

    #[inline]
    pub fn hermitian(&self) -> &HermitianMatrix<T> {
        &self.mat
    }

    #[inline]
    pub fn matrix(&self) -> &CMatrix<T> {
        self.mat.matrix()
    }

    pub fn trace_re(&self) -> T {
        self.mat.trace_re()
    }

    /// The state functional `ω(e) = tr(ρe)`.
    pub fn expectation(&self, e: &CMatrix<T>) -> C<T> {
        self.matrix().matmul(e).trace()
    }

    /// `ρ₁ - ρ₂`, the traceless Hermitian difference driving every distance.
    pub fn delta(&self, other: &Self) -> HermitianMatrix<T> {
        &self.mat - &other.mat
    }

    /// Conjugated state `UρU†`.
    pub fn conjugate(&self, u: &CMatrix<T>) -> Result<Self> {
        if u.dim() != self.dim() {
            return Err(Error::Dimension {
                expected: self.dim(),
                got: u.dim(),
            });
        }
        let m = u.matmul(self.matrix()).matmul(&u.adjoint());
        DensityMatrix::new(HermitianMatrix::symmetrized(m))
    }
}

/// Bloch vector of a qubit state, `|r| <= 1`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BlochVector<T: Scalar> {
    pub r: [T; 3],
}

impl<T: Scalar> BlochVector<T> {
    pub fn new(r: [T; 3]) -> Result<Self> {
        let v = BlochVector { r };
        if v.norm() > T::one() + tol::verification::<T>() {
            return Err(Error::argument(format!(
                "Bloch vector must have |r| <= 1, got {}",
                v.norm()
            )));
        }
        Ok(v)
    }

    pub fn norm(&self) -> T {
        self.r
            .iter()
            .map(|&x| x * x)
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }

    /// Euclidean distance between two Bloch vectors.
    pub fn distance(&self, other: &Self) -> T {
        self.r
            .iter()
            .zip(other.r.iter())
            .map(|(&a, &b)| (a - b) * (a - b))
            .fold(T::zero(), |a, b| a + b)
            .sqrt()
    }
}

/// Qubit state from a Bloch vector: `ρ = (I + r·σ)/2`.
pub fn density_from_bloch<T: Scalar>(r: &BlochVector<T>) -> Result<DensityMatrix<T>> {
    let mut m = CMatrix::identity(2);
    for (k, &coef) in r.r.iter().enumerate() {
        m = &m + &pauli::<T>(k + 1).matrix().scale_re(coef);
    }
    DensityMatrix::new(HermitianMatrix::symmetrized(m.scale_re(real(0.5))))
}

/// Bloch vector of a qubit state: `r_i = tr(ρ σ_i)`.
pub fn bloch_from_density<T: Scalar>(rho: &DensityMatrix<T>) -> Result<BlochVector<T>> {
    if rho.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            got: rho.dim(),
        });
    }
    let mut r = [T::zero(); 3];
    for (k, ri) in r.iter_mut().enumerate() {
        *ri = rho.expectation(&pauli::<T>(k + 1).into_matrix()).re;
    }
    BlochVector::new(r)
}

/// Quantum trace distance `‖ρ₁ - ρ₂‖₁` (no ½ factor).
pub fn trace_distance<T: Scalar>(rho1: &DensityMatrix<T>, rho2: &DensityMatrix<T>) -> T {
    hermitian_trace_norm(&rho1.delta(rho2))
}

/// Closed-form optimal element for the trace-norm supremum: the sign of
/// `delta` on its support.
///
/// Eigendirections with `|a_i| <= 1e-10` get coefficient zero, so the result
/// stays canonical under degenerate spectra and `‖e_o‖_op <= 1` always.
/// Satisfies `tr(delta · e_o) = ‖delta‖₁`.
pub fn optimal_element_tracenorm<T: Scalar>(delta: &HermitianMatrix<T>) -> HermitianMatrix<T> {
    let n = delta.dim();
    let eig = hermitian_eigen(delta).expect("Hermitian eigensolve");
    let cut = tol::verification::<T>();
    let mut out = CMatrix::zeros(n);
    for (idx, &a) in eig.values.iter().enumerate() {
        if a.abs() <= cut {
            continue;
        }
        let sign = if a > T::zero() { T::one() } else { -T::one() };
        let v = eig.vector(idx);
        for i in 0..n {
            for j in 0..n {
                let w = out[(i, j)] + v[i] * v[j].conj() * Complex::new(sign, T::zero());
                out[(i, j)] = w;
            }
        }
    }
    HermitianMatrix::symmetrized(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{
        hermitian_operator_norm, random_density, random_hermitian, random_unitary, rng_from_seed,
        vector_dot_sigma,
    };
    use crate::scalar::cplx;

    #[test]
    fn bloch_poles_and_plus_state() {
        let mixed = density_from_bloch(&BlochVector::new([0.0, 0.0, 0.0]).unwrap()).unwrap();
        assert!(mixed
            .matrix()
            .approx_eq(&CMatrix::identity(2).scale_re(0.5), 1e-15));

        let one = density_from_bloch(&BlochVector::new([0.0, 0.0, 1.0]).unwrap()).unwrap();
        assert!(one
            .matrix()
            .approx_eq(HermitianMatrix::diagonal(&[1.0, 0.0]).matrix(), 1e-15));

        let plus = density_from_bloch(&BlochVector::new([1.0, 0.0, 0.0]).unwrap()).unwrap();
        let want = CMatrix::from_rows_f64(&[
            vec![(0.5, 0.0), (0.5, 0.0)],
            vec![(0.5, 0.0), (0.5, 0.0)],
        ])
        .unwrap();
        assert!(plus.matrix().approx_eq(&want, 1e-15));
    }

    #[test]
    fn bloch_round_trip() {
        let mut rng = rng_from_seed(3);
        for _ in 0..20 {
            let rho = random_density::<f64, _>(2, &mut rng).unwrap();
            let r = bloch_from_density(&rho).unwrap();
            let back = density_from_bloch(&r).unwrap();
            assert!(back.matrix().approx_eq(rho.matrix(), 1e-12));
        }
    }

    #[test]
    fn bloch_rejects_outside_ball() {
        assert!(BlochVector::new([1.0, 0.2, 0.0]).is_err());
        assert!(bloch_from_density(
            &DensityMatrix::<f64>::maximally_mixed(3)
        )
        .is_err());
    }

    #[test]
    fn trace_distance_two_level() {
        let (p, q) = (0.9f64, 0.3f64);
        let r1 = DensityMatrix::two_level(p).unwrap();
        let r2 = DensityMatrix::two_level(q).unwrap();
        assert!((trace_distance(&r1, &r2) - 2.0 * (p - q).abs()) < 1e-13);
        assert_eq!(trace_distance(&r1, &r1), 0.0);
    }

    #[test]
    fn trace_distance_is_bloch_distance() {
        let mut rng = rng_from_seed(5);
        for _ in 0..20 {
            let r1 = random_density::<f64, _>(2, &mut rng).unwrap();
            let r2 = random_density::<f64, _>(2, &mut rng).unwrap();
            let b1 = bloch_from_density(&r1).unwrap();
            let b2 = bloch_from_density(&r2).unwrap();
            assert!((trace_distance(&r1, &r2) - b1.distance(&b2)).abs() < 1e-12);
        }
    }

    #[test]
    fn unitary_invariance_of_trace_distance() {
        let mut rng = rng_from_seed(8);
        for _ in 0..10 {
            let r1 = random_density::<f64, _>(3, &mut rng).unwrap();
            let r2 = random_density::<f64, _>(3, &mut rng).unwrap();
            let u = random_unitary::<f64, _>(3, &mut rng).unwrap();
            let d = trace_distance(&r1, &r2);
            let du = trace_distance(&r1.conjugate(&u).unwrap(), &r2.conjugate(&u).unwrap());
            assert!((d - du).abs() < 1e-10);
        }
    }

    #[test]
    fn optimal_element_diagonal_cases() {
        let e = optimal_element_tracenorm(&HermitianMatrix::diagonal(&[0.4, -0.4]));
        assert!(e
            .matrix()
            .approx_eq(HermitianMatrix::diagonal(&[1.0, -1.0]).matrix(), 1e-12));

        let delta = HermitianMatrix::diagonal(&[0.5, -0.2, -0.3]);
        let e = optimal_element_tracenorm(&delta);
        assert!(e
            .matrix()
            .approx_eq(HermitianMatrix::diagonal(&[1.0, -1.0, -1.0]).matrix(), 1e-12));
        let objective: f64 = delta.matrix().matmul(e.matrix()).trace().re;
        assert!((objective - 1.0).abs() < 1e-12);
    }

    #[test]
    fn optimal_element_qubit_formula() {
        // delta = ½ Δr·σ  =>  e_o = Δr·σ / |Δr|
        let dr = [0.6, -0.3, 0.4];
        let norm = (0.36f64 + 0.09 + 0.16).sqrt();
        let delta = vector_dot_sigma(dr).scale_re(0.5);
        let e = optimal_element_tracenorm(&delta);
        let want = vector_dot_sigma(dr).scale_re(1.0 / norm);
        assert!(e.matrix().approx_eq(want.matrix(), 1e-12));
        // tr(Δρ e_o) = |Δr| and hs_inner agrees
        let obj = delta.hs_inner_re(&e);
        assert!((obj - norm).abs() < 1e-12);
    }

    #[test]
    fn optimal_element_zero_delta() {
        let e = optimal_element_tracenorm(&HermitianMatrix::<f64>::zeros(3));
        assert!(e.matrix().approx_eq(&CMatrix::zeros(3), 1e-15));
    }

    #[test]
    fn optimal_element_norm_bound_random() {
        let mut rng = rng_from_seed(17);
        for _ in 0..20 {
            let a = random_density::<f64, _>(4, &mut rng).unwrap();
            let b = random_density::<f64, _>(4, &mut rng).unwrap();
            let delta = a.delta(&b);
            let e = optimal_element_tracenorm(&delta);
            assert!(hermitian_operator_norm(&e) <= 1.0 + 1e-12);
            let obj = delta.hs_inner_re(&e);
            assert!((obj - hermitian_trace_norm(&delta)).abs() < 1e-10);
        }
    }

    #[test]
    fn expectation_matches_trace() {
        let rho = DensityMatrix::two_level(0.25).unwrap();
        let e = CMatrix::from_rows_f64(&[vec![(2.0, 0.0), (0.0, 0.0)], vec![(0.0, 0.0), (4.0, 0.0)]])
            .unwrap();
        assert_eq!(rho.expectation(&e), cplx(0.5 + 3.0, 0.0));
    }

    #[test]
    fn density_rejects_bad_input() {
        assert!(DensityMatrix::new(HermitianMatrix::diagonal(&[0.7, 0.7])).is_err());
        assert!(DensityMatrix::new(HermitianMatrix::diagonal(&[1.5, -0.5])).is_err());
        let mut rng = rng_from_seed(2);
        let h = random_hermitian::<f64, _>(2, &mut rng).unwrap();
        let _ = h; // arbitrary Hermitian is generally not a state
    }
}
