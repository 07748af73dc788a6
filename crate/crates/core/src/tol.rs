//! Central tolerance table.
//!
//! Every fixed threshold used by constructors, verification checks and the
//! kernel analysis lives here so that tests and library code agree on one
//! source of truth. Solver accuracy is user-set through `SolverOptions` and
//! is not listed here.

use crate::scalar::{real, Scalar};

/// Construction-time identities (Hermiticity, unitarity, round-trips): `1e-12`.
pub const CONSTRUCTION: f64 = 1e-12;

/// Verification-time identities that go through an eigensolve: `1e-10`.
pub const VERIFICATION: f64 = 1e-10;

/// Relative singular-value cut below which a direction counts as kernel: `1e-9`.
pub const KERNEL_CUT: f64 = 1e-9;

/// Overlap `|tr(Δρ·k)|` with a kernel element above which the distance is
/// declared infinite: `1e-9`.
pub const KERNEL_OVERLAP: f64 = 1e-9;

/// Jacobi sweep convergence: `off(H) <= JACOBI_OFF * ||H||_F`.
pub const JACOBI_OFF: f64 = 1e-13;

/// Maximum number of Jacobi sweeps before reporting non-convergence.
pub const JACOBI_MAX_SWEEPS: usize = 100;

/// States closer than this in Hilbert-Schmidt norm count as identical.
pub const STATE_COINCIDENCE: f64 = 1e-12;

/// The spec constant, or a small multiple of the scalar's epsilon when the
/// scalar is too coarse to hit it. For `f64` every constant below wins
/// against its epsilon floor, so `f64` behavior is exactly the table above;
/// the floor only matters for `f32`.
#[inline]
fn eps_floor<T: Scalar>(value: f64, eps_multiple: f64) -> T {
    let fixed = real::<T>(value);
    let floor = real::<T>(eps_multiple) * T::epsilon();
    if floor > fixed {
        floor
    } else {
        fixed
    }
}

#[inline]
pub fn construction<T: Scalar>() -> T {
    eps_floor(CONSTRUCTION, 64.0)
}

#[inline]
pub fn verification<T: Scalar>() -> T {
    eps_floor(VERIFICATION, 512.0)
}

#[inline]
pub fn kernel_cut<T: Scalar>() -> T {
    eps_floor(KERNEL_CUT, 128.0)
}

#[inline]
pub fn kernel_overlap<T: Scalar>() -> T {
    eps_floor(KERNEL_OVERLAP, 512.0)
}

#[inline]
pub fn state_coincidence<T: Scalar>() -> T {
    eps_floor(STATE_COINCIDENCE, 16.0)
}

/// Jacobi convergence threshold for a matrix of Frobenius norm `fro`.
#[inline]
pub fn jacobi_threshold<T: Scalar>(fro: T) -> T {
    eps_floor::<T>(JACOBI_OFF, 32.0) * fro
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn f64_tolerances_are_the_spec_constants() {
        assert_eq!(construction::<f64>(), CONSTRUCTION);
        assert_eq!(verification::<f64>(), VERIFICATION);
        assert_eq!(kernel_cut::<f64>(), KERNEL_CUT);
        assert_eq!(kernel_overlap::<f64>(), KERNEL_OVERLAP);
        assert_eq!(state_coincidence::<f64>(), STATE_COINCIDENCE);
        assert_eq!(jacobi_threshold::<f64>(2.0), 2.0 * JACOBI_OFF);
    }

    #[test]
    fn f32_tolerances_sit_above_machine_noise() {
        assert!(construction::<f32>() >= 64.0 * f32::EPSILON);
        assert!(verification::<f32>() >= 512.0 * f32::EPSILON);
        assert!(jacobi_threshold::<f32>(1.0) >= 32.0 * f32::EPSILON);
    }
}
