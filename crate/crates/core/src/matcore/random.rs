//! Seeded random matrices for property testing.
//!
//! All samplers draw from a caller-owned RNG; the seed-based helpers build a
//! ChaCha8 stream so results are identical across platforms and runs.

use crate::error::{Error, Result};
use crate::matcore::matrix::{CMatrix, HermitianMatrix};
use crate::scalar::{real, Scalar, C};
use crate::states::DensityMatrix;
use num_complex::Complex;
use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

/// Deterministic RNG stream for a seed.
pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn normal<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> T {
    let x: f64 = StandardNormal.sample(rng);
    real(x)
}

fn complex_normal<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> C<T> {
    // Sampling order is part of the determinism contract: re then im.
    let re = normal(rng);
    let im = normal(rng);
    Complex::new(re, im)
}

/// Complex Ginibre matrix: independent standard complex normal entries.
pub fn random_matrix<T: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CMatrix<T>> {
    if n < 1 {
        return Err(Error::argument("matrix dimension must be >= 1"));
    }
    let entries = (0..n * n).map(|_| complex_normal(rng)).collect();
    CMatrix::from_entries(n, entries)
}

/// GUE-style random Hermitian matrix `(G + G†)/2`.
pub fn random_hermitian<T: Scalar, R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<HermitianMatrix<T>> {
    let g = random_matrix(n, rng)?;
    Ok(HermitianMatrix::symmetrized(g))
}

/// Random traceless Hermitian matrix.
pub fn random_traceless_hermitian<T: Scalar, R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<HermitianMatrix<T>> {
    Ok(random_hermitian(n, rng)?.traceless_part())
}

/// Haar-distributed random unitary via Gram-Schmidt of a Ginibre matrix with
/// the phase convention that makes R's diagonal positive.
pub fn random_unitary<T: Scalar, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<CMatrix<T>> {
    let g = random_matrix::<T, R>(n, rng)?;
    // Modified Gram-Schmidt on columns.
    let mut cols: Vec<Vec<C<T>>> = (0..n)
        .map(|j| (0..n).map(|i| g[(i, j)]).collect())
        .collect();
    for j in 0..n {
        for k in 0..j {
            let proj = dot(&cols[k], &cols[j]);
            let ck = cols[k].clone();
            for (x, y) in cols[j].iter_mut().zip(ck.iter()) {
                *x -= proj * *y;
            }
        }
        let norm = dot(&cols[j], &cols[j]).re.sqrt();
        if norm.is_zero() {
            // Vanishingly unlikely; retry with fresh entries.
            return random_unitary(n, rng);
        }
        let inv = Complex::new(T::one() / norm, T::zero());
        for x in cols[j].iter_mut() {
            *x *= inv;
        }
    }
    let mut u = CMatrix::zeros(n);
    for (j, col) in cols.iter().enumerate() {
        for (i, &x) in col.iter().enumerate() {
            u[(i, j)] = x;
        }
    }
    Ok(u)
}

fn dot<T: Scalar>(a: &[C<T>], b: &[C<T>]) -> C<T> {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| x.conj() * *y)
        .fold(C::zero(), |acc, z| acc + z)
}

/// Random density matrix `G†G / tr(G†G)`.
pub fn random_density<T: Scalar, R: Rng + ?Sized>(
    n: usize,
    rng: &mut R,
) -> Result<DensityMatrix<T>> {
    let g = random_matrix::<T, R>(n, rng)?;
    let p = g.adjoint().matmul(&g);
    let tr = p.trace().re;
    DensityMatrix::new(HermitianMatrix::symmetrized(p.scale_re(T::one() / tr)))
}

/// Random Bloch vector drawn uniformly from the unit ball.
pub fn random_bloch<T: Scalar, R: Rng + ?Sized>(rng: &mut R) -> [T; 3] {
    loop {
        let x: f64 = rng.gen_range(-1.0..1.0);
        let y: f64 = rng.gen_range(-1.0..1.0);
        let z: f64 = rng.gen_range(-1.0..1.0);
        if x * x + y * y + z * z <= 1.0 {
            return [real(x), real(y), real(z)];
        }
    }
}
