//! Hermitian eigendecomposition and the matrix norms built on it.
//!
//! The eigensolver is a cyclic complex Jacobi iteration: each rotation is a
//! plane unitary that annihilates one off-diagonal entry, built from the
//! classic real rotation after absorbing the entry's phase. Deterministic,
//! dependency-free, and more than adequate at the dimensions this crate
//! targets (<= 64).

use crate::error::{Error, Result};
use crate::matcore::matrix::{CMatrix, HermitianMatrix};
use crate::scalar::{real, Scalar, C};
use crate::tol;
use num_complex::Complex;
use num_traits::Zero;

/// Eigendecomposition `H = V diag(values) V†` of a Hermitian matrix.
///
/// Eigenvalues are sorted ascending; `vectors` holds the corresponding
/// eigenvectors as columns and is unitary.
#[derive(Clone, Debug)]
pub struct Eigen<T: Scalar> {
    pub values: Vec<T>,
    pub vectors: CMatrix<T>,
}

impl<T: Scalar> Eigen<T> {
    /// Largest `|λ|`.
    pub fn max_abs_value(&self) -> T {
        self.values
            .iter()
            .map(|v| v.abs())
            .fold(T::zero(), |a, b| if b > a { b } else { a })
    }

    /// Column `j` of the eigenvector matrix.
    pub fn vector(&self, j: usize) -> Vec<C<T>> {
        (0..self.vectors.dim()).map(|i| self.vectors[(i, j)]).collect()
    }
}

fn offdiag_norm<T: Scalar>(a: &CMatrix<T>) -> T {
    let n = a.dim();
    let mut s = T::zero();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi sweeps.
///
/// Converges when the off-diagonal Frobenius norm drops below
/// `1e-13 * ‖H‖_F`; errors out with the residual after 100 sweeps.
pub fn hermitian_eigen<T: Scalar>(h: &HermitianMatrix<T>) -> Result<Eigen<T>> {
    let n = h.dim();
    let mut a = h.matrix().clone();
    let mut v = CMatrix::identity(n);

    if n <= 1 {
        return Ok(Eigen {
            values: (0..n).map(|i| a[(i, i)].re).collect(),
            vectors: v,
        });
    }

    let fro = a.hs_norm();
    let threshold = tol::jacobi_threshold::<T>(fro);

    let mut converged = fro.is_zero();
    for _sweep in 0..tol::JACOBI_MAX_SWEEPS {
        if offdiag_norm(&a) <= threshold {
            converged = true;
            break;
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    if !converged && offdiag_norm(&a) > threshold {
        return Err(Error::NonConvergence {
            residual: offdiag_norm(&a).to_f64().unwrap_or(f64::NAN),
        });
    }

    // Diagonal is real up to rounding at this point.
    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<T> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].partial_cmp(&diag[j]).expect("finite eigenvalues"));

    let values: Vec<T> = order.iter().map(|&i| diag[i]).collect();
    let mut vectors = CMatrix::zeros(n);
    for (new_col, &old_col) in order.iter().enumerate() {
        for row in 0..n {
            vectors[(row, new_col)] = v[(row, old_col)];
        }
    }
    Ok(Eigen { values, vectors })
}

/// One Jacobi rotation annihilating `a[(p,q)]`, accumulating into `v`.
fn rotate<T: Scalar>(a: &mut CMatrix<T>, v: &mut CMatrix<T>, p: usize, q: usize) {
    let apq = a[(p, q)];
    let beta = apq.norm();
    if beta.is_zero() {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Phase that makes the pivot real: apq = beta * u.
    let u = apq / Complex::new(beta, T::zero());

    // Real 2x2 rotation for [[app, beta], [beta, aqq]].
    let theta = (aqq - app) / (real::<T>(2.0) * beta);
    let t = if theta >= T::zero() {
        T::one() / (theta + (T::one() + theta * theta).sqrt())
    } else {
        -T::one() / (-theta + (T::one() + theta * theta).sqrt())
    };
    let c = T::one() / (T::one() + t * t).sqrt();
    let s = t * c;

    // Plane unitary J: J[p][p]=c, J[p][q]=s, J[q][p]=-s*conj(u), J[q][q]=c*conj(u).
    let cc = Complex::new(c, T::zero());
    let ss = Complex::new(s, T::zero());
    let jqp = -ss * u.conj();
    let jqq = cc * u.conj();

    let n = a.dim();
    // A <- A J (columns p, q mix).
    for r in 0..n {
        let arp = a[(r, p)];
        let arq = a[(r, q)];
        a[(r, p)] = arp * cc + arq * jqp;
        a[(r, q)] = arp * ss + arq * jqq;
    }
    // A <- J† A (rows p, q mix).
    for rcol in 0..n {
        let apr = a[(p, rcol)];
        let aqr = a[(q, rcol)];
        a[(p, rcol)] = apr * cc.conj() + aqr * jqp.conj();
        a[(q, rcol)] = apr * ss.conj() + aqr * jqq.conj();
    }
    // Enforce the exact zero and real diagonal to stop drift.
    a[(p, q)] = C::zero();
    a[(q, p)] = C::zero();
    let dpp = a[(p, p)];
    a[(p, p)] = Complex::new(dpp.re, T::zero());
    let dqq = a[(q, q)];
    a[(q, q)] = Complex::new(dqq.re, T::zero());

    // V <- V J.
    for r in 0..n {
        let vrp = v[(r, p)];
        let vrq = v[(r, q)];
        v[(r, p)] = vrp * cc + vrq * jqp;
        v[(r, q)] = vrp * ss + vrq * jqq;
    }
}

/// Operator norm: the largest singular value, `sqrt(λ_max(A†A))`.
pub fn operator_norm<T: Scalar>(a: &CMatrix<T>) -> T {
    let gram = HermitianMatrix::symmetrized(a.adjoint().matmul(a));
    let eig = hermitian_eigen(&gram).expect("Gram matrix eigensolve");
    let top = eig.values.last().copied().unwrap_or_else(T::zero);
    if top > T::zero() {
        top.sqrt()
    } else {
        T::zero()
    }
}

/// Operator norm of a Hermitian matrix: `max |λ_i|`.
pub fn hermitian_operator_norm<T: Scalar>(h: &HermitianMatrix<T>) -> T {
    hermitian_eigen(h).expect("Hermitian eigensolve").max_abs_value()
}

/// Trace norm `‖A‖₁ = tr sqrt(A†A)`: the sum of singular values.
pub fn trace_norm<T: Scalar>(a: &CMatrix<T>) -> T {
    let gram = HermitianMatrix::symmetrized(a.adjoint().matmul(a));
    let eig = hermitian_eigen(&gram).expect("Gram matrix eigensolve");
    eig.values
        .iter()
        .map(|&l| if l > T::zero() { l.sqrt() } else { T::zero() })
        .fold(T::zero(), |a, b| a + b)
}

/// Trace norm of a Hermitian matrix: `Σ |λ_i|`.
pub fn hermitian_trace_norm<T: Scalar>(h: &HermitianMatrix<T>) -> T {
    hermitian_eigen(h)
        .expect("Hermitian eigensolve")
        .values
        .iter()
        .map(|l| l.abs())
        .fold(T::zero(), |a, b| a + b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::pauli::{pauli, sigma};
    use crate::scalar::cplx;

    type M = CMatrix<f64>;
    type H = HermitianMatrix<f64>;

    #[test]
    fn diagonal_matrix_is_sorted() {
        let h = H::diagonal(&[3.0, 1.0]);
        let e = hermitian_eigen(&h).unwrap();
        assert_eq!(e.values, vec![1.0, 3.0]);
        // permutation eigenvectors
        assert!((e.vectors[(0, 1)].norm() - 1.0).abs() < 1e-14);
        assert!((e.vectors[(1, 0)].norm() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn pauli_x_spectrum() {
        let e = hermitian_eigen(&pauli::<f64>(1)).unwrap();
        assert!((e.values[0] + 1.0).abs() < 1e-13);
        assert!((e.values[1] - 1.0).abs() < 1e-13);
    }

    #[test]
    fn swap_built_dirac_spectrum() {
        // (1/4) Σ σ_i ⊗ σ_i = (1/4)(2 SWAP - I): eigenvalues (-3/4, 1/4, 1/4, 1/4).
        let mut d = M::zeros(4);
        for i in 1..=3 {
            d = &d + &sigma(i).kron(&sigma(i));
        }
        let d = HermitianMatrix::new(d.scale_re(0.25)).unwrap();
        let e = hermitian_eigen(&d).unwrap();
        let expect = [-0.75, 0.25, 0.25, 0.25];
        for (got, want) in e.values.iter().zip(expect.iter()) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn reconstruction_and_unitarity() {
        // Fixed non-trivial Hermitian matrix.
        let m = M::from_rows_f64(&[
            vec![(2.0, 0.0), (1.0, -0.5), (0.0, 0.3)],
            vec![(1.0, 0.5), (-1.0, 0.0), (0.7, 0.0)],
            vec![(0.0, -0.3), (0.7, 0.0), (0.5, 0.0)],
        ])
        .unwrap();
        let h = HermitianMatrix::new(m).unwrap();
        let e = hermitian_eigen(&h).unwrap();
        let n = h.dim();

        // V†V = I
        let vtv = e.vectors.adjoint().matmul(&e.vectors);
        assert!(vtv.approx_eq(&M::identity(n), 1e-12));

        // V diag(λ) V† = H
        let mut lam = M::zeros(n);
        for i in 0..n {
            lam[(i, i)] = cplx(e.values[i], 0.0);
        }
        let rec = e.vectors.matmul(&lam).matmul(&e.vectors.adjoint());
        assert!(rec.approx_eq(h.matrix(), 1e-12));
    }

    #[test]
    fn operator_norm_examples() {
        assert!((operator_norm(&M::identity(5)) - 1.0).abs() < 1e-13);
        let s3: M = sigma(3);
        assert!((operator_norm(&s3) - 1.0).abs() < 1e-13);
    }

    #[test]
    fn block_antidiagonal_norm_is_block_norm() {
        // [[0, -a], [a, 0]] has operator norm ‖a‖_op.
        let a = M::from_rows_f64(&[vec![(1.0, 0.0), (2.0, 0.0)], vec![(0.0, 1.0), (-0.5, 0.0)]])
            .unwrap();
        let mut blk = M::zeros(4);
        for i in 0..2 {
            for j in 0..2 {
                blk[(i, 2 + j)] = -a[(i, j)];
                blk[(2 + i, j)] = a[(i, j)];
            }
        }
        assert!((operator_norm(&blk) - operator_norm(&a)).abs() < 1e-12);
    }

    #[test]
    fn trace_norm_examples() {
        assert_eq!(trace_norm(&M::zeros(3)), 0.0);
        let h = H::diagonal(&[0.6, -0.6]);
        assert!((hermitian_trace_norm(&h) - 1.2).abs() < 1e-13);
        // ½(r·σ) with |r| = 1 has eigenvalues ±½ : trace norm 1.
        let r = [2.0 / 3.0, -1.0 / 3.0, 2.0 / 3.0];
        let mut m = M::zeros(2);
        for (i, &coef) in r.iter().enumerate() {
            m = &m + &sigma::<f64>(i + 1).scale_re(coef);
        }
        assert!((trace_norm(&m.scale_re(0.5)) - 1.0).abs() < 1e-13);
    }
}
