//! Real coordinates for the distance problem.
//!
//! The supremum runs over Hermitian elements modulo the seminorm kernel (and
//! modulo trace for unital representations, where the identity already lies
//! in the kernel). This module builds an HS-orthonormal basis `V₁..V_M` of
//! that reduced space and precomputes the Hermitian commutator images
//! `K_j = -i [D, π(V_j)]`, so that for `e(x) = Σ xⱼ Vⱼ`:
//!
//! * objective `tr(Δρ e(x)) = ⟨w, x⟩` with `wⱼ = ⟨Vⱼ, Δρ⟩`,
//! * seminorm `L(e(x)) = ‖Σ xⱼ Kⱼ‖_op`, a norm on the reduced space.

use crate::error::Result;
use crate::matcore::{hermitian_eigen, CMatrix, HermitianMatrix};
use crate::scalar::{real, Scalar};
use crate::triple::SpectralTriple;
use num_complex::Complex;

pub(crate) struct SearchSpace<T: Scalar> {
    /// HS-orthonormal Hermitian directions in the algebra.
    directions: Vec<HermitianMatrix<T>>,
    /// `K_j = -i [D, π(V_j)]`, Hermitian on the Hilbert space.
    k_ops: Vec<HermitianMatrix<T>>,
}

/// Supergradient data of `L` at a point: the averaged eigenframe of `K(x)`.
pub(crate) struct Frame<T: Scalar> {
    /// `L(x) = max |λ|` of `K(x)`.
    pub norm: T,
    /// `γ_j = ⟨P, K_j⟩` for the averaged top frame `P`.
    pub grad: Vec<T>,
}

impl<T: Scalar> SearchSpace<T> {
    pub fn build(triple: &SpectralTriple<T>) -> Result<Self> {
        let kernel = triple.seminorm_kernel();
        let mut directions: Vec<HermitianMatrix<T>> = Vec::new();

        for idx in triple.element_indices() {
            let mut cand = triple.basis().orthonormal_element(idx);
            // Project out the kernel, then already-accepted directions
            // (two passes of modified Gram-Schmidt for stability).
            for _ in 0..2 {
                for k in kernel {
                    let c = k.hs_inner_re(&cand);
                    cand = &cand - &k.scale_re(c);
                }
                for v in &directions {
                    let c = v.hs_inner_re(&cand);
                    cand = &cand - &v.scale_re(c);
                }
            }
            let norm = cand.matrix().hs_norm();
            if norm > real::<T>(1e-8) {
                directions.push(cand.scale_re(T::one() / norm));
            }
        }

        let mut k_ops = Vec::with_capacity(directions.len());
        for v in &directions {
            let c = triple.dirac_commutator(v.matrix())?;
            let k = HermitianMatrix::symmetrized(c.scale(Complex::new(T::zero(), -T::one())));
            k_ops.push(k);
        }
        Ok(SearchSpace { directions, k_ops })
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.directions.len()
    }

    #[inline]
    pub fn hilbert_dim(&self) -> usize {
        self.k_ops.first().map_or(0, |k| k.dim())
    }

    #[inline]
    pub fn k_ops(&self) -> &[HermitianMatrix<T>] {
        &self.k_ops
    }

    /// Objective coefficients for a Hermitian target (usually `Δρ`).
    pub fn objective_coefficients(&self, delta: &HermitianMatrix<T>) -> Vec<T> {
        self.directions.iter().map(|v| v.hs_inner_re(delta)).collect()
    }

    /// The algebra element `e(x) = Σ xⱼ Vⱼ`.
    pub fn element(&self, x: &[T]) -> HermitianMatrix<T> {
        let n = self.directions[0].dim();
        let mut m = CMatrix::zeros(n);
        for (v, &c) in self.directions.iter().zip(x.iter()) {
            m = &m + &v.matrix().scale_re(c);
        }
        HermitianMatrix::symmetrized(m)
    }

    /// `K(x) = Σ xⱼ Kⱼ`.
    pub fn k_of(&self, x: &[T]) -> HermitianMatrix<T> {
        let n = self.hilbert_dim();
        let mut m = CMatrix::zeros(n);
        for (k, &c) in self.k_ops.iter().zip(x.iter()) {
            m = &m + &k.matrix().scale_re(c);
        }
        HermitianMatrix::symmetrized(m)
    }

    /// Seminorm in coordinates.
    pub fn seminorm(&self, x: &[T]) -> T {
        hermitian_eigen(&self.k_of(x))
            .expect("K(x) eigensolve")
            .max_abs_value()
    }

    /// Seminorm together with its (averaged-frame) supergradient.
    ///
    /// Eigenvalues within `1e-9·max(1, L)` of `±L` are averaged into the
    /// frame, which keeps the ascent stable at symmetric optima where the
    /// top eigenvalue is degenerate.
    pub fn frame(&self, x: &[T]) -> Frame<T> {
        let k = self.k_of(x);
        let eig = hermitian_eigen(&k).expect("K(x) eigensolve");
        let mu = eig.max_abs_value();
        if mu.is_zero() {
            return Frame {
                norm: mu,
                grad: vec![T::zero(); self.dim()],
            };
        }
        let band = real::<T>(1e-9) * if mu > T::one() { mu } else { T::one() };
        let n = k.dim();
        let mut p = CMatrix::<T>::zeros(n);
        let mut count = 0usize;
        for (idx, &lam) in eig.values.iter().enumerate() {
            if (mu - lam.abs()) > band {
                continue;
            }
            let sign = if lam > T::zero() { T::one() } else { -T::one() };
            let v = eig.vector(idx);
            for i in 0..n {
                for j in 0..n {
                    let w = p[(i, j)] + v[i] * v[j].conj() * Complex::new(sign, T::zero());
                    p[(i, j)] = w;
                }
            }
            count += 1;
        }
        let p = HermitianMatrix::symmetrized(p.scale_re(T::one() / real(count as f64)));
        let grad = self.k_ops.iter().map(|kj| p.hs_inner_re(kj)).collect();
        Frame { norm: mu, grad }
    }

    /// Certified objective/seminorm ratio at a direction; `None` when the
    /// seminorm vanishes numerically (cannot happen on a reduced space with
    /// the kernel projected out, but guarded anyway).
    pub fn ratio(&self, w: &[T], x: &[T]) -> Option<T> {
        let l = self.seminorm(x);
        if l <= T::epsilon() * real(16.0) {
            return None;
        }
        Some(dot(w, x) / l)
    }
}

#[inline]
pub(crate) fn dot<T: Scalar>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b.iter()).map(|(&x, &y)| x * y).sum()
}

#[inline]
pub(crate) fn norm2<T: Scalar>(a: &[T]) -> T {
    dot(a, a).sqrt()
}

pub(crate) fn normalize<T: Scalar>(a: &mut [T]) -> bool {
    let n = norm2(a);
    if n <= T::zero() {
        return false;
    }
    for x in a.iter_mut() {
        *x /= n;
    }
    true
}

/// Solve the small dense SPD-ish system `G y = b` by Gaussian elimination
/// with partial pivoting. Returns `None` on a vanishing pivot.
pub(crate) fn solve_real<T: Scalar>(g: &[Vec<T>], b: &[T]) -> Option<Vec<T>> {
    let n = b.len();
    let mut a: Vec<Vec<T>> = g.to_vec();
    let mut rhs = b.to_vec();
    for col in 0..n {
        let (pivot_row, pivot) = (col..n)
            .map(|r| (r, a[r][col].abs()))
            .fold((col, T::zero()), |acc, cur| if cur.1 > acc.1 { cur } else { acc });
        if pivot <= T::epsilon() * real(1e3) {
            return None;
        }
        a.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        for r in col + 1..n {
            let f = a[r][col] / a[col][col];
            let pivot_row_vals: Vec<T> = a[col][col..n].to_vec();
            for (c, &v) in (col..n).zip(pivot_row_vals.iter()) {
                a[r][c] -= f * v;
            }
            let v = rhs[col];
            rhs[r] -= f * v;
        }
    }
    let mut y = vec![T::zero(); n];
    for row in (0..n).rev() {
        let mut acc = rhs[row];
        for c in row + 1..n {
            acc -= a[row][c] * y[c];
        }
        y[row] = acc / a[row][row];
    }
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::{random_traceless_hermitian, rng_from_seed};
    use crate::triple::{dirac_corner, dirac_d4_default, dirac_two_point};

    #[test]
    fn d4_search_space_is_three_dimensional() {
        let t = dirac_d4_default::<f64>().unwrap();
        let s = SearchSpace::build(&t).unwrap();
        assert_eq!(s.dim(), 3);
        // all directions traceless and orthonormal
        for i in 0..3 {
            assert!(s.directions[i].trace_re().abs() < 1e-12);
            for j in 0..3 {
                let ip = s.directions[i].hs_inner_re(&s.directions[j]);
                let want = if i == j { 1.0 } else { 0.0 };
                assert!((ip - want).abs() < 1e-12);
            }
        }
    }

    #[test]
    fn corner_search_space_keeps_trace_direction() {
        let t = dirac_corner::<f64>(2).unwrap();
        let s = SearchSpace::build(&t).unwrap();
        assert_eq!(s.dim(), 4);
    }

    #[test]
    fn two_point_search_space_is_one_dimensional() {
        let t = dirac_two_point::<f64>().unwrap();
        let s = SearchSpace::build(&t).unwrap();
        assert_eq!(s.dim(), 1);
    }

    #[test]
    fn seminorm_matches_triple() {
        let t = dirac_d4_default::<f64>().unwrap();
        let s = SearchSpace::build(&t).unwrap();
        let mut rng = rng_from_seed(77);
        for _ in 0..10 {
            let e = random_traceless_hermitian::<f64, _>(2, &mut rng).unwrap();
            let x = s.objective_coefficients(&e);
            let l_direct = t.lipschitz_seminorm(s.element(&x).matrix()).unwrap();
            assert!((s.seminorm(&x) - l_direct).abs() < 1e-12);
        }
    }

    #[test]
    fn euler_identity_for_frame() {
        let t = dirac_d4_default::<f64>().unwrap();
        let s = SearchSpace::build(&t).unwrap();
        let x = [0.3, -0.8, 0.5];
        let f = s.frame(&x);
        assert!((dot(&f.grad, &x) - f.norm).abs() < 1e-9);
    }

    #[test]
    fn solve_real_small_system() {
        let g: Vec<Vec<f64>> = vec![vec![4.0, 1.0], vec![1.0, 3.0]];
        let b = vec![1.0f64, 2.0];
        let y = solve_real(&g, &b).unwrap();
        assert!((4.0 * y[0] + y[1] - 1.0).abs() < 1e-12);
        assert!((y[0] + 3.0 * y[1] - 2.0).abs() < 1e-12);
    }
}
