//! The explicit Dirac-operator constructions.

use crate::error::{Error, Result};
use crate::matcore::{hermitian_operator_norm, sigma, CMatrix, HermitianBasis, HermitianMatrix, Sign};
use crate::scalar::{real, Scalar};
use crate::triple::{IsometryFlag, Representation, SpectralTriple};

/// The two-point space: diagonal 2×2 matrices with `D = ½σ₁`.
///
/// The algebra is modeled as the diagonal subalgebra of `M₂(C)` through a
/// basis mask, so the seminorm and the solver restrict to diagonal Hermitian
/// elements. On those, `‖[D, e]‖_op = ‖e‖_op` holds for traceless `e`.
pub fn dirac_two_point<T: Scalar>() -> Result<SpectralTriple<T>> {
    let d = HermitianMatrix::symmetrized(sigma::<T>(1).scale_re(real(0.5)));
    let mask = HermitianBasis::<T>::new(2)?.diagonal_indices();
    SpectralTriple::assemble(
        Representation::Identity { n: 2 },
        d,
        "two_point",
        IsometryFlag::OnTraceless,
        Some(mask),
        None,
    )
}

/// Corner embedding on `C^n ⊕ C^n` with `D = [[0, I], [I, 0]]`.
///
/// The commutator square is `diag(a†a, a†a)`, so the seminorm equals the
/// operator norm on every element of `M_n(C)`.
pub fn dirac_corner<T: Scalar>(n: usize) -> Result<SpectralTriple<T>> {
    if n < 1 {
        return Err(Error::argument("corner construction needs n >= 1"));
    }
    let mut d = CMatrix::zeros(2 * n);
    for i in 0..n {
        d[(i, n + i)] = num_complex::Complex::new(T::one(), T::zero());
        d[(n + i, i)] = num_complex::Complex::new(T::one(), T::zero());
    }
    SpectralTriple::assemble(
        Representation::Corner { n },
        HermitianMatrix::symmetrized(d),
        "corner",
        IsometryFlag::OnAll,
        None,
        None,
    )
}

fn check_permutation(p: &[usize; 3], what: &str) -> Result<()> {
    let mut seen = [false; 3];
    for &i in p {
        if !(1..=3).contains(&i) {
            return Err(Error::argument(format!(
                "{what} must contain indices 1..=3, got {i}"
            )));
        }
        seen[i - 1] = true;
    }
    if seen != [true; 3] {
        return Err(Error::argument(format!(
            "{what} must be a permutation of (1, 2, 3)"
        )));
    }
    Ok(())
}

/// Signed, permuted qubit Dirac `D₄' = ¼ Σᵢ ±σᵢ ⊗ σ_{perm(i)}` with the
/// diagonal representation `π(a) = I₂ ⊗ a` on `C⁴`.
pub fn dirac_d4<T: Scalar>(signs: [Sign; 3], perm: [usize; 3]) -> Result<SpectralTriple<T>> {
    check_permutation(&perm, "d4 permutation")?;
    let quarter = real::<T>(0.25);
    let mut d = CMatrix::zeros(4);
    let mut terms = Vec::with_capacity(3);
    for i in 0..3 {
        let left = sigma::<T>(i + 1).scale_re(signs[i].factor::<T>() * quarter);
        let right = sigma::<T>(perm[i]);
        d = &d + &left.kron(&right);
        terms.push((left, right));
    }
    SpectralTriple::assemble(
        Representation::Diagonal { n: 2, copies: 2 },
        HermitianMatrix::symmetrized(d),
        "d4",
        IsometryFlag::OnTraceless,
        None,
        Some(terms),
    )
}

/// The paper's default `D₄ = ¼ Σᵢ σᵢ ⊗ σᵢ`.
pub fn dirac_d4_default<T: Scalar>() -> Result<SpectralTriple<T>> {
    dirac_d4([Sign::Plus; 3], [1, 2, 3])
}

/// One tensor factor of a `D_{4ⁿ}` operator: a signed pair of Pauli
/// permutations `±σ_{left(i)} ⊗ σ_{right(i)}`.
#[derive(Clone, Copy, Debug)]
pub struct D4nFactor {
    pub left: [usize; 3],
    pub right: [usize; 3],
    pub sign: Sign,
}

impl D4nFactor {
    pub fn plain() -> Self {
        D4nFactor {
            left: [1, 2, 3],
            right: [1, 2, 3],
            sign: Sign::Plus,
        }
    }
}

/// Recursive qubit Dirac on `C^{4ⁿ}`:
///
/// ```text
/// D_{4ⁿ} = ¼ Σᵢ σ_{iₙ,iₙ'} ⊗ … ⊗ σ_{i₁,i₁'},   σ_{iₖ,iₖ'} = ±σ_{iₖ} ⊗ σ_{iₖ'}
/// ```
///
/// `factors[0]` is the innermost pair (its right Pauli acts on the algebra
/// slot); the representation is `π(e) = I_{2·4^{n-1}} ⊗ e`. Capped at
/// `n <= 3` to keep dense eigensolves desk-scale.
pub fn dirac_d4n<T: Scalar>(factors: &[D4nFactor]) -> Result<SpectralTriple<T>> {
    let n = factors.len();
    if n == 0 {
        return Err(Error::argument("d4n needs at least one factor"));
    }
    if n >= 4 {
        return Err(Error::capacity(format!(
            "d4n supports n <= 3 (Hilbert dimension 4ⁿ); got n = {n}"
        )));
    }
    for f in factors {
        check_permutation(&f.left, "d4n left permutation")?;
        check_permutation(&f.right, "d4n right permutation")?;
    }
    let copies = 1usize << (2 * n - 1);
    let quarter = real::<T>(0.25);
    let hilbert = 4usize.pow(n as u32);
    let mut d = CMatrix::zeros(hilbert);
    let mut terms = Vec::with_capacity(3);
    for i in 0..3 {
        // Fold from the outermost factor down; peel the innermost right
        // Pauli off as the term's algebra-side tensor leg.
        let mut s = CMatrix::<T>::identity(1);
        for f in factors.iter().skip(1).rev() {
            s = s
                .kron(&sigma(f.left[i]))
                .kron(&sigma(f.right[i]))
                .scale_re(f.sign.factor::<T>());
        }
        let inner = &factors[0];
        s = s
            .kron(&sigma(inner.left[i]))
            .scale_re(inner.sign.factor::<T>() * quarter);
        let t = sigma::<T>(inner.right[i]);
        d = &d + &s.kron(&t);
        terms.push((s, t));
    }
    SpectralTriple::assemble(
        Representation::Diagonal { n: 2, copies },
        HermitianMatrix::symmetrized(d),
        "d4n",
        IsometryFlag::OnTraceless,
        None,
        Some(terms),
    )
}

/// Tensor insertion: from a base triple with `D = Σ Sᵢ ⊗ Tᵢ` and diagonal
/// representation, build `D' = Σ Sᵢ ⊗ M̃ ⊗ Tᵢ` with `M̃ = M / ‖M‖_op` and the
/// representation enlarged to `π'(a) = I_{m·dim(M)} ⊗ a`.
///
/// The ball conditions of the two triples coincide, so the base triple's
/// isometry flag carries over.
pub fn dirac_tensor_insert<T: Scalar>(
    base: &SpectralTriple<T>,
    m: &HermitianMatrix<T>,
) -> Result<SpectralTriple<T>> {
    let terms = base.tensor_terms().ok_or_else(|| {
        Error::argument("tensor insertion needs a base Dirac with a known term decomposition")
    })?;
    let copies = base.diagonal_copies().ok_or_else(|| {
        Error::argument("tensor insertion needs a base triple with a diagonal representation")
    })?;
    let m_norm = hermitian_operator_norm(m);
    if m_norm <= T::zero() {
        return Err(Error::argument("tensor insertion needs a non-zero M"));
    }
    let m_tilde = m.matrix().scale_re(T::one() / m_norm);

    let n = base.algebra_dim();
    let hilbert = copies * m.dim() * n;
    let mut d = CMatrix::zeros(hilbert);
    let mut new_terms = Vec::with_capacity(terms.len());
    for (s, t) in terms {
        let s_new = s.kron(&m_tilde);
        d = &d + &s_new.kron(t);
        new_terms.push((s_new, t.clone()));
    }
    SpectralTriple::assemble(
        Representation::Diagonal {
            n,
            copies: copies * m.dim(),
        },
        HermitianMatrix::symmetrized(d),
        format!("{}*insert", base.dirac().tag()),
        base.isometric_flag(),
        None,
        Some(new_terms),
    )
}

/// The two unitaries that cyclically permute the Pauli matrices:
/// `U₊ σ₁ U₊† = σ₂, U₊ σ₂ U₊† = σ₃, U₊ σ₃ U₊† = σ₁` and the reverse cycle
/// for `U₋`.
pub fn permutation_unitaries<T: Scalar>() -> (CMatrix<T>, CMatrix<T>) {
    let u_plus = CMatrix::from_rows_f64(&[
        vec![(0.5, -0.5), (-0.5, -0.5)],
        vec![(0.5, -0.5), (0.5, 0.5)],
    ])
    .expect("U+ entries");
    let u_minus = CMatrix::from_rows_f64(&[
        vec![(0.5, 0.5), (0.5, 0.5)],
        vec![(-0.5, 0.5), (0.5, -0.5)],
    ])
    .expect("U- entries");
    (u_plus, u_minus)
}
