//! Finite spectral triples: representations, Dirac operators, the Lipschitz
//! seminorm and its kernel.
//!
//! Everything here is finite-dimensional, so the boundedness of the
//! commutators is automatic and the compact-resolvent axiom is vacuous; it
//! is recorded here as a convention but never checked. Representations are
//! linear and preserve Hermiticity; unitality is a flag, not a requirement.

mod constructors;

pub use constructors::{
    dirac_corner, dirac_d4, dirac_d4_default, dirac_d4n, dirac_tensor_insert, dirac_two_point,
    permutation_unitaries, D4nFactor,
};

use crate::error::{Error, Result};
use crate::matcore::{
    hermitian_eigen, hermitian_operator_norm, operator_norm, CMatrix, HermitianBasis,
    HermitianMatrix,
};
use crate::scalar::{real, Scalar};
use crate::tol;
use num_complex::Complex;

/// How the algebra acts on the Hilbert space.
///
/// All variants are linear and preserve Hermiticity (for `Custom` this is
/// enforced by requiring Hermitian basis images).
#[derive(Clone, Debug)]
pub enum Representation<T: Scalar> {
    /// `π(a) = a` on `C^n`.
    Identity { n: usize },
    /// `π(a) = I_m ⊗ a` on `C^{m n}`.
    Diagonal { n: usize, copies: usize },
    /// `π(a) = [[a, 0], [0, 0]]` on `C^n ⊕ C^n`. Not unital.
    Corner { n: usize },
    /// Explicit linear map given by one Hermitian image per element of the
    /// Hermitian basis of `M_n(C)`, extended complex-linearly.
    Custom {
        n: usize,
        images: Vec<HermitianMatrix<T>>,
    },
}

impl<T: Scalar> Representation<T> {
    /// Validating constructor for the `Custom` variant.
    pub fn custom(n: usize, images: Vec<HermitianMatrix<T>>) -> Result<Self> {
        if images.len() != n * n {
            return Err(Error::argument(format!(
                "custom representation needs n² = {} basis images, got {}",
                n * n,
                images.len()
            )));
        }
        let hdim = images[0].dim();
        if images.iter().any(|m| m.dim() != hdim) {
            return Err(Error::argument(
                "custom representation images must share one Hilbert dimension",
            ));
        }
        Ok(Representation::Custom { n, images })
    }

    pub fn algebra_dim(&self) -> usize {
        match *self {
            Representation::Identity { n }
            | Representation::Diagonal { n, .. }
            | Representation::Corner { n }
            | Representation::Custom { n, .. } => n,
        }
    }

    pub fn hilbert_dim(&self) -> usize {
        match self {
            Representation::Identity { n } => *n,
            Representation::Diagonal { n, copies } => n * copies,
            Representation::Corner { n } => 2 * n,
            Representation::Custom { images, .. } => images[0].dim(),
        }
    }

    /// Whether `π(I_n) = I_N`.
    pub fn is_unital(&self) -> bool {
        match self {
            Representation::Identity { .. } | Representation::Diagonal { .. } => true,
            Representation::Corner { .. } => false,
            Representation::Custom { n, images } => {
                let basis = HermitianBasis::<T>::new(*n).expect("basis");
                let img = apply_custom(&basis, images, &CMatrix::identity(*n));
                img.approx_eq(
                    &CMatrix::identity(self.hilbert_dim()),
                    tol::construction::<T>(),
                )
            }
        }
    }

    /// Apply the representation to an algebra element.
    pub fn apply(&self, e: &CMatrix<T>) -> Result<CMatrix<T>> {
        if e.dim() != self.algebra_dim() {
            return Err(Error::Dimension {
                expected: self.algebra_dim(),
                got: e.dim(),
            });
        }
        Ok(match self {
            Representation::Identity { .. } => e.clone(),
            Representation::Diagonal { n, copies } => {
                let mut out = CMatrix::zeros(n * copies);
                for b in 0..*copies {
                    for i in 0..*n {
                        for j in 0..*n {
                            out[(b * n + i, b * n + j)] = e[(i, j)];
                        }
                    }
                }
                out
            }
            Representation::Corner { n } => {
                let mut out = CMatrix::zeros(2 * n);
                for i in 0..*n {
                    for j in 0..*n {
                        out[(i, j)] = e[(i, j)];
                    }
                }
                out
            }
            Representation::Custom { n, images } => {
                let basis = HermitianBasis::<T>::new(*n).expect("basis");
                apply_custom(&basis, images, e)
            }
        })
    }
}

/// Complex-linear extension of the basis-image map: split `e = h₁ + i h₂`
/// into Hermitian parts and push each through the images.
fn apply_custom<T: Scalar>(
    basis: &HermitianBasis<T>,
    images: &[HermitianMatrix<T>],
    e: &CMatrix<T>,
) -> CMatrix<T> {
    let h1 = HermitianMatrix::symmetrized(e.clone());
    let anti = e - &e.adjoint();
    let h2 = HermitianMatrix::symmetrized(anti.scale(Complex::new(T::zero(), -real::<T>(0.5))));
    let n_out = images[0].dim();
    let mut out = CMatrix::zeros(n_out);
    for (k, img) in images.iter().enumerate() {
        let b = basis.element(k);
        let norm_sq = b.matrix().hs_norm().powi(2);
        let c1 = b.hs_inner_re(&h1) / norm_sq;
        let c2 = b.hs_inner_re(&h2) / norm_sq;
        out = &out + &img.matrix().scale(Complex::new(c1, c2));
    }
    out
}

/// Certified relation between the Lipschitz seminorm and the operator norm
/// on the triple's element space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsometryFlag {
    /// `‖[D, π(e)]‖_op = ‖e‖_op` for every element.
    OnAll,
    /// The relation holds on traceless Hermitian elements.
    OnTraceless,
    /// No certified relation; the solver uses the general path.
    No,
}

/// Hermitian Dirac operator, stored traceless-normalized.
#[derive(Clone, Debug)]
pub struct DiracOperator<T: Scalar> {
    matrix: HermitianMatrix<T>,
    tag: String,
}

impl<T: Scalar> DiracOperator<T> {
    /// Subtracts `(tr D / N) I` and records a provenance tag.
    pub fn new(matrix: HermitianMatrix<T>, tag: impl Into<String>) -> Self {
        DiracOperator {
            matrix: matrix.traceless_part(),
            tag: tag.into(),
        }
    }

    #[inline]
    pub fn matrix(&self) -> &HermitianMatrix<T> {
        &self.matrix
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    #[inline]
    pub fn tag(&self) -> &str {
        &self.tag
    }
}

/// A finite spectral triple with cached seminorm-kernel analysis.
///
/// Immutable after construction; the kernel basis is computed eagerly so
/// concurrent readers never race on a cache.
#[derive(Clone, Debug)]
pub struct SpectralTriple<T: Scalar> {
    rep: Representation<T>,
    dirac: DiracOperator<T>,
    basis: HermitianBasis<T>,
    /// Indices into the Hermitian basis spanning the subalgebra the triple
    /// works over; `None` means the full matrix algebra.
    subalgebra: Option<Vec<usize>>,
    kernel_basis: Vec<HermitianMatrix<T>>,
    isometric: IsometryFlag,
    /// Term decomposition `D = Σ Sᵢ ⊗ Tᵢ` when one is known by construction
    /// (needed by tensor insertion).
    tensor_terms: Option<Vec<(CMatrix<T>, CMatrix<T>)>>,
}

impl<T: Scalar> SpectralTriple<T> {
    /// General constructor: any representation and Hermitian Dirac matrix.
    pub fn new(
        rep: Representation<T>,
        dirac: HermitianMatrix<T>,
        tag: impl Into<String>,
    ) -> Result<Self> {
        Self::assemble(rep, dirac, tag, IsometryFlag::No, None, None)
    }

    /// General constructor restricted to the subalgebra spanned by the given
    /// Hermitian-basis directions.
    pub fn new_with_subalgebra(
        rep: Representation<T>,
        dirac: HermitianMatrix<T>,
        tag: impl Into<String>,
        mask: Vec<usize>,
    ) -> Result<Self> {
        Self::assemble(rep, dirac, tag, IsometryFlag::No, Some(mask), None)
    }

    /// Dirac built from an explicit term list `D = Σ Sᵢ ⊗ Tᵢ` acting with
    /// the diagonal representation `π(a) = I_m ⊗ a`. The term list is kept,
    /// so the triple can serve as a tensor-insertion base.
    pub fn from_tensor_terms(
        algebra_dim: usize,
        terms: Vec<(CMatrix<T>, CMatrix<T>)>,
        tag: impl Into<String>,
    ) -> Result<Self> {
        if terms.is_empty() {
            return Err(Error::argument("term list must not be empty"));
        }
        let copies = terms[0].0.dim();
        if terms
            .iter()
            .any(|(s, t)| s.dim() != copies || t.dim() != algebra_dim)
        {
            return Err(Error::argument(
                "tensor terms must share dimensions (S: copies, T: algebra)",
            ));
        }
        let mut d = CMatrix::zeros(copies * algebra_dim);
        for (s, t) in &terms {
            d = &d + &s.kron(t);
        }
        Self::assemble(
            Representation::Diagonal {
                n: algebra_dim,
                copies,
            },
            HermitianMatrix::new(d)?,
            tag,
            IsometryFlag::No,
            None,
            Some(terms),
        )
    }

    pub(crate) fn assemble(
        rep: Representation<T>,
        dirac: HermitianMatrix<T>,
        tag: impl Into<String>,
        isometric: IsometryFlag,
        subalgebra: Option<Vec<usize>>,
        tensor_terms: Option<Vec<(CMatrix<T>, CMatrix<T>)>>,
    ) -> Result<Self> {
        if dirac.dim() != rep.hilbert_dim() {
            return Err(Error::Dimension {
                expected: rep.hilbert_dim(),
                got: dirac.dim(),
            });
        }
        let basis = HermitianBasis::new(rep.algebra_dim())?;
        if let Some(mask) = &subalgebra {
            if mask.is_empty() {
                return Err(Error::argument("subalgebra mask must not be empty"));
            }
            if mask.iter().any(|&k| k >= basis.len()) {
                return Err(Error::argument("subalgebra mask index out of range"));
            }
        }
        let dirac = DiracOperator::new(dirac, tag);
        let mut t = SpectralTriple {
            rep,
            dirac,
            basis,
            subalgebra,
            kernel_basis: Vec::new(),
            isometric,
            tensor_terms,
        };
        t.kernel_basis = t.compute_kernel()?;
        Ok(t)
    }

    #[inline]
    pub fn representation(&self) -> &Representation<T> {
        &self.rep
    }

    #[inline]
    pub fn dirac(&self) -> &DiracOperator<T> {
        &self.dirac
    }

    #[inline]
    pub fn basis(&self) -> &HermitianBasis<T> {
        &self.basis
    }

    #[inline]
    pub fn algebra_dim(&self) -> usize {
        self.rep.algebra_dim()
    }

    #[inline]
    pub fn hilbert_dim(&self) -> usize {
        self.rep.hilbert_dim()
    }

    #[inline]
    pub fn isometric_flag(&self) -> IsometryFlag {
        self.isometric
    }

    #[inline]
    pub fn subalgebra_mask(&self) -> Option<&[usize]> {
        self.subalgebra.as_deref()
    }

    /// Basis indices spanning the element space the triple works over.
    pub fn element_indices(&self) -> Vec<usize> {
        match &self.subalgebra {
            Some(mask) => mask.clone(),
            None => (0..self.basis.len()).collect(),
        }
    }

    /// Lipschitz seminorm `L(e) = ‖[D, π(e)]‖_op`.
    pub fn lipschitz_seminorm(&self, e: &CMatrix<T>) -> Result<T> {
        let c = self.dirac_commutator(e)?;
        // [D, π(e)] is anti-Hermitian whenever e is Hermitian; route those
        // through the cheaper Hermitian eigensolve.
        let anti_dev = (&c + &c.adjoint()).max_abs();
        let gate = real::<T>(100.0) * T::epsilon() * (T::one() + c.max_abs());
        Ok(if anti_dev <= gate {
            let k = HermitianMatrix::symmetrized(c.scale(Complex::new(T::zero(), -T::one())));
            hermitian_operator_norm(&k)
        } else {
            operator_norm(&c)
        })
    }

    /// The raw commutator `[D, π(e)]`.
    pub fn dirac_commutator(&self, e: &CMatrix<T>) -> Result<CMatrix<T>> {
        let pe = self.rep.apply(e)?;
        Ok(self.dirac.matrix().matrix().commutator(&pe))
    }

    /// Orthonormal basis (Hilbert-Schmidt) of the Hermitian seminorm kernel
    /// `{e : [D, π(e)] = 0}` within the triple's element space.
    pub fn seminorm_kernel(&self) -> &[HermitianMatrix<T>] {
        &self.kernel_basis
    }

    fn compute_kernel(&self) -> Result<Vec<HermitianMatrix<T>>> {
        let indices = self.element_indices();
        let k = indices.len();
        // Commutator images of the orthonormalized basis directions.
        let mut images = Vec::with_capacity(k);
        for &idx in &indices {
            let b = self.basis.orthonormal_element(idx);
            images.push(self.dirac_commutator(b.matrix())?);
        }
        // Real Gram matrix of the images; its null space is the kernel.
        let mut gram = CMatrix::<T>::zeros(k);
        for i in 0..k {
            for j in 0..k {
                let ip = images[i].hs_inner(&images[j]).re;
                gram[(i, j)] = Complex::new(ip, T::zero());
            }
        }
        let eig = hermitian_eigen(&HermitianMatrix::symmetrized(gram))?;
        let lam_max = eig.values.last().copied().unwrap_or_else(T::zero);
        let cut = tol::kernel_cut::<T>() * tol::kernel_cut::<T>() * lam_max;

        let mut kernel = Vec::new();
        for (col, &lam) in eig.values.iter().enumerate() {
            if lam_max > T::zero() && lam > cut {
                continue;
            }
            let v = eig.vector(col);
            let mut m = CMatrix::zeros(self.algebra_dim());
            for (row, &idx) in indices.iter().enumerate() {
                let b = self.basis.orthonormal_element(idx);
                // Gram eigenvectors of a real symmetric matrix are real up to
                // a global phase; strip it.
                m = &m + &b.matrix().scale_re(v[row].re);
            }
            let h = HermitianMatrix::symmetrized(m);
            let norm = h.matrix().hs_norm();
            if norm > T::zero() {
                kernel.push(h.scale_re(T::one() / norm));
            }
        }
        Ok(kernel)
    }

    /// False iff `delta` has a component along the seminorm kernel, in which
    /// case scaling that component certifies an unbounded supremum.
    pub fn distance_is_finite(&self, delta: &HermitianMatrix<T>) -> bool {
        self.kernel_basis.iter().all(|k| {
            let overlap = k.hs_inner_re(delta).abs();
            // tr(delta · I) = 0 for traceless delta, so projecting the
            // identity out of unital kernels never changes this test.
            overlap <= tol::kernel_overlap::<T>()
        })
    }

    /// New triple with Dirac `π(U) D π(U†)`.
    ///
    /// Requires a unital representation (so `π(U)` is unitary) and a unitary
    /// `U` in the algebra. The isometry flag survives: the seminorm
    /// transports as `L'(e) = L(U† e U)` and the operator norm is unitarily
    /// invariant. With a subalgebra mask the flag is dropped instead, since
    /// conjugation can leave the subalgebra.
    pub fn conjugate_dirac(&self, u: &CMatrix<T>) -> Result<Self> {
        if !self.rep.is_unital() {
            return Err(Error::contract(
                "conjugate_dirac requires a unital representation",
            ));
        }
        if u.dim() != self.algebra_dim() {
            return Err(Error::Dimension {
                expected: self.algebra_dim(),
                got: u.dim(),
            });
        }
        let uu = u.adjoint().matmul(u);
        if !uu.approx_eq(&CMatrix::identity(u.dim()), tol::construction::<T>()) {
            return Err(Error::argument("conjugate_dirac requires a unitary U"));
        }
        let pu = self.rep.apply(u)?;
        let d = pu
            .matmul(self.dirac.matrix().matrix())
            .matmul(&pu.adjoint());
        let flag = if self.subalgebra.is_none() {
            self.isometric
        } else {
            IsometryFlag::No
        };
        Self::assemble(
            self.rep.clone(),
            HermitianMatrix::symmetrized(d),
            format!("{}*conjugated", self.dirac.tag()),
            flag,
            self.subalgebra.clone(),
            None,
        )
    }

    /// New triple with Dirac `λI + D`. Since commutators kill the identity
    /// the seminorm, kernel and flag are untouched.
    pub fn with_shifted_dirac(&self, lambda: T) -> Result<Self> {
        let n = self.hilbert_dim();
        let shifted = &self.dirac.matrix().matrix().clone()
            + &CMatrix::identity(n).scale_re(lambda);
        Self::assemble(
            self.rep.clone(),
            HermitianMatrix::symmetrized(shifted),
            self.dirac.tag().to_string(),
            self.isometric,
            self.subalgebra.clone(),
            self.tensor_terms.clone(),
        )
    }

    /// New triple with Dirac `λD`. The isometry flag only survives `|λ| = 1`.
    pub fn with_scaled_dirac(&self, lambda: T) -> Result<Self> {
        if lambda.is_zero() {
            return Err(Error::argument("scaled Dirac requires λ ≠ 0"));
        }
        let flag = if (lambda.abs() - T::one()).abs() <= tol::construction::<T>() {
            self.isometric
        } else {
            IsometryFlag::No
        };
        let terms = self.tensor_terms.as_ref().map(|ts| {
            ts.iter()
                .map(|(s, t)| (s.scale_re(lambda), t.clone()))
                .collect()
        });
        Self::assemble(
            self.rep.clone(),
            self.dirac.matrix().scale_re(lambda),
            format!("{}*scaled", self.dirac.tag()),
            flag,
            self.subalgebra.clone(),
            terms,
        )
    }

    /// Randomized isometry certification: probes `trials` random elements
    /// (all Hermitian, then traceless Hermitian) and records the strongest
    /// relation that held within `1e-9 (1 + ‖e‖_op)`.
    pub fn certify_isometry(&mut self, trials: usize, seed: u64) {
        use crate::matcore::{random_hermitian, rng_from_seed};
        let mut rng = rng_from_seed(seed);
        let n = self.algebra_dim();
        let tol_rel = real::<T>(1e-9);
        let mut all_ok = self.subalgebra.is_none();
        let mut traceless_ok = true;
        for _ in 0..trials {
            let h = random_hermitian::<T, _>(n, &mut rng).expect("random Hermitian");
            let h = self.project_element(&h);
            for (is_traceless, e) in [(false, h.clone()), (true, h.traceless_part())] {
                let e_norm = hermitian_operator_norm(&e);
                let l = self
                    .lipschitz_seminorm(e.matrix())
                    .expect("seminorm on probe");
                let ok = (l - e_norm).abs() <= tol_rel * (T::one() + e_norm);
                if is_traceless {
                    traceless_ok &= ok;
                } else {
                    all_ok &= ok;
                }
            }
        }
        self.isometric = if all_ok {
            IsometryFlag::OnAll
        } else if traceless_ok {
            IsometryFlag::OnTraceless
        } else {
            IsometryFlag::No
        };
    }

    /// Orthogonal projection of a Hermitian matrix onto the element space.
    pub fn project_element(&self, h: &HermitianMatrix<T>) -> HermitianMatrix<T> {
        match &self.subalgebra {
            None => h.clone(),
            Some(mask) => {
                let mut m = CMatrix::zeros(self.algebra_dim());
                for &idx in mask {
                    let b = self.basis.orthonormal_element(idx);
                    let c = b.hs_inner_re(h);
                    m = &m + &b.matrix().scale_re(c);
                }
                HermitianMatrix::symmetrized(m)
            }
        }
    }

    /// Whether a Hermitian matrix lies in the element space (up to `atol`).
    pub fn contains_element(&self, h: &HermitianMatrix<T>, atol: T) -> bool {
        match &self.subalgebra {
            None => h.dim() == self.algebra_dim(),
            Some(_) => {
                let p = self.project_element(h);
                (&p - h).matrix().max_abs() <= atol
            }
        }
    }

    pub(crate) fn tensor_terms(&self) -> Option<&[(CMatrix<T>, CMatrix<T>)]> {
        self.tensor_terms.as_deref()
    }

    pub(crate) fn diagonal_copies(&self) -> Option<usize> {
        match self.rep {
            Representation::Diagonal { copies, .. } => Some(copies),
            _ => None,
        }
    }
}
