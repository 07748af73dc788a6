//! Cross-module invariants, property-tested where randomness helps.

use proptest::prelude::*;
use specdist::matcore::{
    hermitian_eigen, hermitian_operator_norm, operator_norm, random_density, random_hermitian,
    random_matrix, random_traceless_hermitian, random_unitary, rng_from_seed, trace_norm,
    CMatrix, HermitianBasis, HermitianMatrix,
};
use specdist::solver::{connes_distance, SolverOptions};
use specdist::states::trace_distance;
use specdist::triple::{
    dirac_corner, dirac_d4_default, dirac_two_point, IsometryFlag, Representation, SpectralTriple,
};

proptest! {
    // ‖A‖_op ≤ ‖A‖₁ ≤ rank(A)·‖A‖_op
    #[test]
    fn norm_chain(seed in any::<u64>(), n in 2usize..5) {
        let mut rng = rng_from_seed(seed);
        let a = random_matrix::<f64, _>(n, &mut rng).unwrap();
        let op = operator_norm(&a);
        let tr = trace_norm(&a);
        prop_assert!(op <= tr + 1e-12);
        let gram = HermitianMatrix::symmetrized(a.adjoint().matmul(&a));
        let eig = hermitian_eigen(&gram).unwrap();
        let cut = 1e-20 * eig.values.last().unwrap().max(1e-300);
        let rank = eig.values.iter().filter(|&&l| l > cut).count();
        prop_assert!(tr <= rank as f64 * op + 1e-10);
    }

    // Unitary conjugation preserves both norms.
    #[test]
    fn norms_unitarily_invariant(seed in any::<u64>(), n in 2usize..5) {
        let mut rng = rng_from_seed(seed);
        let h = random_hermitian::<f64, _>(n, &mut rng).unwrap();
        let u = random_unitary::<f64, _>(n, &mut rng).unwrap();
        let moved = u.matmul(h.matrix()).matmul(&u.adjoint());
        prop_assert!((operator_norm(h.matrix()) - operator_norm(&moved)).abs() <= 1e-10);
        prop_assert!((trace_norm(h.matrix()) - trace_norm(&moved)).abs() <= 1e-10);
    }

    // V diag(λ) V† reconstructs H within 1e-9 (1 + ‖H‖_op).
    #[test]
    fn eigen_reconstruction(seed in any::<u64>(), n in 2usize..8) {
        let mut rng = rng_from_seed(seed);
        let h = random_hermitian::<f64, _>(n, &mut rng).unwrap();
        let eig = hermitian_eigen(&h).unwrap();
        let mut lam = CMatrix::<f64>::zeros(n);
        for (i, &v) in eig.values.iter().enumerate() {
            lam[(i, i)] = num_complex::Complex::new(v, 0.0);
        }
        let rec = eig.vectors.matmul(&lam).matmul(&eig.vectors.adjoint());
        let bound = 1e-9 * (1.0 + hermitian_operator_norm(&h));
        prop_assert!(operator_norm(&(&rec - h.matrix())) <= bound);
    }

    // Any Hermitian element reconstructs from its basis coefficients.
    #[test]
    fn basis_spans_hermitian_space(seed in any::<u64>(), n in 2usize..5) {
        let mut rng = rng_from_seed(seed);
        let basis = HermitianBasis::<f64>::new(n).unwrap();
        let h = random_hermitian::<f64, _>(n, &mut rng).unwrap();
        let coeffs = basis.coefficients(&h).unwrap();
        let back = basis.reconstruct(&coeffs).unwrap();
        prop_assert!((back.matrix() - h.matrix()).max_abs() <= 1e-12 * (1.0 + h.matrix().max_abs()));
    }

    // Eigenvalues of e ⊗ e are exactly the pairwise products (2×2 case).
    #[test]
    fn kron_eigenvalues_multiply(seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let e = random_hermitian::<f64, _>(2, &mut rng).unwrap();
        let eig = hermitian_eigen(&e).unwrap();
        let kron = HermitianMatrix::symmetrized(e.matrix().kron(e.matrix()));
        let got = hermitian_eigen(&kron).unwrap().values;
        let mut want: Vec<f64> = eig
            .values
            .iter()
            .flat_map(|&a| eig.values.iter().map(move |&b| a * b))
            .collect();
        want.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (g, w) in got.iter().zip(want.iter()) {
            prop_assert!((g - w).abs() <= 1e-10 * (1.0 + w.abs()));
        }
    }

    // L(λe) = |λ| L(e).
    #[test]
    fn seminorm_homogeneity(seed in any::<u64>(), lambda in -10.0f64..10.0) {
        let t = dirac_d4_default::<f64>().unwrap();
        let mut rng = rng_from_seed(seed);
        let e = random_hermitian::<f64, _>(2, &mut rng).unwrap();
        let l = t.lipschitz_seminorm(e.matrix()).unwrap();
        let ls = t.lipschitz_seminorm(&e.matrix().scale_re(lambda)).unwrap();
        prop_assert!((ls - lambda.abs() * l).abs() <= 1e-12 * (1.0 + lambda.abs() * l));
    }

    // d_tr satisfies the triangle inequality.
    #[test]
    fn trace_distance_triangle(seed in any::<u64>(), n in 2usize..5) {
        let mut rng = rng_from_seed(seed);
        let a = random_density::<f64, _>(n, &mut rng).unwrap();
        let b = random_density::<f64, _>(n, &mut rng).unwrap();
        let c = random_density::<f64, _>(n, &mut rng).unwrap();
        prop_assert!(trace_distance(&a, &c) <= trace_distance(&a, &b) + trace_distance(&b, &c) + 1e-10);
    }

    // Metric axioms of the Connes distance over D₄.
    #[test]
    fn connes_metric_axioms(seed in any::<u64>()) {
        let t = dirac_d4_default::<f64>().unwrap();
        let opts = SolverOptions::<f64>::default();
        let mut rng = rng_from_seed(seed);
        let a = random_density::<f64, _>(2, &mut rng).unwrap();
        let b = random_density::<f64, _>(2, &mut rng).unwrap();
        let c = random_density::<f64, _>(2, &mut rng).unwrap();
        let dist = |x, y| connes_distance(&t, x, y, &opts).unwrap().distance.value();
        prop_assert!(dist(&a, &a) == 0.0);
        prop_assert!((dist(&a, &b) - dist(&b, &a)).abs() <= 2.0 * opts.tol);
        prop_assert!(dist(&a, &c) <= dist(&a, &b) + dist(&b, &c) + 4.0 * opts.tol);
    }
}

/// Certified-flag probes: 200 random elements per flagged constructor.
#[test]
fn isometry_certification_probes() {
    let mut rng = rng_from_seed(0x150);

    // OnAll: the corner triple, arbitrary Hermitian elements.
    for n in [2usize, 3] {
        let t = dirac_corner::<f64>(n).unwrap();
        assert_eq!(t.isometric_flag(), IsometryFlag::OnAll);
        for _ in 0..200 {
            let e = random_hermitian::<f64, _>(n, &mut rng).unwrap();
            let l = t.lipschitz_seminorm(e.matrix()).unwrap();
            let norm = hermitian_operator_norm(&e);
            assert!((l - norm).abs() <= 1e-9 * (1.0 + norm));
        }
    }

    // OnTraceless: D₄, traceless Hermitian elements.
    let t = dirac_d4_default::<f64>().unwrap();
    assert_eq!(t.isometric_flag(), IsometryFlag::OnTraceless);
    for _ in 0..200 {
        let e = random_traceless_hermitian::<f64, _>(2, &mut rng).unwrap();
        let l = t.lipschitz_seminorm(e.matrix()).unwrap();
        let norm = hermitian_operator_norm(&e);
        assert!((l - norm).abs() <= 1e-9 * (1.0 + norm));
    }

    // OnTraceless restricted to the diagonal subalgebra: the two-point space.
    let t = dirac_two_point::<f64>().unwrap();
    assert_eq!(t.isometric_flag(), IsometryFlag::OnTraceless);
    for _ in 0..200 {
        let e = t
            .project_element(&random_hermitian::<f64, _>(2, &mut rng).unwrap())
            .traceless_part();
        let l = t.lipschitz_seminorm(e.matrix()).unwrap();
        let norm = hermitian_operator_norm(&e);
        assert!((l - norm).abs() <= 1e-9 * (1.0 + norm));
    }
}

/// Randomized certification recovers the right flag on fresh triples.
#[test]
fn randomized_certification_matches_provenance() {
    let mut t = SpectralTriple::new(
        Representation::Corner { n: 2 },
        dirac_corner::<f64>(2).unwrap().dirac().matrix().clone(),
        "uncertified-corner",
    )
    .unwrap();
    assert_eq!(t.isometric_flag(), IsometryFlag::No);
    t.certify_isometry(200, 7);
    assert_eq!(t.isometric_flag(), IsometryFlag::OnAll);

    let mut t = SpectralTriple::new(
        Representation::Diagonal { n: 2, copies: 2 },
        dirac_d4_default::<f64>().unwrap().dirac().matrix().clone(),
        "uncertified-d4",
    )
    .unwrap();
    t.certify_isometry(200, 7);
    assert_eq!(t.isometric_flag(), IsometryFlag::OnTraceless);

    // A generic Dirac is not isometric.
    let mut rng = rng_from_seed(0xBAD);
    let d = random_traceless_hermitian::<f64, _>(4, &mut rng).unwrap();
    let mut t = SpectralTriple::new(
        Representation::Diagonal { n: 2, copies: 2 },
        d,
        "generic",
    )
    .unwrap();
    t.certify_isometry(200, 7);
    assert_eq!(t.isometric_flag(), IsometryFlag::No);
}

/// The numerical kernels are generic over the scalar; `f32` works at its
/// own (looser) precision through the same code paths.
#[test]
fn f32_instantiation_smoke() {
    use specdist::matcore::{pauli, sigma};

    let h = HermitianMatrix::<f32>::symmetrized(sigma::<f32>(1));
    let eig = hermitian_eigen(&h).unwrap();
    assert!((eig.values[0] + 1.0).abs() < 1e-6);
    assert!((eig.values[1] - 1.0).abs() < 1e-6);

    let t = dirac_d4_default::<f32>().unwrap();
    let e = pauli::<f32>(3);
    let l = t.lipschitz_seminorm(e.matrix()).unwrap();
    assert!((l - 1.0).abs() < 1e-5, "f32 seminorm {l}");

    let mut rng = rng_from_seed(5);
    let r1 = random_density::<f32, _>(2, &mut rng).unwrap();
    let r2 = random_density::<f32, _>(2, &mut rng).unwrap();
    let d = connes_distance(
        &t,
        &r1,
        &r2,
        &SolverOptions::<f32> {
            tol: 1e-3,
            ..SolverOptions::default()
        },
    )
    .unwrap();
    let want = trace_distance(&r1, &r2);
    assert!((d.distance.value() - want).abs() < 1e-4);
}
