//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line with its measured worst-case deviation and runtime.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use specdist::matcore::{
    hermitian_eigen, hermitian_operator_norm, hermitian_trace_norm, random_density,
    random_hermitian, random_matrix, random_traceless_hermitian, random_unitary, rng_from_seed,
    sigma, CMatrix, HermitianMatrix, Sign,
};
use specdist::solver::{
    connes_distance, oracle_distance, Method, SolverOptions,
};
use specdist::states::{bloch_from_density, density_from_bloch, optimal_element_tracenorm, BlochVector, DensityMatrix};
use specdist::triple::{
    dirac_corner, dirac_d4, dirac_d4_default, dirac_d4n, dirac_tensor_insert, dirac_two_point,
    D4nFactor, Representation, SpectralTriple,
};
use rand::seq::SliceRandom;
use rand::Rng;
use std::time::Instant;

fn report(criterion: usize, name: &str, max_dev: f64, tol: f64, start: Instant, limit_s: f64) {
    let elapsed = start.elapsed().as_secs_f64();
    let ok = max_dev <= tol && elapsed <= limit_s;
    println!(
        "{} criterion {criterion} ({name}): max deviation {max_dev:.3e} (tol {tol:.1e}), {elapsed:.2}s (limit {limit_s}s)",
        if ok { "PASS" } else { "FAIL" },
    );
    assert!(
        max_dev <= tol,
        "criterion {criterion} deviation {max_dev:.3e} exceeds {tol:.1e}"
    );
    assert!(
        elapsed <= limit_s,
        "criterion {criterion} took {elapsed:.2}s, limit {limit_s}s"
    );
}

#[test]
fn criterion_01_two_point_grid() {
    let start = Instant::now();
    let t = dirac_two_point::<f64>().unwrap();
    let opts = SolverOptions::default();
    let mut max_dev = 0.0f64;
    for i in 0..21 {
        for j in 0..21 {
            let p = i as f64 / 20.0;
            let q = j as f64 / 20.0;
            let r1 = DensityMatrix::two_level(p).unwrap();
            let r2 = DensityMatrix::two_level(q).unwrap();
            let d = connes_distance(&t, &r1, &r2, &opts)
                .unwrap()
                .distance
                .value();
            max_dev = max_dev.max((d - 2.0 * (p - q).abs()).abs());
        }
    }
    report(1, "two-point grid", max_dev, 1e-9, start, 1.0);
}

#[test]
fn criterion_02_corner_isometry() {
    let start = Instant::now();
    let mut rng = rng_from_seed(0xC0C0);
    let mut max_dev = 0.0f64;
    for n in [2usize, 3, 4] {
        let t = dirac_corner::<f64>(n).unwrap();
        for _ in 0..200 {
            let e = random_matrix::<f64, _>(n, &mut rng).unwrap();
            let l = t.lipschitz_seminorm(&e).unwrap();
            let want = specdist::matcore::operator_norm(&e);
            max_dev = max_dev.max((l - want).abs());
        }
    }
    report(2, "corner isometry", max_dev, 1e-10, start, 5.0);
}

#[test]
fn criterion_03_d4_bloch_corollary() {
    let start = Instant::now();
    let t = dirac_d4_default::<f64>().unwrap();
    let mut rng = rng_from_seed(0xD4D4);
    let closed = SolverOptions::default();
    let mut max_closed_dev = 0.0f64;
    let mut max_bisect_dev = 0.0f64;
    let mut max_cert_dev = 0.0f64;
    for k in 0..100 {
        let r1 = random_density::<f64, _>(2, &mut rng).unwrap();
        let r2 = random_density::<f64, _>(2, &mut rng).unwrap();
        let want = bloch_from_density(&r1)
            .unwrap()
            .distance(&bloch_from_density(&r2).unwrap());

        let res = connes_distance(&t, &r1, &r2, &closed).unwrap();
        assert_eq!(res.method, Method::ClosedForm);
        max_closed_dev = max_closed_dev.max((res.distance.value() - want).abs());
        if let Some(cert) = res.seminorm_certificate {
            max_cert_dev = max_cert_dev.max((cert - 1.0).abs());
        }

        let forced = SolverOptions {
            force_bisection: true,
            seed: k,
            ..SolverOptions::default()
        };
        let res_b = connes_distance(&t, &r1, &r2, &forced).unwrap();
        assert_eq!(res_b.method, Method::Bisection);
        max_bisect_dev = max_bisect_dev.max((res_b.distance.value() - res.distance.value()).abs());
        if let Some(cert) = res_b.seminorm_certificate {
            max_cert_dev = max_cert_dev.max((cert - 1.0).abs());
        }
    }
    assert!(
        max_closed_dev <= 1e-12,
        "closed-form deviation {max_closed_dev:.3e} exceeds 1e-12"
    );
    let max_dev = max_bisect_dev.max(max_cert_dev);
    report(3, "D4 Bloch corollary", max_dev, 1e-5, start, 60.0);
}

#[test]
fn criterion_04_d4_commutator_square_law() {
    let start = Instant::now();
    let t = dirac_d4_default::<f64>().unwrap();
    let mut rng = rng_from_seed(0x5157);
    let mut max_entry_dev = 0.0f64;
    let mut max_eig_dev = 0.0f64;
    for _ in 0..100 {
        let e = random_traceless_hermitian::<f64, _>(2, &mut rng).unwrap();
        let c = t.dirac_commutator(e.matrix()).unwrap();
        let gram = c.adjoint().matmul(&c);
        let e_sq = 0.5 * e.matrix().hs_norm().powi(2); // |ē|²
        let want = (&CMatrix::identity(4).scale_re(e_sq) - &e.matrix().kron(e.matrix()))
            .scale_re(0.5);
        max_entry_dev = max_entry_dev.max((&gram - &want).max_abs());

        let eig = hermitian_eigen(&HermitianMatrix::symmetrized(gram)).unwrap();
        let expect = [0.0, 0.0, e_sq, e_sq];
        for (got, want) in eig.values.iter().zip(expect.iter()) {
            max_eig_dev = max_eig_dev.max((got - want).abs());
        }
    }
    assert!(
        max_entry_dev <= 1e-12,
        "entrywise deviation {max_entry_dev:.3e} exceeds 1e-12"
    );
    report(4, "D4 commutator-square law", max_eig_dev, 1e-10, start, 2.0);
}

#[test]
fn criterion_05_d4_variants_and_d4n() {
    let start = Instant::now();
    let mut rng = rng_from_seed(0x48D4);
    let mut max_dev = 0.0f64;

    let check = |t: &SpectralTriple<f64>, rng: &mut rand_chacha::ChaCha8Rng, dev: &mut f64| {
        for _ in 0..50 {
            let e = random_traceless_hermitian::<f64, _>(2, rng).unwrap();
            let l = t.lipschitz_seminorm(e.matrix()).unwrap();
            *dev = dev.max((l - hermitian_operator_norm(&e)).abs());
        }
    };

    // all 2³ sign patterns × 3! permutations
    let perms: [[usize; 3]; 6] = [
        [1, 2, 3],
        [1, 3, 2],
        [2, 1, 3],
        [2, 3, 1],
        [3, 1, 2],
        [3, 2, 1],
    ];
    for bits in 0..8u8 {
        let pick = |b: u8| if b == 0 { Sign::Plus } else { Sign::Minus };
        let signs = [pick(bits & 1), pick(bits & 2), pick(bits & 4)];
        for perm in perms {
            let t = dirac_d4::<f64>(signs, perm).unwrap();
            check(&t, &mut rng, &mut max_dev);
        }
    }

    // D_{4ⁿ}, n = 2, 3, with random permutations and signs
    let random_factor = |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut l = [1usize, 2, 3];
        let mut r = [1usize, 2, 3];
        l.shuffle(rng);
        r.shuffle(rng);
        D4nFactor {
            left: l,
            right: r,
            sign: if rng.gen::<bool>() { Sign::Plus } else { Sign::Minus },
        }
    };
    for _ in 0..3 {
        let f = [random_factor(&mut rng), random_factor(&mut rng)];
        let t = dirac_d4n::<f64>(&f).unwrap();
        check(&t, &mut rng, &mut max_dev);
    }
    let f3 = [
        random_factor(&mut rng),
        random_factor(&mut rng),
        random_factor(&mut rng),
    ];
    let t64 = dirac_d4n::<f64>(&f3).unwrap();
    check(&t64, &mut rng, &mut max_dev);

    // the explicit D₁₆ = ¼ Σ σᵢ⊗σᵢ⊗σᵢ⊗σᵢ
    let d16 = dirac_d4n::<f64>(&[D4nFactor::plain(), D4nFactor::plain()]).unwrap();
    let mut explicit = CMatrix::<f64>::zeros(16);
    for i in 1..=3 {
        let s = sigma::<f64>(i);
        explicit = &explicit + &s.kron(&s).kron(&s).kron(&s).scale_re(0.25);
    }
    assert!((d16.dirac().matrix().matrix() - &explicit).max_abs() == 0.0);
    check(&d16, &mut rng, &mut max_dev);

    report(5, "48 D4' variants and D_{4^n}", max_dev, 1e-9, start, 30.0);
}

#[test]
fn criterion_06_tensor_insertion_and_d8() {
    let start = Instant::now();
    let mut rng = rng_from_seed(0x0D08);
    let base = dirac_d4::<f64>([Sign::Plus; 3], [3, 1, 2]).unwrap();
    let mut max_dev = 0.0f64;
    for _ in 0..5 {
        let m = loop {
            let cand = random_hermitian::<f64, _>(2, &mut rng).unwrap();
            if cand.matrix().max_abs() > 1e-6 {
                break cand;
            }
        };
        let t8 = dirac_tensor_insert(&base, &m).unwrap();
        for _ in 0..50 {
            let e = random_hermitian::<f64, _>(2, &mut rng).unwrap();
            let a = base.lipschitz_seminorm(e.matrix()).unwrap();
            let b = t8.lipschitz_seminorm(e.matrix()).unwrap();
            max_dev = max_dev.max((a - b).abs());
        }
        // M̃ scale invariance is exact: doubling M shifts only exponents.
        let doubled = dirac_tensor_insert(&base, &m.scale_re(2.0)).unwrap();
        let diff = (t8.dirac().matrix().matrix() - doubled.dirac().matrix().matrix()).max_abs();
        assert_eq!(diff, 0.0, "M vs 2M must give the identical Dirac");
    }
    report(6, "tensor insertion and D8", max_dev, 1e-9, start, 10.0);
}

#[test]
fn criterion_07_infinite_distance_fixture() {
    let start = Instant::now();
    let t = SpectralTriple::new(
        Representation::Identity { n: 2 },
        HermitianMatrix::symmetrized(sigma(1)),
        "sigma1-example",
    )
    .unwrap();
    let rho1 = DensityMatrix::basis_projector(2, 0).unwrap();
    let plus = density_from_bloch(&BlochVector::new([1.0, 0.0, 0.0]).unwrap()).unwrap();
    let delta = rho1.delta(&plus);

    assert!(!t.distance_is_finite(&delta));
    let res = connes_distance(&t, &rho1, &plus, &SolverOptions::default()).unwrap();
    assert!(!res.distance.is_finite(), "distance must be infinite");
    assert!(res.optimal_element.is_none());

    // Feasible elements k·σ₁ certify unbounded objective values k.
    let mut max_dev = 0.0f64;
    for k in [1.0f64, 10.0, 100.0] {
        let e = sigma::<f64>(1).scale_re(k);
        let l = t.lipschitz_seminorm(&e).unwrap();
        assert!(l <= 1.0, "k·e₁ must stay feasible, got seminorm {l}");
        let objective = delta.matrix().hs_inner(&e).re.abs();
        max_dev = max_dev.max((objective - k).abs());
    }
    report(7, "infinite-distance fixture", max_dev, 1e-9, start, 1.0);
}

#[test]
fn criterion_08_metric_laws_over_d4() {
    let start = Instant::now();
    let t = dirac_d4_default::<f64>().unwrap();
    let mut rng = rng_from_seed(0x1A58);
    let tol = 3e-6;
    let opts = SolverOptions::default();
    let mut max_dev = 0.0f64;

    // Scaling law: |λ| d_{λD} = d_D (the scaled triple loses its isometry
    // flag, so this runs through the full bisection path).
    for k in 0..10 {
        let r1 = random_density::<f64, _>(2, &mut rng).unwrap();
        let r2 = random_density::<f64, _>(2, &mut rng).unwrap();
        let d = connes_distance(&t, &r1, &r2, &opts).unwrap().distance.value();
        for lambda in [0.5f64, 2.0, -3.0] {
            let scaled = t.with_scaled_dirac(lambda).unwrap();
            let opts_k = SolverOptions {
                seed: k,
                ..SolverOptions::default()
            };
            let d_scaled = connes_distance(&scaled, &r1, &r2, &opts_k)
                .unwrap()
                .distance
                .value();
            max_dev = max_dev.max((lambda.abs() * d_scaled - d).abs());
        }
    }

    // Shift law: λI + D leaves the metric untouched.
    for k in 0..20 {
        let lambda: f64 = rng.gen_range(-5.0..5.0);
        let shifted = t.with_shifted_dirac(lambda).unwrap();
        let r1 = random_density::<f64, _>(2, &mut rng).unwrap();
        let r2 = random_density::<f64, _>(2, &mut rng).unwrap();
        let d0 = connes_distance(&t, &r1, &r2, &opts).unwrap().distance.value();
        let d1 = connes_distance(&shifted, &r1, &r2, &opts)
            .unwrap()
            .distance
            .value();
        max_dev = max_dev.max((d0 - d1).abs());
        if k < 3 {
            let forced = SolverOptions {
                force_bisection: true,
                seed: k,
                ..SolverOptions::default()
            };
            let d1b = connes_distance(&shifted, &r1, &r2, &forced)
                .unwrap()
                .distance
                .value();
            max_dev = max_dev.max((d0 - d1b).abs());
        }
    }

    // Unitary invariance (theorem lu).
    for _ in 0..20 {
        let u = random_unitary::<f64, _>(2, &mut rng).unwrap();
        let r1 = random_density::<f64, _>(2, &mut rng).unwrap();
        let r2 = random_density::<f64, _>(2, &mut rng).unwrap();
        let d = connes_distance(&t, &r1, &r2, &opts).unwrap().distance.value();
        let du = connes_distance(
            &t,
            &r1.conjugate(&u).unwrap(),
            &r2.conjugate(&u).unwrap(),
            &opts,
        )
        .unwrap()
        .distance
        .value();
        max_dev = max_dev.max((d - du).abs());
    }

    // Dirac-conjugation transport (theorem udu).
    for k in 0..20 {
        let u = random_unitary::<f64, _>(2, &mut rng).unwrap();
        let conj = t.conjugate_dirac(&u).unwrap();
        let r1 = random_density::<f64, _>(2, &mut rng).unwrap();
        let r2 = random_density::<f64, _>(2, &mut rng).unwrap();
        let lhs = connes_distance(&conj, &r1, &r2, &opts).unwrap().distance.value();
        let uh = u.adjoint();
        let rhs = connes_distance(
            &t,
            &r1.conjugate(&uh).unwrap(),
            &r2.conjugate(&uh).unwrap(),
            &opts,
        )
        .unwrap()
        .distance
        .value();
        max_dev = max_dev.max((lhs - rhs).abs());
        if k < 2 {
            let forced = SolverOptions {
                force_bisection: true,
                seed: k,
                ..SolverOptions::default()
            };
            let lhs_b = connes_distance(&conj, &r1, &r2, &forced)
                .unwrap()
                .distance
                .value();
            max_dev = max_dev.max((lhs_b - rhs).abs());
        }
    }

    report(8, "metric laws over D4", max_dev, tol, start, 120.0);
}

#[test]
fn criterion_09_oracle_equivalence() {
    let start = Instant::now();
    let mut rng = rng_from_seed(0x09AC);
    let opts = SolverOptions {
        force_bisection: true,
        ..SolverOptions::default()
    };
    let mut max_dev = 0.0f64;
    let mut done = 0usize;
    while done < 20 {
        let d = random_traceless_hermitian::<f64, _>(4, &mut rng).unwrap();
        let t = SpectralTriple::new(
            Representation::Diagonal { n: 2, copies: 2 },
            d,
            "random-diagonal",
        )
        .unwrap();
        // Require the generic situation: kernel exactly span{I}.
        let kernel = t.seminorm_kernel();
        if kernel.len() != 1 {
            continue;
        }
        let id_dir = HermitianMatrix::identity(2).scale_re(1.0 / 2f64.sqrt());
        if (kernel[0].hs_inner_re(&id_dir).abs() - 1.0).abs() > 1e-9 {
            continue;
        }
        let r1 = random_density::<f64, _>(2, &mut rng).unwrap();
        let r2 = random_density::<f64, _>(2, &mut rng).unwrap();
        let res = connes_distance(&t, &r1, &r2, &opts).unwrap();
        let reference = oracle_distance(&t, &r1, &r2, 20_000).unwrap();
        max_dev = max_dev.max((res.distance.value() - reference).abs());
        done += 1;
    }
    report(9, "bisection vs oracle", max_dev, 1e-3, start, 600.0);
}

#[test]
fn criterion_10_sign_element_optimality() {
    let start = Instant::now();
    let mut rng = rng_from_seed(0x0E0E);
    let mut max_obj_dev = 0.0f64;
    let mut max_excess = 0.0f64;
    for k in 0..100 {
        let n = 2 + (k % 3);
        let r1 = random_density::<f64, _>(n, &mut rng).unwrap();
        let r2 = random_density::<f64, _>(n, &mut rng).unwrap();
        let delta = r1.delta(&r2);
        let e_o = optimal_element_tracenorm(&delta);
        assert!(hermitian_operator_norm(&e_o) <= 1.0 + 1e-12);
        let objective = delta.hs_inner_re(&e_o);
        let want = hermitian_trace_norm(&delta);
        max_obj_dev = max_obj_dev.max((objective - want).abs());

        // No feasible contraction may beat the sign element.
        for _ in 0..10 {
            let h = random_hermitian::<f64, _>(n, &mut rng).unwrap();
            let norm = hermitian_operator_norm(&h);
            if norm <= 1e-12 {
                continue;
            }
            let p = h.scale_re(1.0 / norm);
            let value = delta.hs_inner_re(&p).abs();
            max_excess = max_excess.max(value - objective);
        }
    }
    let max_dev = max_obj_dev.max(max_excess.max(0.0));
    report(10, "sign-element optimality", max_dev, 1e-10, start, 10.0);
}
