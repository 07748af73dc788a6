//! The registered check bundles.
//!
//! Conventions: every deviation recorded is an absolute error; suites
//! sampling random objects draw them from the suite RNG only, so runs are
//! reproducible from `(name, trials, seed)`.

use super::{SuiteDef, TrialRecord, EXACT_SUITE_TOL, SOLVER_SUITE_TOL};
use crate::matcore::{
    hermitian_eigen, hermitian_operator_norm, operator_norm, random_density, random_hermitian,
    random_matrix, random_traceless_hermitian, random_unitary, sigma, CMatrix, HermitianMatrix,
    Sign,
};
use crate::solver::{connes_distance, oracle_distance, verify_optimal, SolverOptions};
use crate::states::{
    bloch_from_density, density_from_bloch, trace_distance, BlochVector, DensityMatrix,
};
use crate::triple::{
    dirac_corner, dirac_d4, dirac_d4_default, dirac_d4n, dirac_tensor_insert, dirac_two_point,
    permutation_unitaries, D4nFactor, Representation, SpectralTriple,
};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

type Rec = Vec<TrialRecord>;

fn rec(records: &mut Rec, label: impl Into<String>, deviation: f64) {
    records.push(TrialRecord {
        label: label.into(),
        deviation,
    });
}

fn default_opts(rng: &mut ChaCha8Rng) -> SolverOptions<f64> {
    SolverOptions {
        seed: rng.gen(),
        ..SolverOptions::default()
    }
}

fn random_qubit_pair(rng: &mut ChaCha8Rng) -> (DensityMatrix<f64>, DensityMatrix<f64>) {
    (
        random_density(2, rng).expect("random density"),
        random_density(2, rng).expect("random density"),
    )
}

const ALL_PERMS: [[usize; 3]; 6] = [
    [1, 2, 3],
    [1, 3, 2],
    [2, 1, 3],
    [2, 3, 1],
    [3, 1, 2],
    [3, 2, 1],
];

fn all_sign_patterns() -> Vec<[Sign; 3]> {
    let mut out = Vec::with_capacity(8);
    for bits in 0..8u8 {
        let pick = |b: u8| if b == 0 { Sign::Plus } else { Sign::Minus };
        out.push([pick(bits & 1), pick(bits & 2), pick(bits & 4)]);
    }
    out
}

fn random_perm(rng: &mut ChaCha8Rng) -> [usize; 3] {
    let mut p = [1usize, 2, 3];
    p.shuffle(rng);
    p
}

fn random_sign(rng: &mut ChaCha8Rng) -> Sign {
    if rng.gen::<bool>() {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

// ---------------------------------------------------------------------------
// §3: elementary properties
// ---------------------------------------------------------------------------

fn suite_lemma_d0(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let t = dirac_d4_default::<f64>().unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let opts = default_opts(rng);
        let (r1, r2) = random_qubit_pair(rng);
        let same = connes_distance(&t, &r1, &r1, &opts).unwrap();
        rec(&mut records, format!("zero-on-equal #{k}"), same.distance.value().abs());

        let delta = r1.delta(&r2);
        if delta.matrix().max_abs() <= 1e-9 {
            continue;
        }
        let d = connes_distance(&t, &r1, &r2, &opts)
            .unwrap()
            .distance
            .value();
        let l = t.lipschitz_seminorm(delta.matrix()).unwrap();
        let bound = delta.matrix().hs_norm().powi(2) / l;
        rec(
            &mut records,
            format!("positivity-bound #{k}"),
            (bound - d).max(0.0),
        );
    }
    records
}

fn suite_lemma_shift(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let t = dirac_d4_default::<f64>().unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let lambda: f64 = rng.gen_range(-5.0..5.0);
        let shifted = t.with_shifted_dirac(lambda).unwrap();
        let e = random_hermitian::<f64, _>(2, rng).unwrap();
        let a = t.lipschitz_seminorm(e.matrix()).unwrap();
        let b = shifted.lipschitz_seminorm(e.matrix()).unwrap();
        rec(&mut records, format!("seminorm #{k}"), (a - b).abs());

        // The identity [λI + D, π(e)] = [D, π(e)] on raw matrices, without
        // the traceless renormalization the constructor applies.
        let pe = t.representation().apply(e.matrix()).unwrap();
        let d_raw = &t.dirac().matrix().matrix().clone()
            + &CMatrix::identity(4).scale_re(lambda);
        let raw_norm = operator_norm(&d_raw.commutator(&pe));
        rec(&mut records, format!("raw-commutator #{k}"), (raw_norm - a).abs());

        let opts = default_opts(rng);
        let (r1, r2) = random_qubit_pair(rng);
        let d0 = connes_distance(&t, &r1, &r2, &opts).unwrap().distance.value();
        let d1 = connes_distance(&shifted, &r1, &r2, &opts)
            .unwrap()
            .distance
            .value();
        rec(&mut records, format!("metric #{k}"), (d0 - d1).abs());
    }
    records
}

fn suite_lemma_tloe(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let t = dirac_d4_default::<f64>().unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let opts = default_opts(rng);
        let (r1, r2) = random_qubit_pair(rng);
        let delta = r1.delta(&r2);
        let res = connes_distance(&t, &r1, &r2, &opts).unwrap();
        let d = res.distance.value();
        let Some(e_o) = res.optimal_element else {
            continue;
        };
        let lambda: f64 = rng.gen_range(-4.0..4.0);
        let shifted = &e_o + &HermitianMatrix::identity(2).scale_re(lambda);
        let report = verify_optimal(&t, &delta, &shifted, SOLVER_SUITE_TOL).unwrap();
        rec(
            &mut records,
            format!("shifted-seminorm #{k}"),
            (report.seminorm - 1.0).abs(),
        );
        rec(
            &mut records,
            format!("shifted-objective #{k}"),
            (report.objective - d).abs(),
        );
    }
    records
}

fn suite_lemma_scaling(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let t = dirac_d4_default::<f64>().unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let opts = default_opts(rng);
        let (r1, r2) = random_qubit_pair(rng);
        let d_base = connes_distance(&t, &r1, &r2, &opts).unwrap().distance.value();
        for lambda in [0.5f64, 2.0, -3.0] {
            let scaled = t.with_scaled_dirac(lambda).unwrap();
            let d_scaled = connes_distance(&scaled, &r1, &r2, &opts)
                .unwrap()
                .distance
                .value();
            rec(
                &mut records,
                format!("lambda={lambda} #{k}"),
                (lambda.abs() * d_scaled - d_base).abs(),
            );
        }
    }
    records
}

fn suite_theorem_leo1(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let d4 = dirac_d4_default::<f64>().unwrap();
    let two_point = dirac_two_point::<f64>().unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let opts = default_opts(rng);
        let (r1, r2) = random_qubit_pair(rng);
        if let Some(cert) = connes_distance(&d4, &r1, &r2, &opts)
            .unwrap()
            .seminorm_certificate
        {
            rec(&mut records, format!("d4-unit-seminorm #{k}"), (cert - 1.0).abs());
        }

        let p: f64 = rng.gen_range(0.0..1.0);
        let q: f64 = rng.gen_range(0.0..1.0);
        let s1 = DensityMatrix::two_level(p).unwrap();
        let s2 = DensityMatrix::two_level(q).unwrap();
        let res = connes_distance(&two_point, &s1, &s2, &opts).unwrap();
        if let (Some(cert), Some(e_o)) = (res.seminorm_certificate, res.optimal_element) {
            rec(
                &mut records,
                format!("two-point-unit-seminorm #{k}"),
                (cert - 1.0).abs(),
            );
            let report =
                verify_optimal(&two_point, &s1.delta(&s2), &e_o, SOLVER_SUITE_TOL).unwrap();
            rec(
                &mut records,
                format!("two-point-witness #{k}"),
                (report.objective - res.distance.value()).abs(),
            );
        }
    }
    records
}

fn suite_lemma_centralizer(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let mut records = Rec::new();

    // The worked counterexample: identity representation, D = σ₁.
    let t = SpectralTriple::new(
        Representation::Identity { n: 2 },
        HermitianMatrix::symmetrized(sigma(1)),
        "sigma1-example",
    )
    .unwrap();
    let kernel = t.seminorm_kernel();
    rec(
        &mut records,
        "fixture-kernel-dim",
        (kernel.len() as f64 - 2.0).abs(),
    );
    let rho1 = DensityMatrix::basis_projector(2, 0).unwrap();
    let plus = density_from_bloch(&BlochVector::new([1.0, 0.0, 0.0]).unwrap()).unwrap();
    let delta = rho1.delta(&plus);
    rec(
        &mut records,
        "fixture-finiteness-flag",
        if t.distance_is_finite(&delta) { 1.0 } else { 0.0 },
    );
    let res = connes_distance(&t, &rho1, &plus, &SolverOptions::default()).unwrap();
    rec(
        &mut records,
        "fixture-infinite-distance",
        if res.distance.is_finite() { 1.0 } else { 0.0 },
    );
    // Feasible elements k·σ₁ certify unbounded objective values k.
    for k in [1.0f64, 10.0, 100.0] {
        let e = sigma::<f64>(1).scale_re(k);
        let l = t.lipschitz_seminorm(&e).unwrap();
        rec(&mut records, format!("fixture-feasible-k={k}"), l);
        let objective = delta.matrix().hs_inner(&e).re.abs();
        rec(
            &mut records,
            format!("fixture-objective-k={k}"),
            (objective - k).abs(),
        );
    }

    // Central Diracs D = cI: the kernel is everything and every pair of
    // distinct states ends up at infinite distance.
    for idx in 0..trials {
        let n = if rng.gen::<bool>() { 2 } else { 3 };
        let c: f64 = rng.gen_range(-2.0..2.0);
        let central = SpectralTriple::new(
            Representation::Identity { n },
            HermitianMatrix::identity(n).scale_re(c),
            "central",
        )
        .unwrap();
        rec(
            &mut records,
            format!("central-kernel-dim #{idx}"),
            (central.seminorm_kernel().len() as f64 - (n * n) as f64).abs(),
        );
        let r1 = random_density::<f64, _>(n, rng).unwrap();
        let r2 = random_density::<f64, _>(n, rng).unwrap();
        if r1.delta(&r2).matrix().max_abs() <= 1e-9 {
            continue;
        }
        let res = connes_distance(&central, &r1, &r2, &SolverOptions::default()).unwrap();
        rec(
            &mut records,
            format!("central-infinite #{idx}"),
            if res.distance.is_finite() { 1.0 } else { 0.0 },
        );
    }
    records
}

// ---------------------------------------------------------------------------
// §4: unitary invariance
// ---------------------------------------------------------------------------

fn suite_theorem_lu(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let d4 = dirac_d4_default::<f64>().unwrap();
    let corner = dirac_corner::<f64>(3).unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let opts = default_opts(rng);

        let (r1, r2) = random_qubit_pair(rng);
        let u = random_unitary::<f64, _>(2, rng).unwrap();
        let d = connes_distance(&d4, &r1, &r2, &opts).unwrap().distance.value();
        let du = connes_distance(
            &d4,
            &r1.conjugate(&u).unwrap(),
            &r2.conjugate(&u).unwrap(),
            &opts,
        )
        .unwrap()
        .distance
        .value();
        rec(&mut records, format!("d4 #{k}"), (d - du).abs());

        let s1 = random_density::<f64, _>(3, rng).unwrap();
        let s2 = random_density::<f64, _>(3, rng).unwrap();
        let v = random_unitary::<f64, _>(3, rng).unwrap();
        let d = connes_distance(&corner, &s1, &s2, &opts)
            .unwrap()
            .distance
            .value();
        let dv = connes_distance(
            &corner,
            &s1.conjugate(&v).unwrap(),
            &s2.conjugate(&v).unwrap(),
            &opts,
        )
        .unwrap()
        .distance
        .value();
        rec(&mut records, format!("corner #{k}"), (d - dv).abs());
    }
    records
}

fn suite_theorem_udu(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let t = dirac_d4_default::<f64>().unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let opts = default_opts(rng);
        let u = random_unitary::<f64, _>(2, rng).unwrap();
        let conj = t.conjugate_dirac(&u).unwrap();
        let (r1, r2) = random_qubit_pair(rng);
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
        rec(&mut records, format!("transport #{k}"), (lhs - rhs).abs());

        if k == 0 {
            // Cross-validate the conjugated triple's closed form against the
            // general bisection path once per run.
            let forced = SolverOptions {
                force_bisection: true,
                ..opts.clone()
            };
            let lhs_forced = connes_distance(&conj, &r1, &r2, &forced)
                .unwrap()
                .distance
                .value();
            rec(
                &mut records,
                format!("transport-bisection #{k}"),
                (lhs_forced - rhs).abs(),
            );
        }
    }
    records
}

// ---------------------------------------------------------------------------
// §5: seminorm = operator norm; trace distance
// ---------------------------------------------------------------------------

fn suite_theorem_corner(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let mut records = Rec::new();
    for n in [2usize, 3, 4] {
        let t = dirac_corner::<f64>(n).unwrap();
        for k in 0..trials {
            let e = random_matrix::<f64, _>(n, rng).unwrap();
            let l = t.lipschitz_seminorm(&e).unwrap();
            rec(
                &mut records,
                format!("n={n} #{k}"),
                (l - operator_norm(&e)).abs(),
            );
        }
    }
    records
}

fn suite_theorem_t6(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let mut records = Rec::new();
    for n in [2usize, 3] {
        let t = dirac_corner::<f64>(n).unwrap();
        for k in 0..trials {
            let opts = default_opts(rng);
            let r1 = random_density::<f64, _>(n, rng).unwrap();
            let r2 = random_density::<f64, _>(n, rng).unwrap();
            let delta = r1.delta(&r2);
            let res = connes_distance(&t, &r1, &r2, &opts).unwrap();
            let d = res.distance.value();
            rec(
                &mut records,
                format!("n={n} trace-distance #{k}"),
                (d - trace_distance(&r1, &r2)).abs(),
            );
            if let Some(e_o) = res.optimal_element {
                // Eq.-style witness: unit seminorm and objective = distance,
                // both recomputed independently of the closed form.
                let l = t.lipschitz_seminorm(e_o.matrix()).unwrap();
                rec(&mut records, format!("n={n} witness-seminorm #{k}"), (l - 1.0).abs());
                let obj = delta.hs_inner_re(&e_o);
                rec(&mut records, format!("n={n} witness-objective #{k}"), (obj - d).abs());
                rec(
                    &mut records,
                    format!("n={n} witness-norm-bound #{k}"),
                    (hermitian_operator_norm(&e_o) - 1.0).max(0.0),
                );
            }
            // Sup-characterization: no contraction beats the distance.
            for p in 0..5 {
                let h = random_hermitian::<f64, _>(n, rng).unwrap();
                let norm = hermitian_operator_norm(&h);
                if norm <= 1e-12 {
                    continue;
                }
                let contraction = h.scale_re(1.0 / norm);
                let value = delta.hs_inner_re(&contraction).abs();
                rec(
                    &mut records,
                    format!("n={n} sup-char #{k}.{p}"),
                    (value - d).max(0.0),
                );
            }
        }
    }
    records
}

fn suite_example_two_point(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let t = dirac_two_point::<f64>().unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let opts = default_opts(rng);
        let p: f64 = rng.gen_range(0.0..=1.0);
        let q: f64 = rng.gen_range(0.0..=1.0);
        let r1 = DensityMatrix::two_level(p).unwrap();
        let r2 = DensityMatrix::two_level(q).unwrap();
        let d = connes_distance(&t, &r1, &r2, &opts).unwrap().distance.value();
        rec(
            &mut records,
            format!("closed-form p={p:.3} q={q:.3}"),
            (d - 2.0 * (p - q).abs()).abs(),
        );
        if k % 5 == 0 {
            let via_oracle = oracle_distance(&t, &r1, &r2, 64).unwrap();
            rec(&mut records, format!("oracle #{k}"), (via_oracle - d).abs());
        }
    }
    records
}

// ---------------------------------------------------------------------------
// §6: qubit constructions
// ---------------------------------------------------------------------------

fn suite_lemma_d4(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let t = dirac_d4_default::<f64>().unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let e = random_traceless_hermitian::<f64, _>(2, rng).unwrap();
        let l = t.lipschitz_seminorm(e.matrix()).unwrap();
        let e_norm = hermitian_operator_norm(&e);
        rec(&mut records, format!("seminorm #{k}"), (l - e_norm).abs());

        // Commutator-square law: [D₄, I⊗e]†[D₄, I⊗e] = ½(|ē|² I₄ - e ⊗ e).
        let c = t.dirac_commutator(e.matrix()).unwrap();
        let gram = c.adjoint().matmul(&c);
        let e_bloch_sq = 0.5 * e.matrix().hs_norm().powi(2);
        let want = &CMatrix::identity(4).scale_re(e_bloch_sq)
            - &e.matrix().kron(e.matrix());
        let want = want.scale_re(0.5);
        rec(
            &mut records,
            format!("square-law-entries #{k}"),
            (&gram - &want).max_abs(),
        );
        let eig = hermitian_eigen(&HermitianMatrix::symmetrized(gram)).unwrap();
        let expect = [0.0, 0.0, e_bloch_sq, e_bloch_sq];
        let ev_dev = eig
            .values
            .iter()
            .zip(expect.iter())
            .map(|(g, w)| (g - w).abs())
            .fold(0.0f64, f64::max);
        rec(&mut records, format!("square-law-spectrum #{k}"), ev_dev);
    }
    records
}

fn suite_lemma_d4p(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let mut records = Rec::new();

    // The Pauli-permuting unitaries behave exactly as advertised.
    let (up, um) = permutation_unitaries::<f64>();
    for (name, u, cycle) in [
        ("U+", &up, [(1usize, 2usize), (2, 3), (3, 1)]),
        ("U-", &um, [(3, 2), (2, 1), (1, 3)]),
    ] {
        let unit_dev = (&u.adjoint().matmul(u) - &CMatrix::identity(2)).max_abs();
        rec(&mut records, format!("{name}-unitarity"), unit_dev);
        for (from, to) in cycle {
            let got = u.matmul(&sigma(from)).matmul(&u.adjoint());
            rec(
                &mut records,
                format!("{name}-sigma{from}->sigma{to}"),
                (&got - &sigma(to)).max_abs(),
            );
        }
    }

    // All 48 signed/permuted variants are isometric on traceless elements.
    for signs in all_sign_patterns() {
        for perm in ALL_PERMS {
            let t = dirac_d4::<f64>(signs, perm).unwrap();
            for k in 0..trials {
                let e = random_traceless_hermitian::<f64, _>(2, rng).unwrap();
                let l = t.lipschitz_seminorm(e.matrix()).unwrap();
                let dev = (l - hermitian_operator_norm(&e)).abs();
                if k == 0 || dev > EXACT_SUITE_TOL {
                    rec(
                        &mut records,
                        format!("signs={signs:?} perm={perm:?} #{k}"),
                        dev,
                    );
                }
            }
        }
    }
    records
}

fn suite_theorem_d4n(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let mut records = Rec::new();

    // Fixed deep instances probed with fresh elements.
    let d16_explicit = dirac_d4n::<f64>(&[D4nFactor::plain(), D4nFactor::plain()]).unwrap();
    let random_factor = |rng: &mut ChaCha8Rng| D4nFactor {
        left: random_perm(rng),
        right: random_perm(rng),
        sign: random_sign(rng),
    };
    let d64 = dirac_d4n::<f64>(&[
        random_factor(rng),
        random_factor(rng),
        random_factor(rng),
    ])
    .unwrap();

    for k in 0..trials {
        let t16 = dirac_d4n::<f64>(&[random_factor(rng), random_factor(rng)]).unwrap();
        for (name, t) in [("random-16", &t16), ("explicit-16", &d16_explicit), ("random-64", &d64)]
        {
            let e = random_traceless_hermitian::<f64, _>(2, rng).unwrap();
            let l = t.lipschitz_seminorm(e.matrix()).unwrap();
            rec(
                &mut records,
                format!("{name} #{k}"),
                (l - hermitian_operator_norm(&e)).abs(),
            );
        }
    }
    records
}

fn suite_lemma_insert(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let mut records = Rec::new();
    for k in 0..trials {
        let base = dirac_d4::<f64>(
            [random_sign(rng), random_sign(rng), random_sign(rng)],
            random_perm(rng),
        )
        .unwrap();
        let m_dim = if rng.gen::<bool>() { 2 } else { 3 };
        let m = loop {
            let cand = random_hermitian::<f64, _>(m_dim, rng).unwrap();
            if cand.matrix().max_abs() > 1e-6 {
                break cand;
            }
        };
        let inserted = dirac_tensor_insert(&base, &m).unwrap();
        rec(
            &mut records,
            format!("flag-inherited #{k}"),
            if inserted.isometric_flag() == base.isometric_flag() {
                0.0
            } else {
                1.0
            },
        );
        for p in 0..3 {
            let e = random_hermitian::<f64, _>(2, rng).unwrap();
            let a = base.lipschitz_seminorm(e.matrix()).unwrap();
            let b = inserted.lipschitz_seminorm(e.matrix()).unwrap();
            rec(&mut records, format!("seminorm #{k}.{p}"), (a - b).abs());
        }
        // M and 2.5M produce the identical operator.
        let rescaled = dirac_tensor_insert(&base, &m.scale_re(2.5)).unwrap();
        rec(
            &mut records,
            format!("m-scale-invariance #{k}"),
            (inserted.dirac().matrix().matrix() - rescaled.dirac().matrix().matrix()).max_abs(),
        );
    }
    records
}

fn suite_example_d8(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    // Base with left factors (σ₂, σ₃, σ₁) against right (σ₁, σ₂, σ₃): the
    // term list of the worked D₈.
    let base = dirac_d4::<f64>([Sign::Plus; 3], [3, 1, 2]).unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let m = loop {
            let cand = random_hermitian::<f64, _>(2, rng).unwrap();
            if cand.matrix().max_abs() > 1e-6 {
                break cand;
            }
        };
        let t8 = dirac_tensor_insert(&base, &m).unwrap();

        let m_tilde = m.matrix().scale_re(1.0 / hermitian_operator_norm(&m));
        let mut explicit = CMatrix::<f64>::zeros(8);
        for (left, right) in [(2usize, 1usize), (3, 2), (1, 3)] {
            explicit = &explicit + &sigma(left).kron(&m_tilde).kron(&sigma(right));
        }
        let explicit = explicit.scale_re(0.25);
        rec(
            &mut records,
            format!("explicit-match #{k}"),
            (t8.dirac().matrix().matrix() - &explicit).max_abs(),
        );

        let e = random_traceless_hermitian::<f64, _>(2, rng).unwrap();
        let l = t8.lipschitz_seminorm(e.matrix()).unwrap();
        rec(
            &mut records,
            format!("isometry #{k}"),
            (l - hermitian_operator_norm(&e)).abs(),
        );

        let opts = default_opts(rng);
        let (r1, r2) = random_qubit_pair(rng);
        let d = connes_distance(&t8, &r1, &r2, &opts).unwrap().distance.value();
        let want = bloch_from_density(&r1)
            .unwrap()
            .distance(&bloch_from_density(&r2).unwrap());
        rec(&mut records, format!("distance #{k}"), (d - want).abs());
    }
    records
}

fn suite_corollary_bloch(trials: usize, rng: &mut ChaCha8Rng) -> Rec {
    let t = dirac_d4_default::<f64>().unwrap();
    let mut records = Rec::new();
    for k in 0..trials {
        let opts = default_opts(rng);
        let mut r1 = crate::matcore::random_bloch::<f64, _>(rng);
        let r2 = crate::matcore::random_bloch::<f64, _>(rng);
        if k % 2 == 0 {
            // Pure state on the sphere surface.
            let n = (r1[0] * r1[0] + r1[1] * r1[1] + r1[2] * r1[2]).sqrt();
            if n > 1e-6 {
                for v in r1.iter_mut() {
                    *v /= n;
                }
            } else {
                r1 = [0.0, 0.0, 1.0];
            }
        }
        let b1 = BlochVector::new(r1).unwrap();
        let b2 = BlochVector::new(r2).unwrap();
        let rho1 = density_from_bloch(&b1).unwrap();
        let rho2 = density_from_bloch(&b2).unwrap();

        rec(
            &mut records,
            format!("round-trip #{k}"),
            bloch_from_density(&rho1)
                .unwrap()
                .distance(&b1),
        );
        let d = connes_distance(&t, &rho1, &rho2, &opts).unwrap().distance.value();
        rec(
            &mut records,
            format!("euclidean #{k}"),
            (d - b1.distance(&b2)).abs(),
        );
    }
    records
}

pub(crate) const REGISTRY: &[SuiteDef] = &[
    SuiteDef {
        name: "lemma-d0",
        tolerance: SOLVER_SUITE_TOL,
        ops: &["connes_distance", "lipschitz_seminorm"],
        runner: suite_lemma_d0,
    },
    SuiteDef {
        name: "lemma-shift",
        tolerance: SOLVER_SUITE_TOL,
        ops: &["connes_distance", "lipschitz_seminorm"],
        runner: suite_lemma_shift,
    },
    SuiteDef {
        name: "lemma-tloe",
        tolerance: SOLVER_SUITE_TOL,
        ops: &["connes_distance", "verify_optimal"],
        runner: suite_lemma_tloe,
    },
    SuiteDef {
        name: "lemma-scaling",
        tolerance: SOLVER_SUITE_TOL,
        ops: &["connes_distance"],
        runner: suite_lemma_scaling,
    },
    SuiteDef {
        name: "theorem-Leo1",
        tolerance: SOLVER_SUITE_TOL,
        ops: &["connes_distance", "verify_optimal", "dirac_two_point"],
        runner: suite_theorem_leo1,
    },
    SuiteDef {
        name: "lemma-centralizer",
        tolerance: EXACT_SUITE_TOL,
        ops: &[
            "seminorm_kernel",
            "distance_is_finite",
            "connes_distance",
            "lipschitz_seminorm",
        ],
        runner: suite_lemma_centralizer,
    },
    SuiteDef {
        name: "theorem-lu",
        tolerance: SOLVER_SUITE_TOL,
        ops: &["connes_distance", "dirac_corner"],
        runner: suite_theorem_lu,
    },
    SuiteDef {
        name: "theorem-udu",
        tolerance: SOLVER_SUITE_TOL,
        ops: &["connes_distance", "conjugate_dirac"],
        runner: suite_theorem_udu,
    },
    SuiteDef {
        name: "theorem-corner",
        tolerance: EXACT_SUITE_TOL,
        ops: &["dirac_corner", "lipschitz_seminorm"],
        runner: suite_theorem_corner,
    },
    SuiteDef {
        name: "theorem-t6",
        tolerance: SOLVER_SUITE_TOL,
        ops: &[
            "dirac_corner",
            "connes_distance",
            "trace_distance",
            "optimal_element_tracenorm",
        ],
        runner: suite_theorem_t6,
    },
    SuiteDef {
        name: "example-two-point",
        tolerance: EXACT_SUITE_TOL,
        ops: &["dirac_two_point", "connes_distance", "oracle_distance"],
        runner: suite_example_two_point,
    },
    SuiteDef {
        name: "lemma-d4",
        tolerance: EXACT_SUITE_TOL,
        ops: &["dirac_d4", "lipschitz_seminorm"],
        runner: suite_lemma_d4,
    },
    SuiteDef {
        name: "lemma-d4p",
        tolerance: EXACT_SUITE_TOL,
        ops: &["dirac_d4", "permutation_unitaries", "lipschitz_seminorm"],
        runner: suite_lemma_d4p,
    },
    SuiteDef {
        name: "theorem-d4n",
        tolerance: EXACT_SUITE_TOL,
        ops: &["dirac_d4n", "lipschitz_seminorm"],
        runner: suite_theorem_d4n,
    },
    SuiteDef {
        name: "lemma-insert",
        tolerance: EXACT_SUITE_TOL,
        ops: &["dirac_tensor_insert", "dirac_d4", "lipschitz_seminorm"],
        runner: suite_lemma_insert,
    },
    SuiteDef {
        name: "example-d8",
        tolerance: SOLVER_SUITE_TOL,
        ops: &[
            "dirac_tensor_insert",
            "dirac_d4",
            "connes_distance",
            "bloch_from_density",
        ],
        runner: suite_example_d8,
    },
    SuiteDef {
        name: "corollary-bloch",
        tolerance: SOLVER_SUITE_TOL,
        ops: &[
            "density_from_bloch",
            "bloch_from_density",
            "connes_distance",
        ],
        runner: suite_corollary_bloch,
    },
];
