//! Primal route: quasiconcave-ratio bisection with a projected supergradient
//! inner ascent, followed by a local ratio polish.
//!
//! Every accepted trial value is backed by a feasible witness direction, so
//! the returned value is a certified lower bound on the distance
//! `d* = sup ⟨w,x⟩ / L(x)`. The matching upper bound comes from the dual
//! (see `dual.rs`).

use crate::scalar::{real, Scalar};
use crate::solver::search::{dot, norm2, normalize, SearchSpace};
use rand::Rng;
use rand_distr::{Distribution, StandardNormal};

pub(crate) struct PrimalOutcome<T: Scalar> {
    /// Best certified ratio (lower bound on the distance).
    pub lower: T,
    /// Witness direction attaining `lower`.
    pub witness: Vec<T>,
    pub bisection_steps: usize,
    pub inner_iterations: usize,
}

pub(crate) struct PrimalParams<T: Scalar> {
    pub tol: T,
    pub max_bisection: usize,
    pub inner_iters: usize,
    pub restarts: usize,
    /// Step-size constant `c` of the diminishing schedule `c/√k`;
    /// set to `‖Δρ‖_HS` by the caller.
    pub step_scale: T,
}

/// Maximize `φ_s(x) = ⟨w,x⟩ - s L(x)` over the unit ball from one start.
/// Returns the best ratio seen and the iterations spent; fills `witness`
/// when the ratio improves on `best_ratio`.
///
/// Exits as soon as a certified ratio above `s` appears, and gives up on a
/// start once the best iterate has stalled (the diminishing schedule makes
/// later progress negligible).
#[allow(clippy::too_many_arguments)]
fn ascend<T: Scalar>(
    space: &SearchSpace<T>,
    w: &[T],
    s: T,
    start: &[T],
    params: &PrimalParams<T>,
    best_ratio: &mut T,
    witness: &mut Vec<T>,
    found_positive: &mut bool,
) -> usize {
    const STALL_WINDOW: usize = 200;
    let m = space.dim();
    let mut x = start.to_vec();
    if !normalize(&mut x) {
        return 0;
    }
    let mut iters = 0usize;
    let mut best_phi = -T::infinity();
    let mut last_progress = 0usize;
    for k in 1..=params.inner_iters {
        iters += 1;
        let frame = space.frame(&x);
        // Track the certified ratio at every iterate.
        if frame.norm > T::zero() {
            let ratio = dot(w, &x) / frame.norm;
            if ratio > *best_ratio {
                *best_ratio = ratio;
                witness.clear();
                witness.extend_from_slice(&x);
            }
            if ratio > s {
                *found_positive = true;
                return iters;
            }
        }
        let phi = dot(w, &x) - s * frame.norm;
        if phi > best_phi + params.tol * real(1e-3) {
            best_phi = phi;
            last_progress = k;
        } else if k - last_progress > STALL_WINDOW {
            return iters;
        }
        // Supergradient step with the c/√k schedule, best-iterate kept above.
        let step = params.step_scale / real::<T>(k as f64).sqrt();
        for j in 0..m {
            x[j] += step * (w[j] - s * frame.grad[j]);
        }
        let n = norm2(&x);
        if n > T::one() {
            for v in x.iter_mut() {
                *v /= n;
            }
        } else if n <= T::zero() {
            return iters;
        }
    }
    iters
}

/// Local maximization of the ratio `⟨w,x⟩ / L(x)` on the unit sphere by
/// gradient steps with a golden-section line search. The ratio is evaluated
/// exactly at every trial point, so accepted improvements are certified.
pub(crate) fn polish_ratio<T: Scalar>(
    space: &SearchSpace<T>,
    w: &[T],
    start: &[T],
    rounds: usize,
) -> (T, Vec<T>) {
    let mut x = start.to_vec();
    if !normalize(&mut x) {
        return (T::zero(), x);
    }
    let mut best = match space.ratio(w, &x) {
        Some(r) => r,
        None => return (T::zero(), x),
    };
    let golden: T = real(0.618_033_988_749_894_9);
    for _ in 0..rounds {
        let frame = space.frame(&x);
        if frame.norm <= T::zero() {
            break;
        }
        let rho = dot(w, &x) / frame.norm;
        // Ascent direction of the ratio: (w - ρ ∂L) / L, projected later by
        // renormalization.
        let mut dir: Vec<T> = (0..space.dim())
            .map(|j| w[j] - rho * frame.grad[j])
            .collect();
        let dn = norm2(&dir);
        if dn <= T::epsilon() * real(16.0) * (T::one() + norm2(w)) {
            break;
        }
        for d in dir.iter_mut() {
            *d /= dn;
        }

        let eval = |t: T| -> T {
            let mut y: Vec<T> = x.iter().zip(dir.iter()).map(|(&a, &b)| a + t * b).collect();
            if !normalize(&mut y) {
                return -T::infinity();
            }
            space.ratio(w, &y).unwrap_or(-T::infinity())
        };

        // Golden-section search on t in [0, hi], growing hi while it helps.
        let mut hi = T::one();
        while eval(hi + hi) > eval(hi) && hi < real(64.0) {
            hi = hi + hi;
        }
        let (mut a, mut b) = (T::zero(), hi);
        for _ in 0..48 {
            let d = golden * (b - a);
            let t1 = b - d;
            let t2 = a + d;
            if eval(t1) >= eval(t2) {
                b = t2;
            } else {
                a = t1;
            }
        }
        let t_best = (a + b) * real(0.5);
        let candidate = eval(t_best);
        if candidate > best {
            best = candidate;
            for (xi, di) in x.iter_mut().zip(dir.iter()) {
                *xi += t_best * *di;
            }
            normalize(&mut x);
        } else {
            break;
        }
    }
    (best, x)
}

/// The bisection driver. `w` must be non-zero (coincident states and
/// infinite distances are handled by the caller). `upper_cap`, when present,
/// is a certified upper bound on the distance (from the dual) that seeds
/// the bracket; otherwise the bracket is found by doubling.
pub(crate) fn primal_bisection<T: Scalar, R: Rng>(
    space: &SearchSpace<T>,
    w: &[T],
    params: &PrimalParams<T>,
    rng: &mut R,
    upper_cap: Option<T>,
) -> PrimalOutcome<T> {
    let m = space.dim();
    let mut inner_total = 0usize;

    // Start at the projection of Δρ onto the search space: a feasible
    // direction, hence a valid lower bound for the ratio.
    let mut witness = w.to_vec();
    normalize(&mut witness);
    let mut lower = space.ratio(w, &witness).unwrap_or(T::zero());

    // The polish is cheap relative to the ascent; sharpening the witness
    // first saves most of the trial values below.
    let (polished, px) = polish_ratio(space, w, &witness, 60);
    if polished > lower {
        lower = polished;
        witness = px;
    }

    let mut starts: Vec<Vec<T>> = Vec::with_capacity(params.restarts.max(1));
    starts.push(witness.clone());
    while starts.len() < params.restarts.max(1) {
        let v: Vec<T> = (0..m)
            .map(|_| {
                let g: f64 = StandardNormal.sample(rng);
                real(g)
            })
            .collect();
        starts.push(v);
    }

    // Bracket: take the certified cap when we have one, else double past
    // the optimum until a trial value fails.
    let mut upper = match upper_cap {
        Some(cap) => {
            if cap > lower {
                cap
            } else {
                lower + params.tol
            }
        }
        None => {
            let mut hi = if lower > T::zero() { lower } else { params.tol };
            for _ in 0..64 {
                let trial = hi * real(2.0);
                let mut found = false;
                for st in &starts {
                    inner_total += ascend(
                        space,
                        w,
                        trial,
                        st,
                        params,
                        &mut lower,
                        &mut witness,
                        &mut found,
                    );
                    if found {
                        break;
                    }
                }
                hi = trial;
                if !found {
                    break;
                }
            }
            hi
        }
    };

    // Bisect; accepted trials always come with a witness via `lower`.
    let mut bis_steps = 0usize;
    while bis_steps < params.max_bisection && (upper - lower) > params.tol * real(0.25) {
        bis_steps += 1;
        let s = (lower + upper) * real(0.5);
        let mut found = false;
        for st in std::iter::once(&witness.clone()).chain(starts.iter()) {
            inner_total += ascend(
                space,
                w,
                s,
                st,
                params,
                &mut lower,
                &mut witness,
                &mut found,
            );
            if found {
                break;
            }
        }
        if !found {
            upper = s;
        } else {
            // A freshly improved witness is worth polishing right away; it
            // often jumps `lower` past several future trial values.
            let (p, pxx) = polish_ratio(space, w, &witness, 30);
            if p > lower {
                lower = p;
                witness = pxx;
            }
        }
    }

    // Final sharpening of the witness.
    let (polished, px) = polish_ratio(space, w, &witness, 120);
    if polished > lower {
        lower = polished;
        witness = px;
    }

    PrimalOutcome {
        lower,
        witness,
        bisection_steps: bis_steps,
        inner_iterations: inner_total,
    }
}
