//! The Connes-distance solver.
//!
//! `d(ρ₁, ρ₂) = sup { tr(Δρ e) : ‖[D, π(e)]‖_op ≤ 1 }` is computed along
//! three routes:
//!
//! * **Closed form** — on triples whose Lipschitz seminorm is certified to
//!   equal the operator norm, the supremum is the trace norm of `Δρ` with
//!   the sign-matrix optimal element.
//! * **Bisection** — the general path: a certified bracket around the
//!   scale-invariant ratio `tr(Δρ e)/L(e)`. The lower end is a feasible
//!   witness found by supergradient ascent inside a bisection on the trial
//!   value plus a local polish; the upper end is a trace-norm dual
//!   certificate. The result is accepted only when the bracket closes to
//!   the requested tolerance.
//! * **Oracle** — a brute-force direction grid, kept deliberately
//!   independent of the other two for cross-checks.

mod bisection;
mod dual;
mod oracle;
mod search;

use crate::error::{Error, Result};
use crate::matcore::{hermitian_trace_norm, rng_from_seed, HermitianMatrix};
use crate::scalar::{real, Scalar};
use crate::states::{optimal_element_tracenorm, DensityMatrix};
use crate::tol;
use crate::triple::{IsometryFlag, SpectralTriple};
use bisection::{primal_bisection, PrimalParams};
use dual::dual_upper_bound;
use search::{norm2, SearchSpace};

/// Accuracy and effort knobs for the bisection path.
#[derive(Clone, Debug)]
pub struct SolverOptions<T: Scalar> {
    /// Target absolute accuracy of the distance (default `1e-6`).
    pub tol: T,
    /// Bisection step cap (default 60).
    pub max_bisection: usize,
    /// Inner ascent iteration cap per trial value (default 5000).
    pub inner_iters: usize,
    /// Random restarts of the inner ascent (default 8).
    pub restarts: usize,
    /// RNG seed for the restarts; results are deterministic per seed.
    pub seed: u64,
    /// Debug switch: skip the closed form even when certified, to
    /// cross-validate the bisection path.
    pub force_bisection: bool,
}

impl<T: Scalar> Default for SolverOptions<T> {
    fn default() -> Self {
        SolverOptions {
            tol: real(1e-6),
            max_bisection: 60,
            inner_iters: 5000,
            restarts: 8,
            seed: 0,
            force_bisection: false,
        }
    }
}

impl<T: Scalar> SolverOptions<T> {
    fn validate(&self) -> Result<()> {
        if self.tol <= T::zero() || self.tol.is_nan() {
            return Err(Error::argument("solver tol must be positive"));
        }
        if self.max_bisection < 1 || self.inner_iters < 1 || self.restarts < 1 {
            return Err(Error::argument("solver iteration counts must be >= 1"));
        }
        Ok(())
    }
}

/// A distance value; infinity is a value, not an error, so the
/// infinite-distance fixtures are first-class results.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Distance<T: Scalar> {
    Finite(T),
    Infinite,
}

impl<T: Scalar> Distance<T> {
    pub fn is_finite(&self) -> bool {
        matches!(self, Distance::Finite(_))
    }

    /// Finite value, or `+∞` of the scalar type.
    pub fn value(&self) -> T {
        match self {
            Distance::Finite(v) => *v,
            Distance::Infinite => T::infinity(),
        }
    }
}

/// Which route produced the result.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    ClosedForm,
    Bisection,
    Oracle,
}

impl Method {
    pub fn as_str(&self) -> &'static str {
        match self {
            Method::ClosedForm => "closed_form",
            Method::Bisection => "bisection",
            Method::Oracle => "oracle",
        }
    }
}

/// Iteration diagnostics of a solve.
#[derive(Clone, Copy, Debug, Default)]
pub struct Diagnostics {
    pub bisection_steps: usize,
    pub inner_iterations: usize,
    pub dual_iterations: usize,
    /// Certified bracket `[lower, upper]` when the bisection ran.
    pub bracket: Option<(f64, f64)>,
}

/// Distance, witness and certificates.
#[derive(Clone, Debug)]
pub struct SolverResult<T: Scalar> {
    pub distance: Distance<T>,
    /// Absent when the distance is infinite or the states coincide.
    pub optimal_element: Option<HermitianMatrix<T>>,
    /// `L(e_o)`; 1 up to solver accuracy for distinct states.
    pub seminorm_certificate: Option<T>,
    /// `tr(Δρ e_o)`; equals the distance up to solver accuracy.
    pub objective_certificate: Option<T>,
    pub method: Method,
    pub iterations: Diagnostics,
}

fn check_state<T: Scalar>(triple: &SpectralTriple<T>, rho: &DensityMatrix<T>) -> Result<()> {
    if rho.dim() != triple.algebra_dim() {
        return Err(Error::Dimension {
            expected: triple.algebra_dim(),
            got: rho.dim(),
        });
    }
    if !triple.contains_element(rho.hermitian(), tol::verification::<T>()) {
        return Err(Error::argument(
            "state lies outside the triple's (sub)algebra",
        ));
    }
    Ok(())
}

/// The Connes spectral distance between two states of the triple's algebra.
pub fn connes_distance<T: Scalar>(
    triple: &SpectralTriple<T>,
    rho1: &DensityMatrix<T>,
    rho2: &DensityMatrix<T>,
    opts: &SolverOptions<T>,
) -> Result<SolverResult<T>> {
    opts.validate()?;
    check_state(triple, rho1)?;
    check_state(triple, rho2)?;
    distance_of_delta(triple, &rho1.delta(rho2), opts)
}

/// Distance driven directly by `Δρ = ρ₁ - ρ₂`.
pub fn distance_of_delta<T: Scalar>(
    triple: &SpectralTriple<T>,
    delta: &HermitianMatrix<T>,
    opts: &SolverOptions<T>,
) -> Result<SolverResult<T>> {
    opts.validate()?;
    if delta.dim() != triple.algebra_dim() {
        return Err(Error::Dimension {
            expected: triple.algebra_dim(),
            got: delta.dim(),
        });
    }

    // Coincident states: distance zero, any element is optimal, none reported.
    if delta.matrix().max_abs() <= tol::state_coincidence::<T>() {
        return Ok(SolverResult {
            distance: Distance::Finite(T::zero()),
            optimal_element: None,
            seminorm_certificate: None,
            objective_certificate: None,
            method: Method::ClosedForm,
            iterations: Diagnostics::default(),
        });
    }

    // A kernel overlap makes the supremum unbounded.
    if !triple.distance_is_finite(delta) {
        return Ok(SolverResult {
            distance: Distance::Infinite,
            optimal_element: None,
            seminorm_certificate: None,
            objective_certificate: None,
            method: Method::ClosedForm,
            iterations: Diagnostics::default(),
        });
    }

    if triple.isometric_flag() != IsometryFlag::No && !opts.force_bisection {
        return closed_form(triple, delta);
    }
    bisection_distance(triple, delta, opts)
}

fn closed_form<T: Scalar>(
    triple: &SpectralTriple<T>,
    delta: &HermitianMatrix<T>,
) -> Result<SolverResult<T>> {
    let distance = hermitian_trace_norm(delta);
    let e_o = optimal_element_tracenorm(delta);
    let seminorm = triple.lipschitz_seminorm(e_o.matrix())?;
    let objective = delta.hs_inner_re(&e_o);
    Ok(SolverResult {
        distance: Distance::Finite(distance),
        optimal_element: Some(e_o),
        seminorm_certificate: Some(seminorm),
        objective_certificate: Some(objective),
        method: Method::ClosedForm,
        iterations: Diagnostics::default(),
    })
}

fn bisection_distance<T: Scalar>(
    triple: &SpectralTriple<T>,
    delta: &HermitianMatrix<T>,
    opts: &SolverOptions<T>,
) -> Result<SolverResult<T>> {
    let space = SearchSpace::build(triple)?;
    if space.dim() == 0 {
        // Everything commutes with D; a non-zero delta was already caught by
        // the finiteness test, so this is unreachable for valid inputs.
        return Err(Error::argument("empty search space"));
    }
    let w = space.objective_coefficients(delta);
    if norm2(&w) <= real(1e-14) {
        return Ok(SolverResult {
            distance: Distance::Finite(T::zero()),
            optimal_element: None,
            seminorm_certificate: None,
            objective_certificate: None,
            method: Method::Bisection,
            iterations: Diagnostics::default(),
        });
    }

    let params = PrimalParams {
        tol: opts.tol,
        max_bisection: opts.max_bisection,
        inner_iters: opts.inner_iters,
        restarts: opts.restarts,
        step_scale: delta.matrix().hs_norm(),
    };
    // The dual certificate first: it caps the bisection bracket, so the
    // primal only spends trial values on closing the witness side.
    let dual_tol = (opts.tol * real(0.01)).min(real(1e-9));
    let dual = dual_upper_bound(&space, &w, dual_tol, 50_000).ok_or_else(|| {
        Error::argument("dual system is numerically singular; kernel cut may be misconfigured")
    })?;

    let mut rng = rng_from_seed(opts.seed);
    let primal = primal_bisection(&space, &w, &params, &mut rng, Some(dual.upper));

    let mut lower = primal.lower;
    let mut upper = dual.upper;
    if upper < lower {
        // Both ends are certified up to floating-point error; reconcile.
        std::mem::swap(&mut lower, &mut upper);
    }

    let width = upper - lower;
    if width > opts.tol {
        return Err(Error::SolverDiagnostic {
            lower: lower.to_f64().unwrap_or(f64::NAN),
            upper: upper.to_f64().unwrap_or(f64::NAN),
            tol: opts.tol.to_f64().unwrap_or(f64::NAN),
            detail: format!(
                "primal witness and dual certificate did not meet \
                 (bisection steps {}, inner iterations {}, dual iterations {})",
                primal.bisection_steps, primal.inner_iterations, dual.iterations
            ),
        });
    }

    let distance = (lower + upper) * real(0.5);
    // Scale the witness onto the seminorm unit sphere: the optimal element.
    let l_witness = space.seminorm(&primal.witness);
    let coords: Vec<T> = primal.witness.iter().map(|&c| c / l_witness).collect();
    let e_o = space.element(&coords);
    let seminorm = triple.lipschitz_seminorm(e_o.matrix())?;
    let objective = delta.hs_inner_re(&e_o);

    Ok(SolverResult {
        distance: Distance::Finite(distance),
        optimal_element: Some(e_o),
        seminorm_certificate: Some(seminorm),
        objective_certificate: Some(objective),
        method: Method::Bisection,
        iterations: Diagnostics {
            bisection_steps: primal.bisection_steps,
            inner_iterations: primal.inner_iterations,
            dual_iterations: dual.iterations,
            bracket: Some((
                lower.to_f64().unwrap_or(f64::NAN),
                upper.to_f64().unwrap_or(f64::NAN),
            )),
        },
    })
}

/// Brute-force reference value (see module docs); algebra dimension 2 only.
pub fn oracle_distance<T: Scalar>(
    triple: &SpectralTriple<T>,
    rho1: &DensityMatrix<T>,
    rho2: &DensityMatrix<T>,
    grid: usize,
) -> Result<T> {
    if triple.algebra_dim() != 2 {
        return Err(Error::capacity(
            "oracle_distance supports algebra dimension 2 only",
        ));
    }
    check_state(triple, rho1)?;
    check_state(triple, rho2)?;
    let delta = rho1.delta(rho2);
    if delta.matrix().max_abs() <= tol::state_coincidence::<T>() {
        return Ok(T::zero());
    }
    if !triple.distance_is_finite(&delta) {
        return Ok(T::infinity());
    }
    let space = SearchSpace::build(triple)?;
    let w = space.objective_coefficients(&delta);
    oracle::oracle_max_ratio(&space, &w, grid)
}

/// Report of an optimality check for a proposed element.
#[derive(Clone, Debug)]
pub struct OptimalityReport<T: Scalar> {
    /// `L(e)`.
    pub seminorm: T,
    /// `tr(delta · e)`.
    pub objective: T,
    /// The distance the element is judged against.
    pub reference_distance: Distance<T>,
    /// `|L(e) - 1| <= tol`.
    pub seminorm_ok: bool,
    /// `|tr(delta e) - d| <= tol`.
    pub objective_ok: bool,
    pub pass: bool,
}

/// Check the optimality contract for `e`: unit seminorm and objective equal
/// to the distance, both within `tol`.
pub fn verify_optimal<T: Scalar>(
    triple: &SpectralTriple<T>,
    delta: &HermitianMatrix<T>,
    e: &HermitianMatrix<T>,
    tol_accept: T,
) -> Result<OptimalityReport<T>> {
    let seminorm = triple.lipschitz_seminorm(e.matrix())?;
    let objective = delta.hs_inner_re(e);

    let solver_tol = (tol_accept * real(0.25)).min(real(1e-6));
    let opts = SolverOptions {
        tol: solver_tol,
        ..SolverOptions::default()
    };
    let reference = distance_of_delta(triple, delta, &opts)?;

    let (seminorm_ok, objective_ok) = match reference.distance {
        Distance::Finite(d) => (
            (seminorm - T::one()).abs() <= tol_accept,
            (objective - d).abs() <= tol_accept,
        ),
        Distance::Infinite => (false, false),
    };
    Ok(OptimalityReport {
        seminorm,
        objective,
        reference_distance: reference.distance,
        seminorm_ok,
        objective_ok,
        pass: seminorm_ok && objective_ok,
    })
}
