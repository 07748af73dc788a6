//! Brute-force oracle: grid search over directions of the reduced space.
//!
//! Independent of the bisection/dual machinery by design — it never touches
//! supergradients or dual variables, only evaluates the scale-invariant
//! ratio `⟨w,u⟩ / L(u)` on a direction grid and refines locally. Used in
//! tests as ground truth.

use crate::error::{Error, Result};
use crate::scalar::{real, Scalar};
use crate::solver::search::{normalize, SearchSpace};

/// Maximize the ratio over the unit sphere of the reduced space.
///
/// `grid` counts the coarse directions; the best patch is then refined with
/// golden-section line searches along tangent directions.
pub(crate) fn oracle_max_ratio<T: Scalar>(
    space: &SearchSpace<T>,
    w: &[T],
    grid: usize,
) -> Result<T> {
    if grid < 8 {
        return Err(Error::argument("oracle grid must be at least 8"));
    }
    let m = space.dim();
    let eval = |u: &[T]| -> T { space.ratio(w, u).unwrap_or(-T::infinity()) };

    let (mut best, mut best_u): (T, Vec<T>) = match m {
        0 => return Err(Error::argument("empty search space")),
        1 => {
            let plus = eval(&[T::one()]);
            let minus = eval(&[-T::one()]);
            // One-dimensional ratio is constant along each ray; done.
            return Ok(if plus > minus { plus } else { minus });
        }
        2 => {
            let mut best = -T::infinity();
            let mut best_u = vec![T::one(), T::zero()];
            for k in 0..grid {
                let theta = 2.0 * std::f64::consts::PI * (k as f64) / (grid as f64);
                let u = vec![real::<T>(theta.cos()), real::<T>(theta.sin())];
                let v = eval(&u);
                if v > best {
                    best = v;
                    best_u = u;
                }
            }
            (best, best_u)
        }
        3 => {
            // Fibonacci sphere: near-uniform coverage of S².
            let golden_angle = std::f64::consts::PI * (3.0 - 5f64.sqrt());
            let mut best = -T::infinity();
            let mut best_u = vec![T::zero(), T::zero(), T::one()];
            for k in 0..grid {
                let z = 1.0 - 2.0 * (k as f64 + 0.5) / (grid as f64);
                let r = (1.0 - z * z).sqrt();
                let phi = golden_angle * k as f64;
                let u = vec![
                    real::<T>(r * phi.cos()),
                    real::<T>(r * phi.sin()),
                    real::<T>(z),
                ];
                let v = eval(&u);
                if v > best {
                    best = v;
                    best_u = u;
                }
            }
            (best, best_u)
        }
        _ => {
            return Err(Error::capacity(format!(
                "oracle supports reduced search spaces of dimension <= 3, got {m}"
            )))
        }
    };

    // Local refinement: golden-section searches along tangent directions of
    // the best patch, with a shrinking trust interval.
    let golden: T = real(0.618_033_988_749_894_9);
    let mut h: T = real(4.0 / (grid as f64).sqrt());
    for _round in 0..60 {
        for axis in 0..m {
            // Tangent direction: e_axis orthogonalized against u.
            let mut dir = vec![T::zero(); m];
            dir[axis] = T::one();
            let overlap: T = best_u[axis];
            for (d, &u) in dir.iter_mut().zip(best_u.iter()) {
                *d -= overlap * u;
            }
            if !normalize(&mut dir) {
                continue;
            }
            let line = |t: T| -> T {
                let mut y: Vec<T> = best_u
                    .iter()
                    .zip(dir.iter())
                    .map(|(&a, &b)| a + t * b)
                    .collect();
                if !normalize(&mut y) {
                    return -T::infinity();
                }
                eval(&y)
            };
            let (mut a, mut b) = (-h, h);
            for _ in 0..40 {
                let d = golden * (b - a);
                let t1 = b - d;
                let t2 = a + d;
                if line(t1) >= line(t2) {
                    b = t2;
                } else {
                    a = t1;
                }
            }
            let t = (a + b) * real(0.5);
            let v = line(t);
            if v > best {
                best = v;
                for (u, &d) in best_u.iter_mut().zip(dir.iter()) {
                    *u += t * d;
                }
                normalize(&mut best_u);
            }
        }
        h *= real(0.6);
        if h < real(1e-9) {
            break;
        }
    }
    Ok(best)
}
