//! Muller's method for analytic complex root finding.
//!
//! Works on functions returned in scaled form so it can chase zeros of the
//! dispersion determinant without ever exponentiating the stiff growth
//! factor. The quadratic model is built on mantissas brought to a common
//! log level, which leaves the root locations untouched.

use crate::error::{Error, Result};
use crate::num::scaled::ScaledComplex;
use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct MullerOptions {
    /// Stop when |f| (at the common scale level) falls below this.
    pub tol_f: f64,
    /// Stop when the step is below tol_x * (1 + |z|).
    pub tol_x: f64,
    pub max_iter: usize,
    /// Relative spread of the three starting points.
    pub spread: f64,
}

impl Default for MullerOptions {
    fn default() -> Self {
        MullerOptions { tol_f: 1e-11, tol_x: 1e-13, max_iter: 50, spread: 1e-3 }
    }
}

#[derive(Debug, Clone)]
pub struct MullerOutcome {
    pub root: Complex64,
    /// |f(root)| relative to the function scale at the starting triplet.
    pub f_abs_rel: f64,
    pub iters: usize,
    pub converged: bool,
}

/// Run Muller iteration from `z0`. `domain` rejects iterates that leave the
/// admissible region (the search then stops unconverged rather than erroring,
/// because leaving the region is usually a meaningful "no root here").
pub fn muller(
    mut f: impl FnMut(Complex64) -> Result<ScaledComplex>,
    z0: Complex64,
    opts: &MullerOptions,
    domain: impl Fn(Complex64) -> bool,
) -> Result<MullerOutcome> {
    let h = opts.spread * (1.0 + z0.norm());
    let mut z = [z0 + Complex64::new(h, 0.0), z0 + Complex64::new(0.0, h), z0];
    let mut fv = [ScaledComplex::from_complex(Complex64::new(0.0, 0.0)); 3];
    for i in 0..3 {
        if !domain(z[i]) {
            return Ok(MullerOutcome { root: z[i], f_abs_rel: f64::INFINITY, iters: 0, converged: false });
        }
        fv[i] = f(z[i])?;
    }
    // Residuals are judged against the function scale where the search
    // started; the per-iteration level only serves the quadratic model.
    let level0 = fv.iter().map(|v| v.ln_abs()).fold(f64::NEG_INFINITY, f64::max);
    let mut best = (z[2], f64::INFINITY);
    let mut since_improved = 0usize;
    for it in 0..opts.max_iter {
        // Bring the three values to a common scale; roots are scale free.
        let level = fv.iter().map(|v| v.log_scale).fold(f64::NEG_INFINITY, f64::max);
        let w: Vec<Complex64> = fv.iter().map(|v| v.at_level(level)).collect();

        let q = (z[2] - z[1]) / (z[1] - z[0]);
        let a = q * w[2] - q * (1.0 + q) * w[1] + q * q * w[0];
        let b = (2.0 * q + 1.0) * w[2] - (1.0 + q) * (1.0 + q) * w[1] + q * q * w[0];
        let c = (1.0 + q) * w[2];
        let disc = (b * b - 4.0 * a * c).sqrt();
        let den = if (b + disc).norm() >= (b - disc).norm() { b + disc } else { b - disc };
        let step = if den.norm() == 0.0 {
            // Degenerate quadratic: fall back to a secant step.
            let df = w[2] - w[1];
            if df.norm() == 0.0 {
                (z[2] - z[1]) * 0.5
            } else {
                -w[2] * (z[2] - z[1]) / df
            }
        } else {
            -(z[2] - z[1]) * 2.0 * c / den
        };
        let znew = z[2] + step;
        if !znew.is_finite() || !domain(znew) {
            return Ok(MullerOutcome { root: best.0, f_abs_rel: best.1, iters: it, converged: false });
        }
        let fnew = f(znew)?;
        let frel = (fnew.ln_abs() - level0).exp();
        if frel < 0.5 * best.1 {
            best = (znew, frel);
            since_improved = 0;
        } else {
            since_improved += 1;
        }
        z = [z[1], z[2], znew];
        fv = [fv[1], fv[2], fnew];
        if frel < opts.tol_f || step.norm() < opts.tol_x * (1.0 + znew.norm()) {
            return Ok(MullerOutcome { root: znew, f_abs_rel: frel, iters: it + 1, converged: frel < opts.tol_f.max(1e-6) });
        }
        // A genuine root halves the residual every iteration or two; a long
        // plateau means there is nothing to converge to here.
        if since_improved >= 7 {
            return Ok(MullerOutcome { root: best.0, f_abs_rel: best.1, iters: it + 1, converged: false });
        }
    }
    Ok(MullerOutcome { root: best.0, f_abs_rel: best.1, iters: opts.max_iter, converged: false })
}

/// Convenience wrapper that errors out when the search fails.
pub fn muller_converged(
    f: impl FnMut(Complex64) -> Result<ScaledComplex>,
    z0: Complex64,
    opts: &MullerOptions,
    domain: impl Fn(Complex64) -> bool,
) -> Result<Complex64> {
    let out = muller(f, z0, opts, domain)?;
    if out.converged {
        Ok(out.root)
    } else {
        Err(Error::RootNotFound { last: out.root, residual: out.f_abs_rel, iters: out.iters })
    }
}
