//! The inviscid (Rayleigh) eigenvalue problem
//!
//! ```text
//! (U - c)(psi'' - alpha^2 psi) - U'' psi = 0,  psi(0) = 0, psi -> 0,
//! ```
//!
//! solved by downward shooting: start from the decaying tail data
//! psi = e^{-alpha y} at y_max and integrate to the wall. The "miss"
//! psi(0) is analytic in c off the real axis and vanishes exactly at
//! eigenvalues; Muller iteration hunts its zeros in Im c > 0.

use crate::error::{Error, Result};
use crate::num::muller::{muller, MullerOptions};
use crate::num::rk45::{self, Rk45Options};
use crate::num::scaled::ScaledComplex;
use crate::profile::ShearProfile;
use num_complex::Complex64;

/// Searches stop at this height: the critical layer reaches the real axis
/// in the neutral limit and the shooting integral becomes singular.
pub const IM_C_FLOOR: f64 = 1e-8;

/// Matching point: e^{-alpha y_max} <= e^{-12} relative tail truncation.
pub fn y_max(alpha: f64) -> f64 {
    (12.0f64).max(12.0 / alpha)
}

fn rhs(
    profile: &ShearProfile,
    alpha: f64,
    c: Complex64,
) -> impl Fn(f64, &[Complex64; 2]) -> [Complex64; 2] + '_ {
    let a2 = alpha * alpha;
    move |y, state| {
        let (u, _, ddu) = profile.eval(y);
        let psi = state[0];
        [state[1], a2 * psi + ddu * psi / (u - c)]
    }
}

/// Shooting residual psi(0) for the decaying tail solution.
///
/// Requires alpha > 0 and Im c != 0 (on the real axis the critical layer
/// makes the equation singular).
pub fn rayleigh_miss(profile: &ShearProfile, alpha: f64, c: Complex64) -> Result<Complex64> {
    if alpha <= 0.0 {
        return Err(Error::invalid("rayleigh_miss requires alpha > 0"));
    }
    if c.im == 0.0 {
        return Err(Error::SingularIntegration);
    }
    let ym = y_max(alpha);
    let seed = (-alpha * ym).exp();
    let y0 = [
        Complex64::new(seed, 0.0),
        Complex64::new(-alpha * seed, 0.0),
    ];
    let opts = Rk45Options { rtol: 1e-10, atol: 1e-300, ..Default::default() };
    let (state, _) = rk45::integrate(rhs(profile, alpha, c), y0, ym, 0.0, &opts, |_, _| 0.0, None)?;
    Ok(state[0])
}

/// An eigenmode of the Rayleigh problem.
#[derive(Debug, Clone)]
pub struct RayleighMode {
    pub alpha: f64,
    pub c: Complex64,
    /// Increasing sample grid on [0, y_max].
    pub grid: Vec<f64>,
    /// Mode values on `grid`, normalized to max |psi| = 1.
    pub psi: Vec<Complex64>,
    /// |psi(0)| after normalization.
    pub miss_residual: f64,
}

impl RayleighMode {
    /// psi' on the sample grid by centered differences.
    pub fn dpsi(&self) -> Vec<Complex64> {
        let g = crate::grid::Grid::new(self.grid.clone(), 5);
        g.deriv1(&self.psi)
    }
}

/// Hunt a single unstable mode from `c_guess` (Im c_guess > 0).
///
/// Returns Ok(None) when the iteration leaves the upper half-plane or fails
/// to converge: absence of a root is meaningful, not an error.
pub fn find_rayleigh_mode(
    profile: &ShearProfile,
    alpha: f64,
    c_guess: Complex64,
) -> Result<Option<RayleighMode>> {
    if c_guess.im <= 0.0 {
        return Err(Error::invalid("c_guess must have Im c > 0"));
    }
    let opts = MullerOptions { tol_f: 1e-12, max_iter: 50, ..Default::default() };
    let out = muller(
        |c| rayleigh_miss(profile, alpha, c).map(ScaledComplex::from_complex),
        c_guess,
        &opts,
        |c| c.im > IM_C_FLOOR,
    )?;
    if !out.converged {
        return Ok(None);
    }
    let c = out.root;
    // Confirm with the absolute residual before accepting.
    let miss = rayleigh_miss(profile, alpha, c)?;
    if miss.norm() > 1e-9 {
        return Ok(None);
    }
    Ok(Some(extract_mode(profile, alpha, c)?))
}

fn extract_mode(profile: &ShearProfile, alpha: f64, c: Complex64) -> Result<RayleighMode> {
    let ym = y_max(alpha);
    let n = 8001;
    let grid: Vec<f64> = (0..n).map(|i| ym * i as f64 / (n - 1) as f64).collect();
    let mut samples = vec![Complex64::new(0.0, 0.0); n];
    let checkpoints: Vec<f64> = grid.iter().rev().copied().collect();
    let seed = (-alpha * ym).exp();
    let y0 = [Complex64::new(seed, 0.0), Complex64::new(-alpha * seed, 0.0)];
    let opts = Rk45Options { rtol: 1e-10, atol: 1e-300, ..Default::default() };
    rk45::integrate_with_checkpoints(
        rhs(profile, alpha, c),
        y0,
        ym,
        0.0,
        &checkpoints,
        &opts,
        |idx, state| samples[n - 1 - idx] = state[0],
    )?;
    let peak = samples.iter().map(|v| v.norm()).fold(0.0, f64::max);
    let scale = Complex64::new(1.0 / peak, 0.0);
    let psi: Vec<Complex64> = samples.iter().map(|v| v * scale).collect();
    let miss_residual = psi[0].norm();
    Ok(RayleighMode { alpha, c, grid, psi, miss_residual })
}

/// Scan a rectangular grid of guesses, returning the converged roots
/// (deduplicated to 1e-8).
pub fn scan_guesses(
    profile: &ShearProfile,
    alpha: f64,
    re_range: (f64, f64),
    im_range: (f64, f64),
    n_re: usize,
    n_im: usize,
) -> Result<Vec<Complex64>> {
    let mut roots: Vec<Complex64> = Vec::new();
    for i in 0..n_re {
        for j in 0..n_im {
            let guess = Complex64::new(
                re_range.0 + (re_range.1 - re_range.0) * i as f64 / (n_re - 1).max(1) as f64,
                im_range.0 + (im_range.1 - im_range.0) * j as f64 / (n_im - 1).max(1) as f64,
            );
            let opts = MullerOptions { tol_f: 1e-12, max_iter: 40, ..Default::default() };
            let out = muller(
                |c| rayleigh_miss(profile, alpha, c).map(ScaledComplex::from_complex),
                guess,
                &opts,
                |c| c.im > IM_C_FLOOR,
            )?;
            if out.converged
                && rayleigh_miss(profile, alpha, out.root)?.norm() < 1e-9
                && !roots.iter().any(|r| (r - out.root).norm() < 1e-8)
            {
                roots.push(out.root);
            }
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::winding::{winding_number, Rect};

    fn inflection() -> ShearProfile {
        ShearProfile::inflection(1.0, 2.0, 1.0)
    }

    #[test]
    fn constant_shear_region_transports_tail_exactly() {
        // U'' == 0 everywhere: the equation is (d^2 - alpha^2) psi = 0 and the
        // decaying seed arrives at the wall as e^{-alpha * 0} = 1 (times the
        // seed scale), so the miss never vanishes for Im c > 0.
        let samples: Vec<(f64, f64)> = (0..400).map(|i| (0.05 * i as f64, 1.0)).collect();
        let flat = ShearProfile::from_samples("uniform", 1.0, 1.0, &samples);
        let alpha = 0.7;
        let miss = rayleigh_miss(&flat, alpha, Complex64::new(0.4, 0.2)).unwrap();
        assert!((miss - Complex64::new(1.0, 0.0)).norm() < 1e-8, "miss = {miss}");
    }

    #[test]
    fn miss_is_linear_in_the_seed() {
        let p = inflection();
        let c = Complex64::new(0.45, 0.12);
        let m = rayleigh_miss(&p, 0.8, c).unwrap();
        assert!(m.is_finite() && m.norm() > 0.0);
        // Linear ODE: integrating a doubled seed doubles the miss.
        let ym = y_max(0.8);
        let seed = 2.0 * (-0.8 * ym).exp();
        let y0 = [Complex64::new(seed, 0.0), Complex64::new(-0.8 * seed, 0.0)];
        let opts = Rk45Options { rtol: 1e-10, atol: 1e-300, ..Default::default() };
        let (state, _) =
            rk45::integrate(rhs(&p, 0.8, c), y0, ym, 0.0, &opts, |_, _| 0.0, None).unwrap();
        assert!((state[0] - 2.0 * m).norm() < 1e-9 * m.norm().max(1.0));
    }

    #[test]
    fn rejects_real_phase_speed() {
        let p = inflection();
        assert!(matches!(
            rayleigh_miss(&p, 0.8, Complex64::new(0.4, 0.0)),
            Err(Error::SingularIntegration)
        ));
    }

    #[test]
    fn inflection_profile_has_unstable_mode() {
        let p = inflection();
        let mode = find_rayleigh_mode(&p, 0.8, Complex64::new(0.45, 0.1))
            .unwrap()
            .expect("unstable mode expected");
        assert!(mode.c.im > 0.01, "c = {}", mode.c);
        // Defining properties: wall value and interior residual.
        assert!(mode.miss_residual < 1e-10);
        let res = discrete_residual(&p, &mode);
        assert!(res < 1e-8, "Rayleigh residual {res}");
        assert!((mode.psi.iter().map(|v| v.norm()).fold(0.0, f64::max) - 1.0).abs() < 1e-12);
    }

    #[test]
    fn concave_profile_has_no_unstable_mode() {
        // Monotone concave profile: no inflection point, hence no instability;
        // a 20 x 20 guess grid must come back empty.
        let p = ShearProfile::exponential(1.0);
        let roots = scan_guesses(&p, 0.5, (0.05, 0.95), (0.02, 0.5), 20, 20).unwrap();
        assert!(roots.is_empty(), "spurious inviscid roots: {roots:?}");
    }

    #[test]
    fn conjugation_symmetry_of_miss() {
        // Real profile: miss(alpha, conj c) = conj miss(alpha, c).
        let p = inflection();
        let c = Complex64::new(0.3, 0.07);
        let m1 = rayleigh_miss(&p, 0.6, c).unwrap();
        let m2 = rayleigh_miss(&p, 0.6, c.conj()).unwrap();
        assert!((m2 - m1.conj()).norm() < 1e-10 * m1.norm().max(1.0));
    }

    #[test]
    fn tolerance_refinement_keeps_eigenvalue() {
        // Grid-refinement invariant, phrased for the adaptive integrator:
        // the converged c moves by < 1e-6 when tolerances tighten 100x.
        let p = inflection();
        let loose = find_rayleigh_mode(&p, 0.8, Complex64::new(0.45, 0.1)).unwrap().unwrap();
        let opts = MullerOptions { tol_f: 1e-13, ..Default::default() };
        let tight = muller(
            |c| {
                let ym = y_max(0.8);
                let seed = (-0.8 * ym).exp();
                let y0 = [Complex64::new(seed, 0.0), Complex64::new(-0.8 * seed, 0.0)];
                let o = Rk45Options { rtol: 1e-12, atol: 1e-300, ..Default::default() };
                rk45::integrate(rhs(&p, 0.8, c), y0, ym, 0.0, &o, |_, _| 0.0, None)
                    .map(|(s, _)| ScaledComplex::from_complex(s[0]))
            },
            loose.c,
            &opts,
            |c| c.im > IM_C_FLOOR,
        )
        .unwrap();
        assert!(tight.converged);
        assert!((tight.root - loose.c).norm() < 1e-6);
    }

    #[test]
    fn winding_count_matches_roots_found() {
        // Argument principle over a box in Im c > 0 counts exactly the roots
        // the scan finds there (no spurious zeros of the miss function).
        let p = inflection();
        let alpha = 0.8;
        let rect = Rect { re: (0.2, 0.8), im: (0.02, 0.35) };
        let wind = winding_number(
            |c| rayleigh_miss(&p, alpha, c).map(ScaledComplex::from_complex),
            &rect,
            24,
            10,
        )
        .unwrap();
        let roots = scan_guesses(&p, alpha, (0.25, 0.75), (0.05, 0.3), 6, 4)
            .unwrap()
            .into_iter()
            .filter(|r| {
                r.re > rect.re.0 && r.re < rect.re.1 && r.im > rect.im.0 && r.im < rect.im.1
            })
            .count();
        assert_eq!(wind as usize, roots, "winding {wind} vs roots {roots}");
    }

    /// Independent 4th-order finite-difference residual of the Rayleigh
    /// equation on the mode's uniform sample grid (interior, sup norm).
    fn discrete_residual(profile: &ShearProfile, mode: &RayleighMode) -> f64 {
        let h = mode.grid[1] - mode.grid[0];
        let a2 = mode.alpha * mode.alpha;
        let mut worst = 0.0f64;
        for i in 2..mode.grid.len() - 2 {
            let d2 = (-mode.psi[i - 2] + 16.0 * mode.psi[i - 1] - 30.0 * mode.psi[i]
                + 16.0 * mode.psi[i + 1]
                - mode.psi[i + 2])
                / (12.0 * h * h);
            let (u, _, ddu) = profile.eval(mode.grid[i]);
            let r = (u - mode.c) * (d2 - a2 * mode.psi[i]) - ddu * mode.psi[i];
            worst = worst.max(r.norm());
        }
        worst
    }
}
