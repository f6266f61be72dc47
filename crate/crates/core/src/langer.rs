//! The Langer frame: critical-layer change of variables g(y), the stiffness
//! parameter gamma, and the fast Orr-Sommerfeld modes built from Airy
//! functions of the transformed coordinate.
//!
//! ```text
//! g(y)  = y_c + ( 3/(2 sqrt(U'(y_c))) * int_{y_c}^{y} sqrt(U(z) - c) dz )^{2/3}
//! gamma = (i alpha U'(y_c) / nu)^{1/3},  Re gamma > 0
//! ```
//!
//! The decaying fast mode is Ai(gamma (g(y) - y_c)) to leading order; its
//! logarithmic derivative mu(y) measures the local speed of variation.

use crate::airy;
use crate::error::{Error, Result};
use crate::num::quad;
use crate::profile::{CriticalLayer, ShearProfile};
use num_complex::Complex64;

/// Branch-resolved frame around one critical layer.
#[derive(Debug, Clone)]
pub struct LangerFrame<'a> {
    pub profile: &'a ShearProfile,
    pub critical: CriticalLayer,
    pub alpha: f64,
    pub nu: f64,
    /// gamma^3 = i alpha U'(y_c) / nu with the Re gamma > 0 cube root.
    pub gamma: Complex64,
    sqrt_du: Complex64,
}

impl<'a> LangerFrame<'a> {
    pub fn new(profile: &'a ShearProfile, alpha: f64, nu: f64, c: Complex64) -> Result<Self> {
        if !profile.is_analytic() {
            return Err(Error::UnsupportedComplexEval { label: profile.label().to_string() });
        }
        if alpha <= 0.0 || nu <= 0.0 {
            return Err(Error::invalid("langer frame needs alpha > 0, nu > 0"));
        }
        let critical = profile.critical_layer(c)?;
        let g3 = Complex64::new(0.0, alpha) * critical.u_prime_at_yc / nu;
        // Cube root with Re gamma > 0: the decaying-Airy convention.
        let principal = g3.powf(1.0 / 3.0);
        let rot = Complex64::from_polar(1.0, 2.0 * std::f64::consts::FRAC_PI_3);
        let gamma = [principal, principal * rot, principal * rot.conj()]
            .into_iter()
            .max_by(|a, b| a.re.partial_cmp(&b.re).unwrap())
            .unwrap();
        if gamma.re <= 0.0 {
            return Err(Error::invalid("no cube root of gamma^3 with Re > 0"));
        }
        let sqrt_du = critical.u_prime_at_yc.sqrt();
        Ok(LangerFrame { profile, critical, alpha, nu, gamma, sqrt_du })
    }

    /// Integral of sqrt(U(z) - c) from y_c to y along the straight segment,
    /// with the branch tracked continuously from the base point.
    ///
    /// The substitution z = y_c + (y - y_c) u^2 removes the square-root
    /// branch point at y_c, leaving an analytic integrand in u.
    fn phase_integral(&self, y: Complex64) -> Result<Complex64> {
        let dy = y - self.critical.y_c;
        if dy.norm() == 0.0 {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let rule = quad::gauss_legendre(32);
        let panels = 12;
        let mut acc = Complex64::new(0.0, 0.0);
        // Reference branch near u = 0: sqrt(U - c) ~ sqrt(U'(y_c) dy) u.
        let mut prev = self.sqrt_du * dy.sqrt();
        for p in 0..panels {
            let ua = p as f64 / panels as f64;
            let ub = (p + 1) as f64 / panels as f64;
            let (mid, half) = (0.5 * (ua + ub), 0.5 * (ub - ua));
            for (x, w) in rule.0.iter().zip(rule.1.iter()) {
                let u = mid + half * x;
                let z = self.critical.y_c + dy * (u * u);
                let (uval, _, _) = self.profile.eval_complex(z)?;
                let mut root = (uval - self.critical.c).sqrt();
                // Continuous branch: stay near the previous sample.
                if (root + prev).norm() < (root - prev).norm() {
                    root = -root;
                }
                if root.norm() < 1e-14 && u > 0.05 {
                    return Err(Error::TurningPointOnPath { at: u });
                }
                prev = root;
                acc += root * (2.0 * u) * (w * half);
            }
        }
        Ok(acc * dy)
    }

    /// The Langer coordinate g(y); branches of the square root and the 2/3
    /// power are anchored at y_c (g(y) ~ y near the critical layer).
    pub fn g(&self, y: Complex64) -> Result<Complex64> {
        let dy = y - self.critical.y_c;
        if dy.norm() == 0.0 {
            return Ok(self.critical.y_c);
        }
        let integral = self.phase_integral(y)?;
        let w = 1.5 * integral / self.sqrt_du;
        // w ~ dy^{3/2} at the base point; take the 2/3 power on the branch
        // that continues g - y_c ~ dy there: divide out dy^{3/2}, use the
        // principal 2/3 power of the O(1) remainder, multiply dy back.
        let remainder = w / (dy * dy.sqrt());
        Ok(self.critical.y_c + dy * remainder.powf(2.0 / 3.0))
    }

    /// dg/dy = sqrt(U - c) / (sqrt(U'(y_c)) sqrt(g - y_c)), branch-consistent.
    pub fn g_prime(&self, y: Complex64) -> Result<Complex64> {
        let dy = y - self.critical.y_c;
        if dy.norm() < 1e-12 {
            return Ok(Complex64::new(1.0, 0.0));
        }
        let g = self.g(y)?;
        let (uval, _, _) = self.profile.eval_complex(y)?;
        let mut root = (uval - self.critical.c).sqrt();
        // Choose the branch consistent with the phase integral near y.
        let reference = self.sqrt_du * (g - self.critical.y_c).sqrt();
        if (root - reference).norm() > (root + reference).norm() {
            root = -root;
        }
        Ok(root / reference)
    }

    /// Airy argument at y.
    pub fn xi(&self, y: Complex64) -> Result<Complex64> {
        Ok(self.gamma * (self.g(y)? - self.critical.y_c))
    }
}

/// Leading-order decaying fast mode phi_{f,-} on a real grid, normalized to
/// phi(0) = 1, carried in log form to survive the fast decay.
#[derive(Debug, Clone)]
pub struct FastMode {
    pub y: Vec<f64>,
    /// log of phi_{f,-}(y) relative to the wall value.
    pub log_phi: Vec<Complex64>,
    /// mu(y) = d/dy log Ai_a(y).
    pub mu: Vec<Complex64>,
    pub gamma: Complex64,
}

impl FastMode {
    /// phi values (may underflow to zero far from the wall, by design).
    pub fn phi(&self) -> Vec<Complex64> {
        self.log_phi.iter().map(|l| l.exp()).collect()
    }

    /// |phi(y_i) / phi(y_j)| from the log representation.
    pub fn amplitude_ratio(&self, i: usize, j: usize) -> f64 {
        (self.log_phi[i].re - self.log_phi[j].re).exp()
    }
}

/// Build the fast mode on `grid`. Ai_a(0) = 0 is an eigenrelation
/// degeneracy and fails the normalization.
pub fn fast_mode(frame: &LangerFrame<'_>, grid: &[f64]) -> Result<FastMode> {
    let mut log_phi = Vec::with_capacity(grid.len());
    let mut mu = Vec::with_capacity(grid.len());
    let xi0 = frame.xi(Complex64::new(0.0, 0.0))?;
    let (log_ai0, _) = airy::airy_scaled(xi0)?;
    if !log_ai0.re.is_finite() {
        return Err(Error::NormalizationFailure);
    }
    for &y in grid {
        let yc = Complex64::new(y, 0.0);
        let xi = frame.xi(yc)?;
        let (log_ai, dlog) = airy::airy_scaled(xi)?;
        log_phi.push(log_ai - log_ai0);
        mu.push(frame.gamma * frame.g_prime(yc)? * dlog);
    }
    Ok(FastMode { y: grid.to_vec(), log_phi, mu, gamma: frame.gamma })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::num::rk45::{self, Rk45Options};

    fn frame_for(profile: &ShearProfile, alpha: f64, nu: f64, c: Complex64) -> LangerFrame<'_> {
        LangerFrame::new(profile, alpha, nu, c).unwrap()
    }

    #[test]
    fn g_fixes_the_critical_point() {
        let p = ShearProfile::exponential(1.0);
        let f = frame_for(&p, 0.1, 1e-5, Complex64::new(0.1, 0.05));
        let g = f.g(f.critical.y_c).unwrap();
        assert!((g - f.critical.y_c).norm() < 1e-14);
    }

    #[test]
    fn gamma_cubed_matches_definition_and_halfplane() {
        let p = ShearProfile::exponential(1.0);
        let (alpha, nu) = (0.12, 1e-5);
        let c = Complex64::new(0.1, 0.03);
        let f = frame_for(&p, alpha, nu, c);
        let g3 = Complex64::new(0.0, alpha) * f.critical.u_prime_at_yc / nu;
        assert!((f.gamma.powi(3) - g3).norm() / g3.norm() < 1e-13);
        assert!(f.gamma.re > 0.0);
    }

    #[test]
    fn locally_linear_region_gives_identity_map() {
        // On a window where U is linear to high accuracy, g(y) = y up to the
        // curvature correction; at the base point g' = 1 exactly.
        let p = ShearProfile::exponential(1.0);
        let f = frame_for(&p, 0.1, 1e-5, Complex64::new(0.05, 0.02));
        let gp = f.g_prime(f.critical.y_c + Complex64::new(1e-7, 0.0)).unwrap();
        assert!((gp - Complex64::new(1.0, 0.0)).norm() < 1e-4, "g' near y_c = {gp}");
        let y = f.critical.y_c + Complex64::new(1e-4, 0.0);
        let g = f.g(y).unwrap();
        assert!((g - y).norm() < 1e-9, "g - y = {}", (g - y).norm());
    }

    #[test]
    fn phase_integral_matches_adaptive_ode_oracle() {
        // Independent route: carry w = sqrt(U - c) through its own ODE
        // w' = U' / (2 w) along the segment, integrating int w dz as a state.
        let p = ShearProfile::exponential(1.0);
        let c = Complex64::new(0.1, 0.05);
        let f = frame_for(&p, 0.3, 1e-5, c);
        let y = Complex64::new(0.5, 0.0);
        let direct = f.phase_integral(y).unwrap();
        let dy = y - f.critical.y_c;
        let t0 = 1e-6;
        let w0 = (f.critical.u_prime_at_yc * dy * t0).sqrt();
        let int0 = w0 * dy * t0 * (2.0 / 3.0);
        let rhs = |t: f64, state: &[Complex64; 2]| {
            let z = f.critical.y_c + dy * t;
            let (_, du, _) = p.eval_complex(z).unwrap();
            let root = state[1];
            [root * dy, du * dy / (2.0 * root)]
        };
        let opts = Rk45Options { rtol: 1e-12, atol: 1e-16, ..Default::default() };
        let (out, _) = rk45::integrate(rhs, [int0, w0], t0, 1.0, &opts, |_, _| 0.0, None).unwrap();
        assert!(
            (out[0] - direct).norm() < 1e-10,
            "quadrature {direct} vs oracle {}",
            out[0]
        );
    }

    #[test]
    fn branch_consistency_along_homotopic_paths() {
        // Straight segment versus a two-leg polyline through the midpoint of
        // the segment shifted off the line: same homotopy class around the
        // turning point, so g agrees to quadrature accuracy.
        let p = ShearProfile::inflection(1.0, 2.0, 1.0);
        let c = Complex64::new(0.3, 0.08);
        let f = frame_for(&p, 0.5, 1e-5, c);
        for &y in &[0.4, 1.2, 3.0] {
            let yy = Complex64::new(y, 0.0);
            let g1 = f.g(yy).unwrap();
            let i2 = two_leg_integral(&f, &p, c, yy);
            let w = 1.5 * i2 / f.sqrt_du;
            let dy = yy - f.critical.y_c;
            let g2 = f.critical.y_c + dy * (w / (dy * dy.sqrt())).powf(2.0 / 3.0);
            assert!((g1 - g2).norm() < 1e-9, "y = {y}: {g1} vs {g2}");
        }
    }

    /// Phase integral along y_c -> mid -> y where mid sits slightly off the
    /// straight segment (homotopic detour, no turning point enclosed).
    fn two_leg_integral(
        f: &LangerFrame<'_>,
        p: &ShearProfile,
        c: Complex64,
        y: Complex64,
    ) -> Complex64 {
        let mid = f.critical.y_c + (y - f.critical.y_c) * 0.5 + Complex64::new(0.0, 0.02);
        let rule = quad::gauss_legendre(64);
        // Leg 1 with the sqrt singularity at the start: substitute u^2.
        let dy1 = mid - f.critical.y_c;
        let mut prev = f.sqrt_du * dy1.sqrt();
        let mut acc = Complex64::new(0.0, 0.0);
        for (x, w) in rule.0.iter().zip(rule.1.iter()) {
            let u = 0.5 + 0.5 * x;
            let z = f.critical.y_c + dy1 * (u * u);
            let (uval, _, _) = p.eval_complex(z).unwrap();
            let mut root = (uval - c).sqrt();
            if (root + prev).norm() < (root - prev).norm() {
                root = -root;
            }
            prev = root;
            acc += root * (2.0 * u) * (0.5 * w);
        }
        let mut total = acc * dy1;
        // Leg 2: smooth integrand, branch carried over from leg 1.
        let dy2 = y - mid;
        let mut acc2 = Complex64::new(0.0, 0.0);
        for (x, w) in rule.0.iter().zip(rule.1.iter()) {
            let t = 0.5 + 0.5 * x;
            let z = mid + dy2 * t;
            let (uval, _, _) = p.eval_complex(z).unwrap();
            let mut root = (uval - c).sqrt();
            if (root + prev).norm() < (root - prev).norm() {
                root = -root;
            }
            prev = root;
            acc2 += root * (0.5 * w);
        }
        total += acc2 * dy2;
        total
    }

    #[test]
    fn fast_mode_normalized_and_decaying() {
        let p = ShearProfile::exponential(1.0);
        let nu = 1e-6f64;
        let alpha = 2.4 * nu.powf(0.25);
        let c = Complex64::new(2.3, 0.05) * nu.powf(0.25);
        let f = frame_for(&p, alpha, nu, c);
        assert!(f.gamma.norm() > 5.0, "asymptotic regime expected");
        let grid: Vec<f64> = (0..200).map(|i| i as f64 * 0.005).collect();
        let fm = fast_mode(&f, &grid).unwrap();
        // Normalization at the wall is exact in log form.
        assert_eq!(fm.log_phi[0], Complex64::new(0.0, 0.0));
        // Fast decay beyond the critical layer:
        // |phi(y)/phi(x)| < e^{-|gamma|(y - x)/2} whenever y - x > 3/|gamma|.
        let gnorm = fm.gamma.norm();
        let mut checked = 0;
        for i in 0..grid.len() {
            for j in (i + 1..grid.len()).step_by(17) {
                let dyy = grid[j] - grid[i];
                if dyy > 3.0 / gnorm && grid[i] > f.critical.y_c.re + 2.0 / gnorm {
                    let ratio = fm.amplitude_ratio(j, i);
                    assert!(
                        ratio < (-gnorm * dyy / 2.0).exp(),
                        "slow decay at ({}, {}): {ratio}",
                        grid[i],
                        grid[j]
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 50, "decay check barely exercised");
    }

    #[test]
    fn mu_plateau_matches_asymptotic_oracle() {
        // Away from the critical layer |mu(y)| / |gamma|^{3/2} plateaus at
        // sqrt(|U - c| / |U'(y_c)|), the asymptotic-oracle constant.
        let p = ShearProfile::exponential(1.0);
        let nu = 1e-6f64;
        let alpha = 2.4 * nu.powf(0.25);
        let c = Complex64::new(2.3, 0.05) * nu.powf(0.25);
        let f = frame_for(&p, alpha, nu, c);
        let g32 = f.gamma.norm().powf(1.5);
        for &y in &[0.3, 0.6, 1.0] {
            let yc = Complex64::new(y, 0.0);
            let xi = f.xi(yc).unwrap();
            assert!(xi.norm() > 6.0, "outside the plateau regime");
            let (_, dlog) = airy::airy_scaled(xi).unwrap();
            let mu = f.gamma * f.g_prime(yc).unwrap() * dlog;
            let (uval, _, _) = p.eval_complex(yc).unwrap();
            let oracle = g32 * ((uval - c).norm() / f.critical.u_prime_at_yc.norm()).sqrt();
            let rel = (mu.norm() - oracle).abs() / oracle;
            assert!(rel < 0.05, "y = {y}: |mu| = {} vs oracle {oracle}", mu.norm());
        }
    }

    #[test]
    fn gamma_scales_like_nu_to_minus_quarter() {
        // With alpha = alpha0 nu^{1/4} and c ~ nu^{1/4}: log|gamma| against
        // log nu has slope -1/4 +- 0.01 over nu in 1e-4 .. 1e-8.
        let p = ShearProfile::exponential(1.0);
        let mut lognu = Vec::new();
        let mut loggamma = Vec::new();
        for k in 0..5 {
            let nu = 10f64.powi(-4 - k);
            let alpha = 1.5 * nu.powf(0.25);
            let c = Complex64::new(0.3, 0.1) * nu.powf(0.25);
            let f = frame_for(&p, alpha, nu, c);
            lognu.push(nu.ln());
            loggamma.push(f.gamma.norm().ln());
        }
        let (_, slope) = crate::num::fit::linear_fit(&lognu, &loggamma);
        assert!((slope + 0.25).abs() < 0.01, "slope {slope}");
    }

    #[test]
    fn refuses_table_profiles() {
        let samples: Vec<(f64, f64)> =
            (0..200).map(|i| (0.1 * i as f64, 1.0 - (-0.1 * i as f64).exp())).collect();
        let p = ShearProfile::from_samples("tab", 1.0, 1.0, &samples);
        let err = LangerFrame::new(&p, 0.1, 1e-5, Complex64::new(0.05, 0.02));
        assert!(matches!(err, Err(Error::UnsupportedComplexEval { .. })));
    }
}
