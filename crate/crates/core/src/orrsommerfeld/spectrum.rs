//! Eigenvalue hunting, unstable-band tracing, neutral curves, and the most
//! unstable wavenumber.
//!
//! The physical wavenumber is `alpha`; diagnostics are usually quoted in the
//! rescaled variables alphaced = alpha / nu^{1/4}, lambda = nu^{1/2} lambda~.

use crate::error::{Error, Result};
use crate::num::fit::log_log_slope;
use crate::num::muller::{muller, MullerOptions};
use crate::num::optim;
use crate::num::winding::{winding_number, Rect};
use crate::orrsommerfeld::dispersion::{Dispersion, IM_C_DEAD_ZONE};
use crate::profile::ShearProfile;
use num_complex::Complex64;

/// A converged point of the dispersion relation c(alpha, nu).
#[derive(Debug, Clone, Copy)]
pub struct SpectralPoint {
    /// Physical (unrescaled) wavenumber.
    pub alpha: f64,
    pub nu: f64,
    pub c: Complex64,
    /// Relative dispersion residual |D| at acceptance.
    pub residual: f64,
}

impl SpectralPoint {
    /// Growth rate lambda = -i alpha c (exact by definition).
    pub fn lambda(&self) -> Complex64 {
        Complex64::new(0.0, -self.alpha) * self.c
    }

    /// alpha / nu^{1/4}.
    pub fn alpha_tilde(&self) -> f64 {
        self.alpha / self.nu.powf(0.25)
    }

    /// lambda / nu^{1/2}.
    pub fn lambda_tilde(&self) -> Complex64 {
        self.lambda() / self.nu.sqrt()
    }

    /// c / nu^{1/4}.
    pub fn c_tilde(&self) -> Complex64 {
        self.c / self.nu.powf(0.25)
    }
}

/// Muller hunt from `c_guess`; `None` when the iteration fails or leaves
/// the admissible disk (meaningful absence, not an error).
pub fn find_eigenvalue(
    profile: &ShearProfile,
    alpha: f64,
    nu: f64,
    c_guess: Complex64,
) -> Result<Option<SpectralPoint>> {
    let disp = Dispersion::new(profile, alpha, nu)?;
    let u_plus = profile.u_plus().abs();
    if c_guess.norm() >= u_plus {
        return Err(Error::invalid("|c_guess| must be below |U+|"));
    }
    let mut plan: Option<Vec<f64>> = None;
    let opts = MullerOptions { tol_f: 1e-10, tol_x: 1e-12, max_iter: 28, spread: 1e-4 };
    let out = muller(
        |c| disp.eval(c, &mut plan),
        c_guess,
        &opts,
        |c| c.norm() < u_plus && !(c.im <= 0.0 && c.im > -IM_C_DEAD_ZONE),
    )?;
    if !out.converged || out.f_abs_rel > 1e-9 {
        return Ok(None);
    }
    Ok(Some(SpectralPoint { alpha, nu, c: out.root, residual: out.f_abs_rel }))
}

/// Locate an eigenvalue inside `rect` by winding-count bisection, then
/// polish with Muller. Returns None when the box is empty.
pub fn locate_eigenvalue(
    profile: &ShearProfile,
    alpha: f64,
    nu: f64,
    rect: Rect,
) -> Result<Option<SpectralPoint>> {
    let disp = Dispersion::new(profile, alpha, nu)?;
    let mut plan: Option<Vec<f64>> = None;
    let count = winding_number(|c| disp.eval(c, &mut plan), &rect, 24, 10)?;
    if count == 0 {
        return Ok(None);
    }
    let mut rect = rect;
    for _ in 0..12 {
        if rect.width() < 1e-3 * (nu.powf(0.25)) {
            break;
        }
        let mut found = None;
        for q in rect.quadrants() {
            let mut plan_q: Option<Vec<f64>> = None;
            let w = winding_number(|c| disp.eval(c, &mut plan_q), &q, 16, 10)?;
            if w > 0 {
                found = Some(q);
                break;
            }
        }
        match found {
            Some(q) => rect = q,
            None => break,
        }
    }
    find_eigenvalue(profile, alpha, nu, rect.center())
}

/// Phase-speed scale of the long-wave branch: c ~ U_+ (nu / U_+)^{1/4}.
fn c_scale(profile: &ShearProfile, nu: f64) -> f64 {
    let u = profile.u_plus().abs();
    u * (nu / u).powf(0.25)
}

/// Canonical rescaled guesses that cover the Tollmien-Schlichting branch
/// (the exponential profile has Re c / c_scale ~ 2.2-2.6 across the band).
fn canonical_guesses(profile: &ShearProfile, nu: f64) -> Vec<Complex64> {
    let s = c_scale(profile, nu);
    [(2.3, 0.05), (2.5, 0.13), (2.1, 0.02), (2.75, 0.08)]
        .iter()
        .map(|&(re, im)| Complex64::new(re * s, im * s))
        .collect()
}

/// Find the (unique, when it exists) unstable eigenvalue at (alpha, nu),
/// trying canonical guesses first and a winding box scan as fallback.
pub fn find_unstable(
    profile: &ShearProfile,
    alpha: f64,
    nu: f64,
    c_guess: Option<Complex64>,
) -> Result<Option<SpectralPoint>> {
    let mut guesses = Vec::new();
    if let Some(g) = c_guess {
        guesses.push(g);
    }
    guesses.extend(canonical_guesses(profile, nu));
    for g in guesses {
        if let Some(pt) = find_eigenvalue(profile, alpha, nu, g)? {
            if pt.c.im > 0.0 {
                return Ok(Some(pt));
            }
        }
    }
    let s = c_scale(profile, nu);
    let u = profile.u_plus().abs();
    let rect = Rect { re: (1.2 * s, (3.6 * s).min(0.95 * u)), im: (1e-4 * s, 0.8 * s) };
    match locate_eigenvalue(profile, alpha, nu, rect)? {
        Some(pt) if pt.c.im > 0.0 => Ok(Some(pt)),
        _ => Ok(None),
    }
}

/// Converged points along one eigenvalue branch, used to seed new hunts
/// from the nearest already-known wavenumber.
#[derive(Debug, Clone, Default)]
struct BranchCache {
    pts: Vec<(f64, Complex64)>,
}

impl BranchCache {
    fn insert(&mut self, alpha: f64, c: Complex64) {
        match self.pts.binary_search_by(|x| x.0.partial_cmp(&alpha).unwrap()) {
            Ok(i) => self.pts[i] = (alpha, c),
            Err(i) => self.pts.insert(i, (alpha, c)),
        }
    }

    fn nearest(&self, alpha: f64) -> Option<Complex64> {
        self.pts
            .iter()
            .min_by(|a, b| {
                (a.0 - alpha).abs().partial_cmp(&(b.0 - alpha).abs()).unwrap()
            })
            .map(|x| x.1)
    }

    /// Eigenvalue at alpha: nearest-seed Muller with a short retry ladder.
    fn eigenvalue(
        &mut self,
        profile: &ShearProfile,
        alpha: f64,
        nu: f64,
    ) -> Result<Option<Complex64>> {
        let mut guesses = Vec::new();
        if let Some(c) = self.nearest(alpha) {
            guesses.push(c);
            guesses.push(Complex64::new(c.re, 0.4 * c.im));
            guesses.push(c * 0.9);
        }
        guesses.extend(canonical_guesses(profile, nu));
        for g in guesses {
            if let Some(pt) = find_eigenvalue(profile, alpha, nu, g)? {
                self.insert(alpha, pt.c);
                return Ok(Some(pt.c));
            }
        }
        Ok(None)
    }

    /// Re lambda at alpha; None when no eigenvalue could be continued.
    fn growth(&mut self, profile: &ShearProfile, alpha: f64, nu: f64) -> Result<Option<f64>> {
        Ok(self.eigenvalue(profile, alpha, nu)?.map(|c| alpha * c.im))
    }
}

/// One neutral-curve sample.
#[derive(Debug, Clone, Copy)]
pub struct NeutralSample {
    pub nu: f64,
    pub alpha_minus: f64,
    pub alpha_plus: f64,
}

/// Neutral curve alpha_-(nu), alpha_+(nu) with fitted power laws.
#[derive(Debug, Clone)]
pub struct NeutralCurve {
    pub samples: Vec<NeutralSample>,
    /// (e_minus, e_plus): fitted exponents of alpha_+-(nu) ~ C nu^e.
    pub fitted_exponents: (f64, f64),
    pub fitted_prefactors: (f64, f64),
}

/// Trace both neutral points over `nu_list` (sorted descending) by
/// bisection on the sign of Im c, with continuation between viscosities.
pub fn neutral_curves(profile: &ShearProfile, nu_list: &[f64]) -> Result<NeutralCurve> {
    if nu_list.len() < 2 {
        return Err(Error::invalid("need at least two viscosities"));
    }
    if nu_list.windows(2).any(|w| w[1] >= w[0]) {
        return Err(Error::invalid("nu_list must be sorted descending"));
    }
    let span = nu_list[0] / nu_list[nu_list.len() - 1];
    if span < 99.0 {
        return Err(Error::invalid("nu_list must span at least two decades"));
    }
    let mut samples = Vec::new();
    let mut state: Option<(f64, NeutralSample, Complex64)> = None;
    for &nu in nu_list {
        let sample = match &state {
            None => neutral_at(profile, nu, None)?,
            Some((nu_prev, prev, c_prev)) => {
                let scale_minus = (nu / nu_prev).powf(0.25);
                let scale_plus = (nu / nu_prev).powf(1.0 / 6.0);
                let hint = NeutralSample {
                    nu,
                    alpha_minus: prev.alpha_minus * scale_minus,
                    alpha_plus: prev.alpha_plus * scale_plus,
                };
                let c_hint = c_prev * (nu / nu_prev).powf(0.25);
                neutral_at(profile, nu, Some((hint, c_hint)))?
            }
        };
        let mid = 0.5 * (sample.0.alpha_minus + sample.0.alpha_plus);
        state = Some((nu, sample.0, sample.1));
        let _ = mid;
        samples.push(sample.0);
    }
    let nus: Vec<f64> = samples.iter().map(|s| s.nu).collect();
    let am: Vec<f64> = samples.iter().map(|s| s.alpha_minus).collect();
    let ap: Vec<f64> = samples.iter().map(|s| s.alpha_plus).collect();
    let (c_minus, e_minus) = log_log_slope(&nus, &am);
    let (c_plus, e_plus) = log_log_slope(&nus, &ap);
    // Sanity on the samples themselves: the lower branch must shrink with nu.
    for w in samples.windows(2) {
        if w[1].alpha_minus >= w[0].alpha_minus {
            return Err(Error::ContinuationFailure { nu: w[1].nu, branch: "lower" });
        }
    }
    Ok(NeutralCurve {
        samples,
        fitted_exponents: (e_minus, e_plus),
        fitted_prefactors: (c_minus, c_plus),
    })
}

/// Neutral points at a single nu. The hint carries the previous sample and
/// phase speed for continuation.
fn neutral_at(
    profile: &ShearProfile,
    nu: f64,
    hint: Option<(NeutralSample, Complex64)>,
) -> Result<(NeutralSample, Complex64)> {
    // Start from an interior unstable point.
    let (mut alpha_lo, mut alpha_hi, mut c_mid, alpha_mid) = match &hint {
        Some((h, c)) => {
            let mid = (h.alpha_minus * h.alpha_plus).sqrt();
            (h.alpha_minus, h.alpha_plus, *c, mid)
        }
        None => {
            // Try the measured band center first, then scan outward.
            let a_scale = (nu / profile.u_plus().abs()).powf(0.25);
            let mut seeded: Option<(f64, Complex64, f64)> = None;
            let mut seed_c: Option<Complex64> = None;
            for i in [4usize, 2, 6, 0, 8, 1, 3, 5, 7, 9] {
                let a = (1.2 + 0.35 * i as f64) * a_scale;
                if let Some(pt) = find_unstable(profile, a, nu, seed_c)? {
                    seed_c = Some(pt.c);
                    let g = a * pt.c.im;
                    if g > 0.0 && seeded.as_ref().map_or(true, |s| g > s.2) {
                        seeded = Some((a, pt.c, g));
                    }
                }
                if seeded.is_some() && i >= 6 {
                    break;
                }
            }
            let (a0, c0, _) =
                seeded.ok_or(Error::ContinuationFailure { nu, branch: "seed" })?;
            (a0 * 0.9, a0 * 1.1, c0, a0)
        }
    };
    let mut cache = BranchCache::default();
    cache.insert(alpha_mid, c_mid);
    let g = cache.growth(profile, alpha_mid, nu)?;
    if g.is_none() || g.unwrap() <= 0.0 {
        return Err(Error::ContinuationFailure { nu, branch: "interior" });
    }
    c_mid = cache.nearest(alpha_mid).unwrap();

    // Expand outward in moderate steps until Im c < 0 on both flanks.
    let mut g_lo = cache.growth(profile, alpha_lo, nu)?;
    let mut guard = 0;
    while g_lo.map_or(false, |v| v > 0.0) {
        alpha_lo /= 1.18;
        g_lo = cache.growth(profile, alpha_lo, nu)?;
        guard += 1;
        if guard > 80 {
            return Err(Error::ContinuationFailure { nu, branch: "lower" });
        }
    }
    if g_lo.is_none() {
        return Err(Error::ContinuationFailure { nu, branch: "lower" });
    }
    let mut g_hi = cache.growth(profile, alpha_hi, nu)?;
    guard = 0;
    while g_hi.map_or(false, |v| v > 0.0) {
        alpha_hi *= 1.18;
        g_hi = cache.growth(profile, alpha_hi, nu)?;
        guard += 1;
        if guard > 80 {
            return Err(Error::ContinuationFailure { nu, branch: "upper" });
        }
    }
    if g_hi.is_none() {
        return Err(Error::ContinuationFailure { nu, branch: "upper" });
    }

    // Bisect each flank against the interior point.
    let alpha_minus = optim::bisect(
        |a| cache.growth(profile, a, nu).map(|g| g.unwrap_or(-1.0)),
        alpha_lo,
        alpha_mid,
        false,
        3e-4,
        60,
    )?;
    let alpha_plus = optim::bisect(
        |a| cache.growth(profile, a, nu).map(|g| g.unwrap_or(-1.0)),
        alpha_mid,
        alpha_hi,
        true,
        3e-4,
        60,
    )?;
    Ok((NeutralSample { nu, alpha_minus, alpha_plus }, c_mid))
}

/// Golden-section maximization of Re lambda over the unstable band.
/// Returns None when no unstable band exists at this nu.
pub fn most_unstable(profile: &ShearProfile, nu: f64) -> Result<Option<SpectralPoint>> {
    // Coarse scan in rescaled units to bracket the peak.
    let scale = (nu / profile.u_plus().abs()).powf(0.25);
    let mut best: Option<(f64, f64, Complex64)> = None;
    let mut seed: Option<Complex64> = None;
    let alphas: Vec<f64> = (0..14).map(|i| (1.0 + 0.27 * i as f64) * scale).collect();
    for &a in &alphas {
        if let Some(pt) = find_unstable(profile, a, nu, seed)? {
            seed = Some(pt.c);
            let g = a * pt.c.im;
            if g > 0.0 && best.as_ref().map_or(true, |b| g > b.1) {
                best = Some((a, g, pt.c));
            }
        }
    }
    let Some((a_best, _, c_best)) = best else {
        return Ok(None);
    };
    let mut cache = BranchCache::default();
    cache.insert(a_best, c_best);
    let (a_opt, _) = optim::golden_max(
        |a| cache.growth(profile, a, nu).map(|g| g.unwrap_or(f64::NEG_INFINITY)),
        a_best - 0.3 * scale,
        a_best + 0.3 * scale,
        1e-4 * scale,
    )?;
    let seed = cache.nearest(a_opt).unwrap();
    Ok(find_eigenvalue(profile, a_opt, nu, seed)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_profile_is_viscously_unstable() {
        // Concave profile: inviscidly stable, but the viscous long-wave band
        // exists once nu is small enough (the band closes above ~2.5e-5).
        let p = ShearProfile::exponential(1.0);
        let nu = 1e-5f64;
        let pt = find_unstable(&p, 2.4 * nu.powf(0.25), nu, None).unwrap();
        let pt = pt.expect("expected an unstable TS eigenvalue");
        assert!(pt.c.im > 0.0);
        assert!(pt.residual < 1e-9);
        // c is O(nu^{1/4}).
        let ct = pt.c_tilde();
        assert!(ct.norm() > 0.5 && ct.norm() < 6.0, "c~ = {ct}");
    }

    #[test]
    fn lambda_is_minus_i_alpha_c_exactly() {
        let pt = SpectralPoint {
            alpha: 0.3,
            nu: 1e-4,
            c: Complex64::new(0.2, 0.05),
            residual: 0.0,
        };
        let l = pt.lambda();
        assert_eq!(l, Complex64::new(0.0, -0.3) * Complex64::new(0.2, 0.05));
        assert_eq!(pt.alpha_tilde(), 0.3 / 1e-1);
    }

    #[test]
    fn conjugate_pair_across_alpha_sign() {
        // lambda(-alpha) = conj lambda(alpha).
        let p = ShearProfile::exponential(1.0);
        let nu = 1e-5f64;
        let alpha = 2.4 * nu.powf(0.25);
        let pt = find_unstable(&p, alpha, nu, None).unwrap().unwrap();
        let mirror = find_eigenvalue(&p, -alpha, nu, pt.c.conj()).unwrap().unwrap();
        let diff = (mirror.lambda() - pt.lambda().conj()).norm();
        assert!(diff < 1e-8, "conjugation defect {diff}");
    }
}
