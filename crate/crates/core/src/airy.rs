//! Complex Airy function of the first kind.
//!
//! Three regimes in zeta = (2/3) z^{3/2}:
//! - Maclaurin series Ai = Ai(0) f + Ai'(0) g where its internal
//!   cancellation e^{|zeta| + Re zeta} stays below ~1e5 (small |z|, or the
//!   oscillatory sector where Re zeta < 0);
//! - Laplace-type integral representation for |arg zeta| <= 2, |zeta| < 14,
//!   where neither the series nor the Poincare expansion reaches 1e-10;
//! - Poincare asymptotic expansion truncated at the smallest term for
//!   |zeta| >= 14 within |arg z| <= 2 pi / 3; beyond that sector the
//!   connection formula Ai(z) = -w Ai(w z) - w^2 Ai(w^2 z), w = e^{2 pi i/3},
//!   rotates both arguments inside.
//!
//! For the stiff fast modes the value itself under/overflows, so
//! [`airy_scaled`] returns log Ai and the logarithmic derivative Ai'/Ai.

use crate::error::{Error, Result};
use num_complex::Complex64;

const AI_0: f64 = 0.355_028_053_887_817_2; // 3^(-2/3) / Gamma(2/3)
const AIP_0: f64 = -0.258_819_403_792_806_8; // -3^(-1/3) / Gamma(1/3)
const SERIES_RADIUS: f64 = 7.0;
// |arg z| cutoff for the direct asymptotic branch; one rotation by 2 pi / 3
// puts any argument inside it, so the connection formula never recurses.
const SECTOR: f64 = 2.0 * std::f64::consts::FRAC_PI_3 + 1e-12;

/// Ai and Ai' at complex z. Guarded at |z| = 1e4: far beyond that the
/// result is not representable and callers should switch to [`airy_scaled`].
pub fn airy(z: Complex64) -> Result<(Complex64, Complex64)> {
    if z.norm() >= 1e4 {
        return Err(Error::AiryOverflow { abs: z.norm() });
    }
    Ok(airy_unchecked(z))
}

fn airy_unchecked(z: Complex64) -> (Complex64, Complex64) {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    if z.norm() <= SERIES_RADIUS && zeta.re <= 0.5 {
        return airy_series(z);
    }
    if z.arg().abs() <= SECTOR {
        if zeta.norm() >= 14.0 {
            return airy_asymptotic(z);
        }
        if zeta.arg().abs() <= 2.0 {
            return airy_integral(z);
        }
        // |zeta| < 14 near the anti-Stokes ray: Re zeta is very negative,
        // so the series has no cancelation and |z| is still moderate.
        return airy_series(z);
    }
    // Connection formula; both rotated arguments land in |arg| <= 2pi/3
    // far from the positive real axis, where the other branches apply.
    let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::FRAC_PI_3);
    let wb = w.conj();
    let (a1, a1p) = airy_unchecked(w * z);
    let (a2, a2p) = airy_unchecked(wb * z);
    let ai = -w * a1 - wb * a2;
    // d/dz Ai(w z) = w Ai'(w z).
    let aip = -w * w * a1p - wb * wb * a2p;
    (ai, aip)
}

const GAMMA_5_6: f64 = 1.128_787_029_908_125_2;

/// Laplace representation, valid for Re zeta > 0:
/// Ai(z) = e^{-zeta} zeta^{-1/6} / (sqrt(pi) 48^{1/6} Gamma(5/6)) * G1,
/// G1 = int_0^inf t^{-1/6} e^{-t} (2 + t/zeta)^{-1/6} dt,
/// with dAi assembled from the companion integral
/// G2 = int_0^inf t^{5/6} e^{-t} (2 + t/zeta)^{-7/6} dt.
fn airy_integral(z: Complex64) -> (Complex64, Complex64) {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    // Substitution t = v^6 makes both integrands entire in v.
    let rule = crate::num::quad::gauss_legendre(24);
    let v_max = 2.0;
    let panels = 4;
    let mut g1 = Complex64::new(0.0, 0.0);
    let mut g2 = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let a = v_max * p as f64 / panels as f64;
        let b = v_max * (p + 1) as f64 / panels as f64;
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        for (x, w) in rule.0.iter().zip(rule.1.iter()) {
            let v = mid + half * x;
            let t = v.powi(6);
            let ew = (-t).exp() * w * half * 6.0 * v.powi(4);
            let base = 2.0 + t / zeta;
            g1 += ew * base.powf(-1.0 / 6.0);
            g2 += ew * t * base.powf(-7.0 / 6.0);
        }
    }
    let pref = std::f64::consts::PI.sqrt() * 48f64.powf(1.0 / 6.0) * GAMMA_5_6;
    let core = (-zeta).exp() * zeta.powf(-1.0 / 6.0) / pref;
    let ai = core * g1;
    // d/dzeta of the product, chained through dzeta/dz = sqrt(z).
    let dzeta = z.sqrt();
    let f_prime = g2 / (6.0 * zeta * zeta);
    let aip = dzeta * core * (-g1 - g1 / (6.0 * zeta) + f_prime);
    (ai, aip)
}

/// Maclaurin series; f, g and their derivatives accumulated together.
fn airy_series(z: Complex64) -> (Complex64, Complex64) {
    if z.norm() == 0.0 {
        return (Complex64::new(AI_0, 0.0), Complex64::new(AIP_0, 0.0));
    }
    let z3 = z * z * z;
    // f = sum t_k z^{3k}:   t_0 = 1, t_{k+1} = t_k z^3 / ((3k+2)(3k+3))
    // g = sum s_k z^{3k+1}: s_0 = z, s_{k+1} = s_k z^3 / ((3k+3)(3k+4))
    let mut t = Complex64::new(1.0, 0.0);
    let mut s = z;
    let mut f = t;
    let mut g = s;
    let mut fp = Complex64::new(0.0, 0.0);
    let mut gp = Complex64::new(1.0, 0.0);
    for k in 0..200 {
        let kf = k as f64;
        t = t * z3 / ((3.0 * kf + 2.0) * (3.0 * kf + 3.0));
        s = s * z3 / ((3.0 * kf + 3.0) * (3.0 * kf + 4.0));
        f += t;
        g += s;
        let kp = kf + 1.0;
        fp += 3.0 * kp * t / z;
        gp += (3.0 * kp + 1.0) * s / z;
        if t.norm() + s.norm() < 1e-18 * (f.norm() + g.norm()) {
            break;
        }
    }
    (AI_0 * f + AIP_0 * g, AI_0 * fp + AIP_0 * gp)
}

/// Next (u, v) coefficient pair of the Poincare expansion.
fn uv_next(k: usize, u: f64) -> (f64, f64) {
    let kf = k as f64;
    let un = u * (3.0 * kf + 0.5) * (3.0 * kf + 1.5) * (3.0 * kf + 2.5)
        / (54.0 * (kf + 1.0) * (kf + 0.5));
    let vn = un * (6.0 * (kf + 1.0) + 1.0) / (1.0 - 6.0 * (kf + 1.0));
    (un, vn)
}

/// Sums of the u- and v-series in 1/zeta, truncated at the smallest term.
fn asymptotic_sums(zeta: Complex64) -> (Complex64, Complex64) {
    let inv = 1.0 / zeta;
    let mut su = Complex64::new(1.0, 0.0);
    let mut sv = Complex64::new(1.0, 0.0);
    let mut u = 1.0;
    let mut term = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 0..60 {
        let (un, vn) = uv_next(k, u);
        term *= -inv;
        let tu = term * un;
        if tu.norm() > last {
            break;
        }
        last = tu.norm();
        su += tu;
        sv += term * vn;
        u = un;
        if tu.norm() < 1e-18 {
            break;
        }
    }
    (su, sv)
}

fn airy_asymptotic(z: Complex64) -> (Complex64, Complex64) {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let (su, sv) = asymptotic_sums(zeta);
    let sqrt_pi2 = 2.0 * std::f64::consts::PI.sqrt();
    let pref = (-zeta).exp() / (sqrt_pi2 * z.powf(0.25));
    (pref * su, -(z.powf(0.25)) * (-zeta).exp() / sqrt_pi2 * sv)
}

/// log Ai(z) and Ai'(z)/Ai(z) for z in the decaying sector |arg z| <= 2.
///
/// Magnitude differences and ratios of fast modes are formed from these, so
/// the 2 pi i ambiguity of the log never surfaces.
pub fn airy_scaled(z: Complex64) -> Result<(Complex64, Complex64)> {
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    if z.arg().abs() > SECTOR {
        // Oscillatory sector: Ai is O(e^{|zeta|}) there, so plain values are
        // representable as long as |zeta| stays moderate.
        if zeta.norm() > 500.0 {
            return Err(Error::AiryOverflow { abs: z.norm() });
        }
        let (ai, aip) = airy_unchecked(z);
        return Ok((ai.ln(), aip / ai));
    }
    if zeta.norm() < 14.0 {
        // Value magnitudes stay representable here; reuse the direct branches.
        let (ai, aip) = airy_unchecked(z);
        return Ok((ai.ln(), aip / ai));
    }
    let (su, sv) = asymptotic_sums(zeta);
    let log_ai = -zeta - 0.25 * z.ln() - (2.0 * std::f64::consts::PI.sqrt()).ln() + su.ln();
    let dlog = -z.sqrt() * sv / su;
    Ok((log_ai, dlog))
}
