//! Adaptive Dormand-Prince 5(4) integration for small complex systems.
//!
//! The state dimension is a const generic so the hot loops stay allocation
//! free. Two entry points matter downstream: [`integrate`] runs the adaptive
//! controller, optionally recording the accepted step positions, and
//! [`integrate_plan`] replays a previously recorded step sequence with the
//! same 5th-order formula. Replaying a frozen plan makes the result a smooth
//! function of equation parameters, which keeps root searches on top of the
//! integrator well conditioned.

use crate::error::{Error, Result};
use num_complex::Complex64;

/// Butcher tableau of the Dormand-Prince 5(4) pair.
const A21: f64 = 1.0 / 5.0;
const A31: f64 = 3.0 / 40.0;
const A32: f64 = 9.0 / 40.0;
const A41: f64 = 44.0 / 45.0;
const A42: f64 = -56.0 / 15.0;
const A43: f64 = 32.0 / 9.0;
const A51: f64 = 19372.0 / 6561.0;
const A52: f64 = -25360.0 / 2187.0;
const A53: f64 = 64448.0 / 6561.0;
const A54: f64 = -212.0 / 729.0;
const A61: f64 = 9017.0 / 3168.0;
const A62: f64 = -355.0 / 33.0;
const A63: f64 = 46732.0 / 5247.0;
const A64: f64 = 49.0 / 176.0;
const A65: f64 = -5103.0 / 18656.0;
const B1: f64 = 35.0 / 384.0;
const B3: f64 = 500.0 / 1113.0;
const B4: f64 = 125.0 / 192.0;
const B5: f64 = -2187.0 / 6784.0;
const B6: f64 = 11.0 / 84.0;
// 4th-order error weights (b - b_hat).
const E1: f64 = 71.0 / 57600.0;
const E3: f64 = -71.0 / 16695.0;
const E4: f64 = 71.0 / 1920.0;
const E5: f64 = -17253.0 / 339200.0;
const E6: f64 = 22.0 / 525.0;
const E7: f64 = -1.0 / 40.0;

const C2: f64 = 1.0 / 5.0;
const C3: f64 = 3.0 / 10.0;
const C4: f64 = 4.0 / 5.0;
const C5: f64 = 8.0 / 9.0;

#[derive(Debug, Clone)]
pub struct Rk45Options {
    pub rtol: f64,
    pub atol: f64,
    /// Initial step as a fraction of the span; chosen automatically when None.
    pub h_init: Option<f64>,
    pub max_steps: usize,
}

impl Default for Rk45Options {
    fn default() -> Self {
        Rk45Options {
            rtol: 1e-10,
            atol: 1e-14,
            h_init: None,
            max_steps: 20_000_000,
        }
    }
}

/// Records accepted step endpoints so a run can be replayed deterministically.
#[derive(Debug, Clone, Default)]
pub struct StepRecorder {
    pub nodes: Vec<f64>,
}

#[inline]
fn axpy<const N: usize>(y: &[Complex64; N], h: f64, coefs: &[(f64, &[Complex64; N])]) -> [Complex64; N] {
    let mut out = *y;
    for (c, k) in coefs {
        let ch = h * c;
        for i in 0..N {
            out[i] += ch * k[i];
        }
    }
    out
}

/// One Dormand-Prince step; returns (y5, error_estimate, k1_next).
#[inline]
fn dp_step<const N: usize>(
    f: &mut impl FnMut(f64, &[Complex64; N]) -> [Complex64; N],
    t: f64,
    y: &[Complex64; N],
    h: f64,
    k1: &[Complex64; N],
) -> ([Complex64; N], [Complex64; N], [Complex64; N]) {
    let k2 = f(t + C2 * h, &axpy(y, h, &[(A21, k1)]));
    let k3 = f(t + C3 * h, &axpy(y, h, &[(A31, k1), (A32, &k2)]));
    let k4 = f(t + C4 * h, &axpy(y, h, &[(A41, k1), (A42, &k2), (A43, &k3)]));
    let k5 = f(
        t + C5 * h,
        &axpy(y, h, &[(A51, k1), (A52, &k2), (A53, &k3), (A54, &k4)]),
    );
    let k6 = f(
        t + h,
        &axpy(y, h, &[(A61, k1), (A62, &k2), (A63, &k3), (A64, &k4), (A65, &k5)]),
    );
    let y5 = axpy(y, h, &[(B1, k1), (B3, &k3), (B4, &k4), (B5, &k5), (B6, &k6)]);
    let k7 = f(t + h, &y5);
    let mut err = [Complex64::new(0.0, 0.0); N];
    for i in 0..N {
        err[i] = h
            * (E1 * k1[i] + E3 * k3[i] + E4 * k4[i] + E5 * k5[i] + E6 * k6[i] + E7 * k7[i]);
    }
    (y5, err, k7)
}

/// Adaptive integration from `t0` to `t1` (either direction).
///
/// `on_accept` runs after every accepted step and may rescale the state in
/// place by exp(-r) for a real r (compound-matrix renormalization); it
/// returns r, which is accumulated and handed back so callers can track
/// log-magnitude factors. The right-hand side must be linear for a nonzero
/// r (true for every system in this crate), which lets the FSAL stage be
/// rescaled instead of recomputed. If `recorder` is given, accepted
/// endpoints are appended to it.
pub fn integrate<const N: usize>(
    mut f: impl FnMut(f64, &[Complex64; N]) -> [Complex64; N],
    y0: [Complex64; N],
    t0: f64,
    t1: f64,
    opts: &Rk45Options,
    mut on_accept: impl FnMut(f64, &mut [Complex64; N]) -> f64,
    mut recorder: Option<&mut StepRecorder>,
) -> Result<([Complex64; N], f64)> {
    let span = t1 - t0;
    if span == 0.0 {
        return Ok((y0, 0.0));
    }
    let dir = span.signum();
    let mut h = dir * opts.h_init.unwrap_or(span.abs() * 1e-4).abs();
    let h_floor = span.abs() * 1e-14;
    let mut t = t0;
    let mut y = y0;
    let mut k1 = f(t, &y);
    let mut acc = 0.0;
    if let Some(r) = recorder.as_deref_mut() {
        r.nodes.clear();
        r.nodes.push(t0);
    }
    for _ in 0..opts.max_steps {
        if dir * (t + h - t1) > 0.0 {
            h = t1 - t;
        }
        let (y5, err, k7) = dp_step(&mut f, t, &y, h, &k1);
        let mut scale_err: f64 = 0.0;
        for i in 0..N {
            let sc = opts.atol + opts.rtol * y[i].norm().max(y5[i].norm());
            scale_err = scale_err.max(err[i].norm() / sc);
        }
        if !scale_err.is_finite() {
            // Overflow inside the step: retry smaller.
            h *= 0.25;
            if h.abs() < h_floor {
                return Err(Error::StepSizeUnderflow { y: t });
            }
            continue;
        }
        if scale_err <= 1.0 {
            t += h;
            y = y5;
            k1 = k7;
            let r = on_accept(t, &mut y);
            acc += r;
            if r != 0.0 {
                // Linear rescale of the state rescales the FSAL stage too.
                let s = (-r).exp();
                for k in k1.iter_mut() {
                    *k *= s;
                }
            }
            if let Some(rec) = recorder.as_deref_mut() {
                rec.nodes.push(t);
            }
            if (t - t1).abs() <= span.abs() * 1e-15 || dir * (t - t1) >= 0.0 {
                return Ok((y, acc));
            }
        }
        let fac = if scale_err > 0.0 {
            (0.9 * scale_err.powf(-0.2)).clamp(0.2, 5.0)
        } else {
            5.0
        };
        h *= fac;
        if h.abs() < h_floor {
            return Err(Error::StepSizeUnderflow { y: t });
        }
    }
    Err(Error::IntegrationFailure {
        y: t,
        reason: format!("step budget exhausted ({} steps)", opts.max_steps),
    })
}

/// Replay a recorded step sequence with the 5th-order formula (no controller).
pub fn integrate_plan<const N: usize>(
    mut f: impl FnMut(f64, &[Complex64; N]) -> [Complex64; N],
    y0: [Complex64; N],
    plan: &[f64],
    mut on_accept: impl FnMut(f64, &mut [Complex64; N]) -> f64,
) -> ([Complex64; N], f64) {
    let mut y = y0;
    let mut acc = 0.0;
    let mut k1 = f(plan[0], &y);
    for w in plan.windows(2) {
        let (t, tn) = (w[0], w[1]);
        let (y5, _, k7) = dp_step(&mut f, t, &y, tn - t, &k1);
        y = y5;
        k1 = k7;
        let r = on_accept(tn, &mut y);
        acc += r;
        if r != 0.0 {
            let s = (-r).exp();
            for k in k1.iter_mut() {
                *k *= s;
            }
        }
    }
    (y, acc)
}

/// Adaptive integration that lands exactly on each checkpoint and reports the
/// state there. Checkpoints must be sorted in the direction of integration.
pub fn integrate_with_checkpoints<const N: usize>(
    mut f: impl FnMut(f64, &[Complex64; N]) -> [Complex64; N],
    y0: [Complex64; N],
    t0: f64,
    t1: f64,
    checkpoints: &[f64],
    opts: &Rk45Options,
    mut at_checkpoint: impl FnMut(usize, &[Complex64; N]),
) -> Result<[Complex64; N]> {
    let mut y = y0;
    let mut t = t0;
    for (idx, &cp) in checkpoints.iter().enumerate() {
        if (cp - t).abs() > 0.0 {
            let (ynew, _) = integrate(&mut f, y, t, cp, opts, |_, _| 0.0, None)?;
            y = ynew;
            t = cp;
        }
        at_checkpoint(idx, &y);
    }
    if (t - t1).abs() > 0.0 {
        let (ynew, _) = integrate(&mut f, y, t, t1, opts, |_, _| 0.0, None)?;
        y = ynew;
    }
    Ok(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponential_decay_to_high_accuracy() {
        // y' = -y, y(0) = 1 integrated to t = 3.
        let opts = Rk45Options::default();
        let (y, _) = integrate(
            |_, y: &[Complex64; 1]| [-y[0]],
            [Complex64::new(1.0, 0.0)],
            0.0,
            3.0,
            &opts,
            |_, _| 0.0,
            None,
        )
        .unwrap();
        assert!((y[0].re - (-3.0f64).exp()).abs() < 1e-11);
    }

    #[test]
    fn oscillator_backward_integration() {
        // y'' = -y as a first-order system, integrated from 2pi back to 0.
        let opts = Rk45Options { rtol: 1e-11, ..Default::default() };
        let (y, _) = integrate(
            |_, y: &[Complex64; 2]| [y[1], -y[0]],
            [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)],
            std::f64::consts::TAU,
            0.0,
            &opts,
            |_, _| 0.0,
            None,
        )
        .unwrap();
        assert!((y[0].re - 1.0).abs() < 1e-9);
        assert!(y[1].re.abs() < 1e-9);
    }

    #[test]
    fn plan_replay_matches_adaptive_run() {
        let opts = Rk45Options::default();
        let mut rec = StepRecorder::default();
        let rhs = |t: f64, y: &[Complex64; 1]| [y[0] * Complex64::new(-t, 0.5)];
        let y0 = [Complex64::new(0.3, -0.2)];
        let (ya, _) = integrate(rhs, y0, 0.0, 2.0, &opts, |_, _| 0.0, Some(&mut rec)).unwrap();
        let (yp, _) = integrate_plan(rhs, y0, &rec.nodes, |_, _| 0.0);
        assert!((ya[0] - yp[0]).norm() < 1e-12);
    }
}
