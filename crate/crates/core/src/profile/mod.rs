//! Half-plane shear profiles U(y) with derivatives, heat-equation evolution
//! of the base flow, and critical-layer location.
//!
//! A profile satisfies U(0) = 0 and U(y) -> U_+ exponentially. Built-in
//! kinds cover the test matrix: a concave monotone exponential profile, an
//! erf-type heat profile (closed under heat evolution), a tanh-composite
//! profile with an interior inflection point, and sampled tables with
//! spline derivatives for everything else.

pub mod erf;
mod heat;
mod spline;

use crate::error::{Error, Result};
use num_complex::Complex64;
use spline::CubicSpline;

#[derive(Debug, Clone)]
enum Kind {
    /// U = U+ (1 - e^{-y}).
    Exponential,
    /// U = U+ erf(y / w); w = 0 degenerates to the constant initial datum.
    Erf { w: f64 },
    /// U = U+ [tanh((y-d)/delta) + tanh(d/delta)] / (1 + tanh(d/delta)).
    Inflection { d: f64, delta: f64 },
    /// Sampled table with natural-spline derivatives; not analytic.
    Table { spline: CubicSpline },
}

/// Base shear flow U_s(y) with first two derivatives and far-field limit.
#[derive(Debug, Clone)]
pub struct ShearProfile {
    kind: Kind,
    u_plus: f64,
    decay_rate: f64,
    label: String,
}

impl ShearProfile {
    pub fn exponential(u_plus: f64) -> Self {
        ShearProfile {
            kind: Kind::Exponential,
            u_plus,
            decay_rate: 1.0,
            label: "exp".to_string(),
        }
    }

    /// Heat profile U+ erf(y/w). `w = 0` is the constant initial datum
    /// (the t -> 0 limit), valid only as input to [`Self::evolve_heat`].
    pub fn erf_profile(u_plus: f64, w: f64) -> Self {
        assert!(w >= 0.0);
        let decay_rate = if w > 0.0 { 2.0 / w } else { f64::INFINITY };
        ShearProfile { kind: Kind::Erf { w }, u_plus, decay_rate, label: "erf".to_string() }
    }

    /// Tanh-composite profile with an inflection point at y = d.
    pub fn inflection(u_plus: f64, d: f64, delta: f64) -> Self {
        assert!(d > 0.0 && delta > 0.0);
        ShearProfile {
            kind: Kind::Inflection { d, delta },
            u_plus,
            decay_rate: 2.0 / delta,
            label: "inflection".to_string(),
        }
    }

    /// Profile from (y, U) samples; derivatives come from a natural spline.
    /// The decay rate is caller-supplied metadata (it cannot be inferred
    /// reliably from a finite table).
    pub fn from_samples(label: &str, u_plus: f64, decay_rate: f64, samples: &[(f64, f64)]) -> Self {
        let x: Vec<f64> = samples.iter().map(|s| s.0).collect();
        let y: Vec<f64> = samples.iter().map(|s| s.1).collect();
        ShearProfile {
            kind: Kind::Table { spline: CubicSpline::new(x, y) },
            u_plus,
            decay_rate,
            label: label.to_string(),
        }
    }

    pub fn u_plus(&self) -> f64 {
        self.u_plus
    }

    pub fn decay_rate(&self) -> f64 {
        self.decay_rate
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// True when the profile extends analytically off the real axis.
    pub fn is_analytic(&self) -> bool {
        !matches!(self.kind, Kind::Table { .. })
    }

    /// (U, U', U'') at real y.
    pub fn eval(&self, y: f64) -> (f64, f64, f64) {
        match &self.kind {
            Kind::Exponential => {
                let e = (-y).exp();
                (self.u_plus * (1.0 - e), self.u_plus * e, -self.u_plus * e)
            }
            Kind::Erf { w } => {
                if *w == 0.0 {
                    return (if y > 0.0 { self.u_plus } else { 0.0 }, 0.0, 0.0);
                }
                let t = y / w;
                let g = (-t * t).exp();
                let c = 2.0 / (w * std::f64::consts::PI.sqrt());
                (
                    self.u_plus * erf::erf(t),
                    self.u_plus * c * g,
                    -self.u_plus * c * 2.0 * t / w * g,
                )
            }
            Kind::Inflection { d, delta } => {
                let t0 = (d / delta).tanh();
                let t = ((y - d) / delta).tanh();
                let sech2 = 1.0 - t * t;
                let norm = self.u_plus / (1.0 + t0);
                (
                    norm * (t + t0),
                    norm * sech2 / delta,
                    -norm * 2.0 * t * sech2 / (delta * delta),
                )
            }
            Kind::Table { spline } => {
                let (hi, _) = (spline.domain().1, ());
                if y >= hi {
                    return (self.u_plus, 0.0, 0.0);
                }
                spline.eval(y)
            }
        }
    }

    /// (U, U', U'') continued to complex y; refused for table profiles.
    pub fn eval_complex(&self, y: Complex64) -> Result<(Complex64, Complex64, Complex64)> {
        match &self.kind {
            Kind::Exponential => {
                let e = (-y).exp();
                Ok((self.u_plus * (1.0 - e), self.u_plus * e, -self.u_plus * e))
            }
            Kind::Erf { w } => {
                if *w == 0.0 {
                    return Err(Error::invalid("erf profile with w = 0 has no complex extension"));
                }
                let t = y / *w;
                let g = (-t * t).exp();
                let c = 2.0 / (w * std::f64::consts::PI.sqrt());
                Ok((
                    self.u_plus * erf::erf_complex(t),
                    self.u_plus * c * g,
                    -self.u_plus * c * 2.0 * t / *w * g,
                ))
            }
            Kind::Inflection { d, delta } => {
                let t0 = (d / delta).tanh();
                let t = ((y - d) / *delta).tanh();
                let sech2 = 1.0 - t * t;
                let norm = self.u_plus / (1.0 + t0);
                Ok((
                    norm * (t + t0),
                    norm * sech2 / *delta,
                    -norm * 2.0 * t * sech2 / (delta * delta),
                ))
            }
            Kind::Table { .. } => {
                if y.im == 0.0 {
                    let (u, du, ddu) = self.eval(y.re);
                    Ok((u.into(), du.into(), ddu.into()))
                } else {
                    Err(Error::UnsupportedComplexEval { label: self.label.clone() })
                }
            }
        }
    }

    /// Evolve the base flow by the half-line heat equation with U(t,0) = 0.
    ///
    /// Erf profiles evolve in closed form (the family is invariant); other
    /// kinds go through Crank-Nicolson and come back as table profiles.
    pub fn evolve_heat(&self, nu: f64, t: f64) -> Result<ShearProfile> {
        if t < 0.0 {
            return Err(Error::NegativeTime { t });
        }
        if nu <= 0.0 {
            return Err(Error::invalid("viscosity must be positive"));
        }
        if t == 0.0 {
            return Ok(self.clone());
        }
        match &self.kind {
            Kind::Erf { w } => {
                // Heat kernel acting on an odd erf stays erf: w^2 grows by 4 nu t.
                Ok(ShearProfile::erf_profile(self.u_plus, (w * w + 4.0 * nu * t).sqrt()))
            }
            _ => heat::crank_nicolson_evolve(self, nu, t),
        }
    }

    /// Solve U(y_c) = c by Newton from y0 = c / U'(0).
    pub fn critical_layer(&self, c: Complex64) -> Result<CriticalLayer> {
        if c.norm() >= self.u_plus.abs() {
            return Err(Error::invalid(format!(
                "|c| = {} must be below |U+| = {}",
                c.norm(),
                self.u_plus.abs()
            )));
        }
        if c.im != 0.0 && !self.is_analytic() {
            return Err(Error::UnsupportedComplexEval { label: self.label.clone() });
        }
        let du0 = self.eval(0.0).1;
        match self.newton_critical(c, c / du0) {
            Ok(cl) => Ok(cl),
            Err(_) => {
                // Profiles with a detached shear layer have a tiny wall slope,
                // which makes c/U'(0) a poor seed. Bracket Re c on the real
                // axis first (U is monotone toward U_+ there in practice).
                let mut lo = 0.0;
                let mut hi = 40.0 / self.decay_rate().min(10.0).max(0.05);
                let target = c.re.clamp(0.0, 0.999 * self.u_plus);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if self.eval(mid).0 < target {
                        lo = mid;
                    } else {
                        hi = mid;
                    }
                }
                self.newton_critical(c, Complex64::new(0.5 * (lo + hi), 0.0))
            }
        }
    }

    fn newton_critical(&self, c: Complex64, y0: Complex64) -> Result<CriticalLayer> {
        let mut y = y0;
        let mut last_residual = f64::INFINITY;
        for _ in 0..60 {
            let (u, du, _) = self.eval_complex(y)?;
            let r = u - c;
            last_residual = r.norm();
            if last_residual < 1e-13 {
                return Ok(CriticalLayer { y_c: y, c, u_prime_at_yc: du });
            }
            let mut step = r / du;
            // Damp to keep the iterate inside the analyticity region.
            let cap = 2.0;
            if step.norm() > cap {
                step *= cap / step.norm();
            }
            y -= step;
            if !y.is_finite() {
                return Err(Error::RootNotFound { last: y, residual: last_residual, iters: 60 });
            }
        }
        // Accept the looser documented tolerance before giving up.
        let (u, du, _) = self.eval_complex(y)?;
        if (u - c).norm() < 1e-12 {
            return Ok(CriticalLayer { y_c: y, c, u_prime_at_yc: du });
        }
        Err(Error::RootNotFound { last: y, residual: last_residual, iters: 60 })
    }
}

/// Location y_c where U(y_c) = c, with U' there.
#[derive(Debug, Clone, Copy)]
pub struct CriticalLayer {
    pub y_c: Complex64,
    pub c: Complex64,
    pub u_prime_at_yc: Complex64,
}
