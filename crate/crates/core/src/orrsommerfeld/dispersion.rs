//! Compound-matrix evaluation of the Orr-Sommerfeld dispersion function.
//!
//! The fourth-order equation
//!
//! ```text
//! (U - c)(psi'' - a^2 psi) - U'' psi - (nu / i a)(d^2/dy^2 - a^2)^2 psi = 0
//! ```
//!
//! has two decaying solutions at infinity, with rates a (slow) and
//! Lambda = sqrt(a^2 + i a (U+ - c)/nu) (fast). Tracking their 2x2 minors
//! y_ij = u_i v_j - u_j v_i removes the stiffness-induced loss of linear
//! independence; the wall value of the first minor is, up to a nonzero
//! analytic factor, the determinant whose zeros are the eigenvalues c(a, nu).
//!
//! The minors grow like exp(integral of the fast rate), far outside f64
//! range at small nu, so the state is renormalized along the way and the
//! result returned as a [`ScaledComplex`]. The normalization is fixed so
//! that the constant far-field problem (U == U+) gives exactly D = 1.

use crate::error::{Error, Result};
use crate::num::rk45::{self, Rk45Options, StepRecorder};
use crate::num::scaled::ScaledComplex;
use crate::profile::ShearProfile;
use num_complex::Complex64;

/// Desk-scale viscosity floor: below this the critical layer outruns
/// double precision on any affordable grid.
pub const NU_FLOOR: f64 = 1e-8;

/// Dead zone just below the real c-axis where evaluations are refused.
pub const IM_C_DEAD_ZONE: f64 = 1e-8;

/// One (profile, alpha, nu) dispersion problem.
#[derive(Debug, Clone)]
pub struct Dispersion<'a> {
    pub profile: &'a ShearProfile,
    pub alpha: f64,
    pub nu: f64,
    /// Start of integration: the profile is numerically flat beyond.
    pub y_start: f64,
    opts: Rk45Options,
}

pub(crate) fn validate_nu(nu: f64) -> Result<()> {
    if nu <= 0.0 {
        return Err(Error::invalid("nu must be positive"));
    }
    if nu < NU_FLOOR {
        return Err(Error::NuFloor { nu });
    }
    Ok(())
}

impl<'a> Dispersion<'a> {
    pub fn new(profile: &'a ShearProfile, alpha: f64, nu: f64) -> Result<Self> {
        if alpha == 0.0 {
            return Err(Error::invalid("alpha must be nonzero"));
        }
        validate_nu(nu)?;
        let rate = profile.decay_rate().clamp(0.05, 10.0);
        Ok(Dispersion {
            profile,
            alpha,
            nu,
            y_start: 30.0 / rate,
            opts: Rk45Options { rtol: 1e-8, atol: 1e-280, ..Default::default() },
        })
    }

    /// Fast decay rate of the far-field problem, Re > 0 branch.
    pub fn far_field_rate(&self, c: Complex64) -> Complex64 {
        let a = self.alpha;
        let lam2 = Complex64::new(a * a, 0.0)
            + Complex64::new(0.0, a) * (self.profile.u_plus() - c) / self.nu;
        let lam = lam2.sqrt();
        if lam.re < 0.0 {
            -lam
        } else {
            lam
        }
    }

    fn check_c(&self, c: Complex64) -> Result<()> {
        if c.im <= 0.0 && c.im > -IM_C_DEAD_ZONE {
            return Err(Error::invalid(format!(
                "Im c = {} inside the dead zone (-{IM_C_DEAD_ZONE}, 0]",
                c.im
            )));
        }
        Ok(())
    }

    /// Minor seed at y_start for the (slow, fast) decaying pair.
    fn seed(&self, lam: Complex64) -> [Complex64; 6] {
        let k = Complex64::new(self.alpha.abs(), 0.0);
        [
            k - lam,
            lam * lam - k * k,
            k * k * k - lam * lam * lam,
            k * lam * (k - lam),
            k * lam * (lam * lam - k * k),
            k * k * lam * lam * (k - lam),
        ]
    }

    /// Evaluate D(c). When `plan` holds a recorded step sequence it is
    /// replayed (making D exactly smooth in c for root polishing); an empty
    /// plan is filled by the adaptive controller on this call.
    pub fn eval(&self, c: Complex64, plan: &mut Option<Vec<f64>>) -> Result<ScaledComplex> {
        self.check_c(c)?;
        let a = self.alpha;
        let nu = self.nu;
        let ia_over_nu = Complex64::new(0.0, a) / nu;
        let a2 = a * a;
        let rhs = |y: f64, m: &[Complex64; 6]| -> [Complex64; 6] {
            let (u, _, ddu) = self.profile.eval(y);
            let umc = u - c;
            let b0 = ia_over_nu * (-a2 * umc - ddu) - a2 * a2;
            let b2 = ia_over_nu * umc + 2.0 * a2;
            [
                m[1],
                m[2] + m[3],
                m[4] + b2 * m[1],
                m[4],
                m[5] - b0 * m[0] + b2 * m[3],
                -b0 * m[1],
            ]
        };
        let renorm = |_y: f64, m: &mut [Complex64; 6]| -> f64 {
            let s = m.iter().map(|v| v.norm()).fold(0.0, f64::max);
            if s > 1e30 || (s < 1e-30 && s > 0.0) {
                let inv = 1.0 / s;
                for v in m.iter_mut() {
                    *v *= inv;
                }
                s.ln()
            } else {
                0.0
            }
        };
        let lam = self.far_field_rate(c);
        let seed = self.seed(lam);
        let (state, logsum) = match plan {
            Some(nodes) if !nodes.is_empty() => {
                rk45::integrate_plan(rhs, seed, nodes, renorm)
            }
            _ => {
                let mut rec = StepRecorder::default();
                let out = rk45::integrate(
                    rhs,
                    seed,
                    self.y_start,
                    0.0,
                    &self.opts,
                    renorm,
                    Some(&mut rec),
                )?;
                *plan = Some(rec.nodes);
                out
            }
        };
        if !state.iter().all(|v| v.is_finite()) {
            return Err(Error::IntegrationFailure {
                y: 0.0,
                reason: "non-finite minors at the wall".to_string(),
            });
        }
        // Gauge out the constant-coefficient growth so that U == U+ gives 1.
        let k = Complex64::new(self.alpha.abs(), 0.0);
        let d = ScaledComplex::new(state[0], logsum)
            .div_complex(k - lam)
            .normalized();
        let gauge = -(k + lam) * self.y_start;
        Ok(ScaledComplex::new(d.m * Complex64::new(0.0, gauge.im).exp(), d.log_scale + gauge.re)
            .normalized())
    }

    /// Convenience entry point without plan reuse.
    pub fn eval_once(&self, c: Complex64) -> Result<ScaledComplex> {
        self.eval(c, &mut None)
    }
}
