//! Argument-principle winding counts along rectangular contours.
//!
//! The integrand is the phase of an analytic function supplied in scaled
//! form; the real log-scale never contributes to the phase, so stiff growth
//! factors drop out. Segments are refined until each phase increment is
//! small enough to be unambiguous.

use crate::error::{Error, Result};
use crate::num::scaled::ScaledComplex;
use num_complex::Complex64;

/// Closed rectangle in the complex plane.
#[derive(Debug, Clone, Copy)]
pub struct Rect {
    pub re: (f64, f64),
    pub im: (f64, f64),
}

impl Rect {
    pub fn corners(&self) -> [Complex64; 4] {
        [
            Complex64::new(self.re.0, self.im.0),
            Complex64::new(self.re.1, self.im.0),
            Complex64::new(self.re.1, self.im.1),
            Complex64::new(self.re.0, self.im.1),
        ]
    }

    pub fn center(&self) -> Complex64 {
        Complex64::new(0.5 * (self.re.0 + self.re.1), 0.5 * (self.im.0 + self.im.1))
    }

    pub fn quadrants(&self) -> [Rect; 4] {
        let cm = 0.5 * (self.re.0 + self.re.1);
        let ci = 0.5 * (self.im.0 + self.im.1);
        [
            Rect { re: (self.re.0, cm), im: (self.im.0, ci) },
            Rect { re: (cm, self.re.1), im: (self.im.0, ci) },
            Rect { re: (self.re.0, cm), im: (ci, self.im.1) },
            Rect { re: (cm, self.re.1), im: (ci, self.im.1) },
        ]
    }

    pub fn width(&self) -> f64 {
        (self.re.1 - self.re.0).hypot(self.im.1 - self.im.0)
    }
}

/// Winding number of `f` around the rectangle boundary, counterclockwise.
///
/// `points_per_side` seeds the sampling; segments whose phase jump exceeds
/// pi/2 are bisected, up to `max_refine` extra levels.
pub fn winding_number(
    mut f: impl FnMut(Complex64) -> Result<ScaledComplex>,
    rect: &Rect,
    points_per_side: usize,
    max_refine: usize,
) -> Result<i64> {
    let corners = rect.corners();
    let mut total = 0.0;
    for s in 0..4 {
        let a = corners[s];
        let b = corners[(s + 1) % 4];
        let mut prev_z = a;
        let mut prev = f(a)?;
        for k in 1..=points_per_side {
            let t = k as f64 / points_per_side as f64;
            let z = a + (b - a) * t;
            let val = f(z)?;
            total += phase_increment(&mut f, prev_z, &prev, z, &val, max_refine)?;
            prev_z = z;
            prev = val;
        }
    }
    let w = total / std::f64::consts::TAU;
    let rounded = w.round();
    if (w - rounded).abs() > 0.25 {
        return Err(Error::IntegrationFailure {
            y: 0.0,
            reason: format!("winding count did not settle: raw value {w:.3}"),
        });
    }
    Ok(rounded as i64)
}

fn phase_increment(
    f: &mut impl FnMut(Complex64) -> Result<ScaledComplex>,
    za: Complex64,
    fa: &ScaledComplex,
    zb: Complex64,
    fb: &ScaledComplex,
    depth: usize,
) -> Result<f64> {
    let d = wrap_angle(fb.arg() - fa.arg());
    if d.abs() <= std::f64::consts::FRAC_PI_2 {
        return Ok(d);
    }
    if depth == 0 {
        return Err(Error::IntegrationFailure {
            y: 0.0,
            reason: "winding refinement exhausted (zero too close to contour?)".to_string(),
        });
    }
    let zm = 0.5 * (za + zb);
    let fm = f(zm)?;
    Ok(phase_increment(f, za, fa, zm, &fm, depth - 1)?
        + phase_increment(f, zm, &fm, zb, fb, depth - 1)?)
}

fn wrap_angle(a: f64) -> f64 {
    let mut a = a % std::f64::consts::TAU;
    if a > std::f64::consts::PI {
        a -= std::f64::consts::TAU;
    } else if a < -std::f64::consts::PI {
        a += std::f64::consts::TAU;
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_polynomial_zeros() {
        // (z - 0.3 - 0.4i)^2 (z + 1): two zeros inside, one outside.
        let f = |z: Complex64| {
            let w = z - Complex64::new(0.3, 0.4);
            Ok(ScaledComplex::from_complex(w * w * (z + 1.0)))
        };
        let rect = Rect { re: (0.0, 1.0), im: (0.0, 1.0) };
        assert_eq!(winding_number(f, &rect, 16, 8).unwrap(), 2);
        let rect2 = Rect { re: (2.0, 3.0), im: (0.0, 1.0) };
        assert_eq!(winding_number(f, &rect2, 16, 8).unwrap(), 0);
    }
}
