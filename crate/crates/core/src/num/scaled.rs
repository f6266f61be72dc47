//! Complex values carried as mantissa + real log-scale.
//!
//! The compound-matrix minors grow like exp of the integrated fast rate,
//! far beyond f64 range at small viscosity, so the dispersion function is
//! returned in this representation.

use num_complex::Complex64;

/// `value = m * exp(log_scale)`, with `m` kept at O(1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaledComplex {
    pub m: Complex64,
    pub log_scale: f64,
}

impl ScaledComplex {
    pub fn new(m: Complex64, log_scale: f64) -> Self {
        ScaledComplex { m, log_scale }
    }

    pub fn from_complex(z: Complex64) -> Self {
        ScaledComplex { m: z, log_scale: 0.0 }.normalized()
    }

    /// Rescale so that |m| = 1 (zero stays zero).
    pub fn normalized(self) -> Self {
        let n = self.m.norm();
        if n == 0.0 || !n.is_finite() {
            return self;
        }
        ScaledComplex {
            m: self.m / n,
            log_scale: self.log_scale + n.ln(),
        }
    }

    /// ln|value|.
    pub fn ln_abs(&self) -> f64 {
        self.m.norm().ln() + self.log_scale
    }

    pub fn arg(&self) -> f64 {
        self.m.arg()
    }

    /// Collapse to a plain complex number; infinite/zero if out of range.
    pub fn value(&self) -> Complex64 {
        self.m * self.log_scale.exp()
    }

    pub fn mul_complex(self, z: Complex64) -> Self {
        ScaledComplex { m: self.m * z, log_scale: self.log_scale }.normalized()
    }

    pub fn div_complex(self, z: Complex64) -> Self {
        ScaledComplex { m: self.m / z, log_scale: self.log_scale }.normalized()
    }

    /// Mantissa rescaled to a common log level (for comparing nearby values).
    pub fn at_level(&self, level: f64) -> Complex64 {
        self.m * (self.log_scale - level).exp()
    }

    pub fn is_finite(&self) -> bool {
        self.m.is_finite() && self.log_scale.is_finite()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_level() {
        let a = ScaledComplex::new(Complex64::new(3.0, 4.0), 2.0).normalized();
        assert!((a.ln_abs() - (5.0f64.ln() + 2.0)).abs() < 1e-14);
        let z = a.value();
        assert!((z - Complex64::new(3.0, 4.0) * 2.0f64.exp()).norm() < 1e-12);
    }
}
