//! Scalar bracketing helpers: golden-section maximization and bisection.

use crate::error::Result;

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section maximization of `f` on [a, b].
pub fn golden_max(
    mut f: impl FnMut(f64) -> Result<f64>,
    a: f64,
    b: f64,
    tol: f64,
) -> Result<(f64, f64)> {
    let (mut a, mut b) = (a, b);
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c)?;
    let mut fd = f(d)?;
    while (b - a).abs() > tol {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d)?;
        }
    }
    let x = 0.5 * (a + b);
    let fx = f(x)?;
    Ok((x, fx))
}

/// Bisection for a sign change of `f` on [a, b]; `fa` is sign(f(a)).
/// Returns the midpoint of the final bracket.
pub fn bisect(
    mut f: impl FnMut(f64) -> Result<f64>,
    a: f64,
    b: f64,
    fa_positive: bool,
    rel_tol: f64,
    max_iter: usize,
) -> Result<f64> {
    let (mut a, mut b) = (a, b);
    for _ in 0..max_iter {
        if (b - a).abs() <= rel_tol * (a.abs() + b.abs()) * 0.5 {
            break;
        }
        let m = 0.5 * (a + b);
        let fm = f(m)?;
        if (fm > 0.0) == fa_positive {
            a = m;
        } else {
            b = m;
        }
    }
    Ok(0.5 * (a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_peak() {
        let (x, fx) = golden_max(|x| Ok(1.0 - (x - 0.3) * (x - 0.3)), -1.0, 1.0, 1e-10).unwrap();
        assert!((x - 0.3).abs() < 1e-8);
        assert!((fx - 1.0).abs() < 1e-12);
    }

    #[test]
    fn bisect_finds_crossing() {
        let r = bisect(|x| Ok(x * x - 2.0), 0.0, 2.0, false, 1e-12, 200).unwrap();
        assert!((r - 2.0f64.sqrt()).abs() < 1e-10);
    }
}
