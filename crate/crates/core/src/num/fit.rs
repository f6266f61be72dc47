//! Least-squares line fits used by the scaling-law diagnostics.

/// Fit y = intercept + slope * x; returns (intercept, slope).
pub fn linear_fit(x: &[f64], y: &[f64]) -> (f64, f64) {
    assert_eq!(x.len(), y.len());
    assert!(x.len() >= 2);
    let n = x.len() as f64;
    let sx: f64 = x.iter().sum();
    let sy: f64 = y.iter().sum();
    let sxx: f64 = x.iter().map(|v| v * v).sum();
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let denom = n * sxx - sx * sx;
    let slope = (n * sxy - sx * sy) / denom;
    let intercept = (sy - slope * sx) / n;
    (intercept, slope)
}

/// Slope of log(y) against log(x); ignores non-positive samples.
pub fn log_log_slope(x: &[f64], y: &[f64]) -> (f64, f64) {
    let pairs: Vec<(f64, f64)> = x
        .iter()
        .zip(y)
        .filter(|(a, b)| **a > 0.0 && **b > 0.0)
        .map(|(a, b)| (a.ln(), b.ln()))
        .collect();
    let lx: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let ly: Vec<f64> = pairs.iter().map(|p| p.1).collect();
    let (intercept, slope) = linear_fit(&lx, &ly);
    (intercept.exp(), slope)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_power_law() {
        let x: Vec<f64> = (1..=6).map(|i| 10f64.powi(-i)).collect();
        let y: Vec<f64> = x.iter().map(|v| 3.0 * v.powf(0.25)).collect();
        let (pref, slope) = log_log_slope(&x, &y);
        assert!((slope - 0.25).abs() < 1e-12);
        assert!((pref - 3.0).abs() < 1e-10);
    }
}
