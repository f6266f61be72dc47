//! Natural cubic splines for table-based profiles.

#[derive(Debug, Clone)]
pub struct CubicSpline {
    x: Vec<f64>,
    y: Vec<f64>,
    /// Second derivatives at the knots.
    m: Vec<f64>,
}

impl CubicSpline {
    pub fn new(x: Vec<f64>, y: Vec<f64>) -> Self {
        assert_eq!(x.len(), y.len());
        assert!(x.len() >= 3, "spline needs at least 3 samples");
        assert!(x.windows(2).all(|w| w[1] > w[0]), "knots must be increasing");
        let n = x.len();
        // Natural spline: tridiagonal system for the knot second derivatives.
        let mut a = vec![0.0; n];
        let mut b = vec![0.0; n];
        let mut c = vec![0.0; n];
        let mut d = vec![0.0; n];
        b[0] = 1.0;
        b[n - 1] = 1.0;
        for i in 1..n - 1 {
            let h0 = x[i] - x[i - 1];
            let h1 = x[i + 1] - x[i];
            a[i] = h0 / 6.0;
            b[i] = (h0 + h1) / 3.0;
            c[i] = h1 / 6.0;
            d[i] = (y[i + 1] - y[i]) / h1 - (y[i] - y[i - 1]) / h0;
        }
        let m = solve_tridiag(&a, &b, &c, &d);
        CubicSpline { x, y, m }
    }

    fn segment(&self, xq: f64) -> usize {
        match self.x.binary_search_by(|v| v.partial_cmp(&xq).unwrap()) {
            Ok(i) => i.min(self.x.len() - 2),
            Err(i) => i.saturating_sub(1).min(self.x.len() - 2),
        }
    }

    /// Value and first two derivatives, clamped extrapolation beyond the knots.
    pub fn eval(&self, xq: f64) -> (f64, f64, f64) {
        let i = self.segment(xq.clamp(self.x[0], *self.x.last().unwrap()));
        let h = self.x[i + 1] - self.x[i];
        let t = (xq - self.x[i]) / h;
        let s = 1.0 - t;
        let v = s * self.y[i]
            + t * self.y[i + 1]
            + h * h / 6.0 * ((s * s * s - s) * self.m[i] + (t * t * t - t) * self.m[i + 1]);
        let d = (self.y[i + 1] - self.y[i]) / h
            + h / 6.0 * ((3.0 * t * t - 1.0) * self.m[i + 1] - (3.0 * s * s - 1.0) * self.m[i]);
        let dd = s * self.m[i] + t * self.m[i + 1];
        (v, d, dd)
    }

    pub fn domain(&self) -> (f64, f64) {
        (self.x[0], *self.x.last().unwrap())
    }
}

fn solve_tridiag(a: &[f64], b: &[f64], c: &[f64], d: &[f64]) -> Vec<f64> {
    let n = b.len();
    let mut cp = vec![0.0; n];
    let mut dp = vec![0.0; n];
    cp[0] = c[0] / b[0];
    dp[0] = d[0] / b[0];
    for i in 1..n {
        let denom = b[i] - a[i] * cp[i - 1];
        cp[i] = c[i] / denom;
        dp[i] = (d[i] - a[i] * dp[i - 1]) / denom;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = dp[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = dp[i] - cp[i] * x[i + 1];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interpolates_smooth_function() {
        let x: Vec<f64> = (0..200).map(|i| i as f64 * 0.05).collect();
        let y: Vec<f64> = x.iter().map(|v| 1.0 - (-v).exp()).collect();
        let sp = CubicSpline::new(x, y);
        let (v, d, dd) = sp.eval(3.21);
        assert!((v - (1.0 - (-3.21f64).exp())).abs() < 1e-7);
        assert!((d - (-3.21f64).exp()).abs() < 1e-5);
        assert!((dd + (-3.21f64).exp()).abs() < 1e-3);
    }
}
