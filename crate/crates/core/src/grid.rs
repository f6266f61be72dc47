//! Exponentially stretched grids and finite-difference operators on them.
//!
//! The mode solvers need three length scales at once (critical layer,
//! shear-layer thickness, long-wave decay), so nodes follow
//! `dy/ds = y0 + sigma * y` with uniform s: spacing ~ y0/pps at the wall and
//! geometric growth outward. Derivative stencils come from Fornberg weights
//! on sliding windows, quadrature weights from local polynomial integration.

use crate::num::stencil;
use num_complex::Complex64;

/// Nodes on [0, y_max] with near-wall spacing `y0 / pps` growing at relative
/// rate `sigma` per unit y; `pps` is points per local scale.
pub fn stretched_nodes(y0: f64, sigma: f64, y_max: f64, pps: f64) -> Vec<f64> {
    assert!(y0 > 0.0 && y_max > 0.0 && pps > 1.0);
    if sigma <= 0.0 {
        let n = ((y_max / y0) * pps).ceil() as usize + 1;
        return (0..n).map(|i| y_max * i as f64 / (n - 1) as f64).collect();
    }
    let s_end = (1.0 + sigma * y_max / y0).ln() / sigma;
    let n = (s_end * pps).ceil() as usize + 1;
    (0..n)
        .map(|i| {
            let s = s_end * i as f64 / (n - 1) as f64;
            (y0 / sigma) * ((sigma * s).exp_m1())
        })
        .collect()
}

/// Differentiation and quadrature tables over a fixed set of nodes.
#[derive(Debug, Clone)]
pub struct Grid {
    pub y: Vec<f64>,
    width: usize,
    /// Per node: stencil start index and weights for d/dy and d2/dy2.
    w1: Vec<(usize, Vec<f64>)>,
    w2: Vec<(usize, Vec<f64>)>,
    /// Quadrature weights for integrals over [0, y_max].
    pub quad: Vec<f64>,
}

impl Grid {
    /// Build tables with `width`-point stencils (width >= 5, odd preferred).
    pub fn new(y: Vec<f64>, width: usize) -> Self {
        let n = y.len();
        assert!(n >= width + 1);
        let mut w1 = Vec::with_capacity(n);
        let mut w2 = Vec::with_capacity(n);
        for i in 0..n {
            let win = stencil::window(n, i, width);
            let nodes = &y[win.clone()];
            w1.push((win.start, stencil::fd_weights(nodes, y[i], 1)));
            w2.push((win.start, stencil::fd_weights(nodes, y[i], 2)));
        }
        let quad = stencil::quad_weights(&y, width.min(7));
        Grid { y, width, w1, w2, quad }
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn stencil1(&self, i: usize) -> (usize, &[f64]) {
        (self.w1[i].0, &self.w1[i].1)
    }

    pub fn stencil2(&self, i: usize) -> (usize, &[f64]) {
        (self.w2[i].0, &self.w2[i].1)
    }

    pub fn deriv1(&self, f: &[Complex64]) -> Vec<Complex64> {
        self.apply(&self.w1, f)
    }

    pub fn deriv2(&self, f: &[Complex64]) -> Vec<Complex64> {
        self.apply(&self.w2, f)
    }

    fn apply(&self, w: &[(usize, Vec<f64>)], f: &[Complex64]) -> Vec<Complex64> {
        w.iter()
            .map(|(start, wts)| {
                wts.iter().enumerate().map(|(k, c)| f[start + k] * *c).sum()
            })
            .collect()
    }

    /// Integral of a complex grid function.
    pub fn integrate(&self, f: &[Complex64]) -> Complex64 {
        f.iter().zip(&self.quad).map(|(v, w)| v * *w).sum()
    }

    /// Nearest node index at or below y (for window lookups).
    pub fn locate(&self, yq: f64) -> usize {
        match self.y.binary_search_by(|v| v.partial_cmp(&yq).unwrap()) {
            Ok(i) => i,
            Err(i) => i.saturating_sub(1),
        }
    }

    /// Polynomial interpolation of a grid function at arbitrary y (uses the
    /// local stencil window, so accuracy matches the derivative operators).
    pub fn interpolate(&self, f: &[Complex64], yq: f64) -> Complex64 {
        let i = self.locate(yq).min(self.len() - 1);
        let win = stencil::window(self.len(), i, self.width);
        let w = stencil::fd_weights(&self.y[win.clone()], yq, 0);
        w.iter().zip(win).map(|(c, k)| f[k] * *c).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_cover_range_with_fine_wall_spacing() {
        let y = stretched_nodes(0.01, 0.5, 300.0, 20.0);
        assert_eq!(y[0], 0.0);
        assert!((y.last().unwrap() - 300.0).abs() < 1e-9);
        assert!(y[1] < 0.01 / 15.0);
        // Spacing grows smoothly.
        for w in y.windows(3) {
            let r = (w[2] - w[1]) / (w[1] - w[0]);
            assert!(r > 0.9 && r < 1.2);
        }
    }

    #[test]
    fn derivatives_and_quadrature_are_high_order() {
        let y = stretched_nodes(0.05, 0.4, 20.0, 25.0);
        let g = Grid::new(y, 7);
        let f: Vec<Complex64> =
            g.y.iter().map(|&v| Complex64::new((-v).exp() * (2.0 * v).sin(), 0.0)).collect();
        let d1 = g.deriv1(&f);
        let d2 = g.deriv2(&f);
        let mut e1 = 0.0f64;
        let mut e2 = 0.0f64;
        for (i, &v) in g.y.iter().enumerate() {
            let ex = (-v).exp();
            let d1_exact = ex * (2.0 * (2.0 * v).cos() - (2.0 * v).sin());
            let d2_exact = ex * ((2.0 * v).sin() * (1.0 - 4.0) - 4.0 * (2.0 * v).cos());
            e1 = e1.max((d1[i].re - d1_exact).abs());
            e2 = e2.max((d2[i].re - d2_exact).abs());
        }
        assert!(e1 < 1e-8, "d1 error {e1}");
        assert!(e2 < 1e-6, "d2 error {e2}");
        let integral = g.integrate(&f).re;
        // integral_0^20 e^{-y} sin 2y dy = 2/5 - e^{-20}(sin40 + 2 cos40)/5.
        let exact = 0.4 - (-20.0f64).exp() * ((40.0f64).sin() + 2.0 * (40.0f64).cos()) / 5.0;
        assert!((integral - exact).abs() < 1e-10);
    }

    #[test]
    fn interpolation_matches_function_between_nodes() {
        let y = stretched_nodes(0.05, 0.4, 10.0, 20.0);
        let g = Grid::new(y, 7);
        let f: Vec<Complex64> = g.y.iter().map(|&v| Complex64::new((0.7 * v).cos(), v)).collect();
        for yq in [0.013, 1.37, 7.77] {
            let v = g.interpolate(&f, yq);
            assert!((v.re - (0.7 * yq).cos()).abs() < 1e-9);
            assert!((v.im - yq).abs() < 1e-9);
        }
    }
}
