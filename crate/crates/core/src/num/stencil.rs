//! Finite-difference weights on arbitrary nodes (Fornberg's algorithm) and
//! high-order quadrature weights for smooth functions sampled on a
//! non-uniform grid.

use crate::num::quad;

/// Fornberg weights: coefficients `w` such that
/// `f^(m)(x0) ~ sum_i w[i] f(x[i])` for the given nodes.
///
/// Exact for polynomials of degree `x.len() - 1`.
pub fn fd_weights(x: &[f64], x0: f64, m: usize) -> Vec<f64> {
    let n = x.len();
    assert!(m < n, "need more nodes than the derivative order");
    // c[k][i]: weight of node i for derivative order k.
    let mut c = vec![vec![0.0; n]; m + 1];
    let mut c1 = 1.0;
    let mut c4 = x[0] - x0;
    c[0][0] = 1.0;
    for i in 1..n {
        let mn = i.min(m);
        let mut c2 = 1.0;
        let c5 = c4;
        c4 = x[i] - x0;
        for j in 0..i {
            let c3 = x[i] - x[j];
            c2 *= c3;
            if j == i - 1 {
                for k in (1..=mn).rev() {
                    c[k][i] = c1 * (k as f64 * c[k - 1][i - 1] - c5 * c[k][i - 1]) / c2;
                }
                c[0][i] = -c1 * c5 * c[0][i - 1] / c2;
            }
            for k in (1..=mn).rev() {
                c[k][j] = (c4 * c[k][j] - k as f64 * c[k - 1][j]) / c3;
            }
            c[0][j] = c4 * c[0][j] / c3;
        }
        c1 = c2;
    }
    c.swap_remove(m)
}

/// Index window of `width` nodes around position `i`, clipped to the grid.
pub fn window(n: usize, i: usize, width: usize) -> std::ops::Range<usize> {
    let half = width / 2;
    let start = i.saturating_sub(half).min(n.saturating_sub(width));
    start..(start + width).min(n)
}

/// Quadrature weights for `integral f dx ~ sum_i w[i] f(x[i])` on a smooth
/// non-uniform grid. Each cell is integrated with the degree-(width-1)
/// interpolant through the surrounding `width` nodes, so the rule is
/// high-order as long as the grid varies smoothly.
pub fn quad_weights(x: &[f64], width: usize) -> Vec<f64> {
    let n = x.len();
    assert!(n >= width && width >= 2);
    let mut w = vec![0.0; n];
    let rule = quad::gauss_legendre(8);
    for cell in 0..n - 1 {
        let win = window(n, cell, width);
        let nodes = &x[win.clone()];
        let (a, b) = (x[cell], x[cell + 1]);
        let (mid, half) = (0.5 * (a + b), 0.5 * (b - a));
        // Integrate each Lagrange basis polynomial over the cell.
        for (g, gw) in rule.0.iter().zip(rule.1.iter()) {
            let xq = mid + half * g;
            let l = lagrange_basis(nodes, xq);
            for (k, lv) in l.iter().enumerate() {
                w[win.start + k] += gw * half * lv;
            }
        }
    }
    w
}

fn lagrange_basis(nodes: &[f64], xq: f64) -> Vec<f64> {
    let n = nodes.len();
    let mut out = vec![1.0; n];
    for (i, v) in out.iter_mut().enumerate() {
        for j in 0..n {
            if j != i {
                *v *= (xq - nodes[j]) / (nodes[i] - nodes[j]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_reproduce_uniform_central_second_derivative() {
        let w = fd_weights(&[-1.0, 0.0, 1.0], 0.0, 2);
        assert!((w[0] - 1.0).abs() < 1e-13);
        assert!((w[1] + 2.0).abs() < 1e-13);
        assert!((w[2] - 1.0).abs() < 1e-13);
    }

    #[test]
    fn nonuniform_derivative_of_smooth_function() {
        // Geometric grid, first and second derivative of exp at an interior node.
        let x: Vec<f64> = (0..9).map(|i| 0.1 * 1.25f64.powi(i)).collect();
        let f: Vec<f64> = x.iter().map(|&v| v.exp()).collect();
        for m in [1usize, 2] {
            let w = fd_weights(&x, x[4], m);
            let d: f64 = w.iter().zip(&f).map(|(w, f)| w * f).sum();
            assert!((d - x[4].exp()).abs() < 1e-8, "order {m}: {d}");
        }
    }

    #[test]
    fn quadrature_on_stretched_grid() {
        // integral of exp(-x) over [0, 12] on an exponentially stretched grid.
        let n = 240;
        let x: Vec<f64> = (0..n)
            .map(|i| {
                let s = i as f64 / (n - 1) as f64;
                12.0 * ((3.0 * s).exp() - 1.0) / (3.0f64.exp() - 1.0)
            })
            .collect();
        let w = quad_weights(&x, 7);
        let v: f64 = w.iter().zip(&x).map(|(w, x)| w * (-x).exp()).sum();
        let exact = 1.0 - (-12.0f64).exp();
        assert!((v - exact).abs() < 1e-10, "got {v}");
    }
}
