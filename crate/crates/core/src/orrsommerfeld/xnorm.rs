//! Best-constant fits against the three-scale weighted envelopes used as
//! numerical diagnostics for stream functions and vorticities.
//!
//! A function f sits in the stream-function class (order n, exponent p)
//! with constant C when, for every 0 <= j <= n and grid point y,
//!
//! ```text
//! |d^j f / dy^j| <= C max( nu^{j/4} e^{-C0 nu^{1/4} y},
//!                          e^{-C0 y},
//!                          nu^{-(j+p)/4} e^{-C0 y / nu^{1/4}} ).
//! ```
//!
//! The vorticity variant drops the outer term and shifts the critical
//! weight to nu^{-(j+1)/4}. On a finite grid the smallest such C is just
//! the sup of |d^j f| over the pointwise envelope.

use crate::grid::Grid;
use num_complex::Complex64;

fn derivatives(grid: &Grid, f: &[Complex64], n: usize) -> Vec<Vec<Complex64>> {
    let mut out = vec![f.to_vec()];
    for _ in 0..n {
        let next = grid.deriv1(out.last().unwrap());
        out.push(next);
    }
    out
}

/// Smallest C for the stream-function envelope with derivative order n,
/// critical exponent p, and decay rate c0.
pub fn xnorm_fit(grid: &Grid, f: &[Complex64], n: usize, p: i32, c0: f64, nu: f64) -> f64 {
    let derivs = derivatives(grid, f, n);
    let s = nu.powf(0.25);
    let mut best = 0.0f64;
    for (j, dj) in derivs.iter().enumerate() {
        let jf = j as f64;
        for (i, &y) in grid.y.iter().enumerate() {
            let outer = nu.powf(jf / 4.0) * (-c0 * s * y).exp();
            let middle = (-c0 * y).exp();
            let critical = nu.powf(-(jf + p as f64) / 4.0) * (-c0 * y / s).exp();
            let envelope = outer.max(middle).max(critical);
            best = best.max(dj[i].norm() / envelope);
        }
    }
    best
}

/// Smallest C for the vorticity envelope (no outer term, exponent j+1).
pub fn xnorm_omega_fit(grid: &Grid, f: &[Complex64], n: usize, c0: f64, nu: f64) -> f64 {
    let derivs = derivatives(grid, f, n);
    let s = nu.powf(0.25);
    let mut best = 0.0f64;
    for (j, dj) in derivs.iter().enumerate() {
        let jf = j as f64;
        for (i, &y) in grid.y.iter().enumerate() {
            let middle = (-c0 * y).exp();
            let critical = nu.powf(-(jf + 1.0) / 4.0) * (-c0 * y / s).exp();
            let envelope = middle.max(critical);
            best = best.max(dj[i].norm() / envelope);
        }
    }
    best
}
