//! Crank-Nicolson evolution of the base shear by the half-line heat
//! equation, with U(t, 0) = 0 and U -> U_+ at the far boundary.

use crate::error::Result;
use crate::grid::stretched_nodes;
use crate::num::stencil;
use crate::profile::ShearProfile;

/// Grid and step policy are functions of the profile only, so that evolving
/// by t1 then t2 reuses the nodes and step size of the single t1+t2 run and
/// the discrete semigroup property holds to rounding.
pub(super) fn crank_nicolson_evolve(
    profile: &ShearProfile,
    nu: f64,
    t: f64,
) -> Result<ShearProfile> {
    // 16 decay lengths keep the far Dirichlet clamp below ~1e-7.
    let rate = profile.decay_rate().min(10.0).max(0.05);
    let y_max = (16.0 / rate).max(12.0 * (nu * t).sqrt() + 5.0);
    let y = stretched_nodes(0.01, 0.25, y_max, 16.0);
    let n = y.len();

    // 3-point Laplacian rows on the stretched nodes.
    let lap: Vec<(usize, Vec<f64>)> = (1..n - 1)
        .map(|i| (i - 1, stencil::fd_weights(&y[i - 1..=i + 1], y[i], 2)))
        .collect();

    let mut u: Vec<f64> = y.iter().map(|&v| profile.eval(v).0).collect();
    u[0] = 0.0;
    u[n - 1] = profile.u_plus();

    let dt = 0.01f64.min(t / 16.0);
    let steps = (t / dt).round().max(1.0) as usize;
    let dt = t / steps as f64;

    // CN: (I - nu dt/2 L) u_new = (I + nu dt/2 L) u_old, Dirichlet ends.
    let mut sub = vec![0.0; n];
    let mut diag = vec![1.0; n];
    let mut sup = vec![0.0; n];
    for (i, (start, w)) in lap.iter().enumerate() {
        debug_assert_eq!(*start, i);
        let s = 0.5 * nu * dt;
        sub[i + 1] = -s * w[0];
        diag[i + 1] = 1.0 - s * w[1];
        sup[i + 1] = -s * w[2];
    }
    let mut rhs = vec![0.0; n];
    for _ in 0..steps {
        rhs[0] = 0.0;
        rhs[n - 1] = profile.u_plus();
        for (i, (_, w)) in lap.iter().enumerate() {
            let s = 0.5 * nu * dt;
            rhs[i + 1] =
                u[i + 1] + s * (w[0] * u[i] + w[1] * u[i + 1] + w[2] * u[i + 2]);
        }
        u = solve_tridiag(&sub, &diag, &sup, &rhs);
    }

    let samples: Vec<(f64, f64)> = y.iter().copied().zip(u).collect();
    Ok(ShearProfile::from_samples(
        &format!("{}+heat", profile.label()),
        profile.u_plus(),
        profile.decay_rate(),
        &samples,
    ))
}

fn solve_tridiag(sub: &[f64], diag: &[f64], sup: &[f64], rhs: &[f64]) -> Vec<f64> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    c[0] = sup[0] / diag[0];
    d[0] = rhs[0] / diag[0];
    for i in 1..n {
        let m = diag[i] - sub[i] * c[i - 1];
        c[i] = sup[i] / m;
        d[i] = (rhs[i] - sub[i] * d[i - 1]) / m;
    }
    let mut x = vec![0.0; n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    x
}
