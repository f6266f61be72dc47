use num_complex::Complex64;
use tollmien::num::muller::{muller, MullerOptions};
use tollmien::orrsommerfeld::Dispersion;
use tollmien::profile::ShearProfile;

fn main() {
    let p = ShearProfile::exponential(20.0);
    let nu = 3.162e-6f64;
    let ns = nu / 20.0;
    let a_scale = ns.powf(0.25);
    let a = 2.678 * a_scale;
    let seed = Complex64::new(1.04819, 0.10830);
    let disp = Dispersion::new(&p, a, nu).unwrap();
    // local landscape
    let mut plan = None;
    for dz in [0.0, 1e-3, -1e-3] {
        let c = seed + Complex64::new(dz, 0.0);
        let d = disp.eval(c, &mut plan).unwrap();
        println!("c={c:.5}: ln|D| = {:.4}, arg = {:+.4}", d.ln_abs(), d.arg());
    }
    // muller trace
    let mut plan2 = None;
    let mut iter = 0;
    let out = muller(
        |c| { iter += 1; let d = disp.eval(c, &mut plan2); if let Ok(v) = &d { if iter < 25 { println!("  it{iter}: c={c:.6} lnD={:.3}", v.ln_abs()); } } d },
        seed,
        &MullerOptions { tol_f: 1e-10, tol_x: 1e-12, max_iter: 28, spread: 1e-4 },
        |c| c.norm() < 20.0 && c.im.abs() > 1e-9,
    ).unwrap();
    println!("muller: converged={} root={:.6} frel={:.2e} iters={}", out.converged, out.root, out.f_abs_rel, out.iters);
}
