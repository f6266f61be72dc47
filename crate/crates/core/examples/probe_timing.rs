use num_complex::Complex64;
use tollmien::orrsommerfeld::Dispersion;
use tollmien::profile::ShearProfile;
use std::time::Instant;

fn main() {
    for (u, nu) in [(1.0f64, 1e-5f64), (1.0, 1e-6), (1.0, 1e-7), (20.0, 1e-6), (20.0, 1e-7)] {
        let p = ShearProfile::exponential(u);
        let ns = nu / u;
        let alpha = 2.4 * ns.powf(0.25);
        let c = Complex64::new(2.3, 0.05) * u * ns.powf(0.25);
        let disp = Dispersion::new(&p, alpha, nu).unwrap();
        let t0 = Instant::now();
        let mut plan = None;
        let _ = disp.eval(c, &mut plan).unwrap();
        let t_adapt = t0.elapsed();
        let nsteps = plan.as_ref().map(|v| v.len()).unwrap_or(0);
        let t0 = Instant::now();
        for _ in 0..3 { let _ = disp.eval(c, &mut plan).unwrap(); }
        println!("u={u} nu={nu:.0e} (nu*={ns:.1e}): steps={nsteps} adaptive={t_adapt:?} replay={:?}", t0.elapsed()/3);
    }
}
