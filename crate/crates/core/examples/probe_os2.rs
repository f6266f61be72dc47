use num_complex::Complex64;
use tollmien::orrsommerfeld::{Dispersion, ModeWorkspace};
use tollmien::orrsommerfeld::modes::resolvent_solve;
use tollmien::profile::ShearProfile;

fn main() {
    let p = ShearProfile::exponential(1.0);
    let nu = 1e-4f64;
    let s = nu.powf(0.25);
    let at = 1.5;
    let alpha = at * s;
    let disp = Dispersion::new(&p, alpha, nu).unwrap();
    let ws = ModeWorkspace::new(&p, alpha, nu).unwrap();
    let f: Vec<Complex64> = ws.grid.y.iter().map(|&y| Complex64::new((y/(1.0+y))*(-0.5*y).exp(), 0.0)).collect();
    println!("grid size {}", ws.grid.len());
    // scan c~ on a grid, both halves of the plane
    for im in [-0.15f64, -0.05, -0.02, 0.02, 0.05, 0.15] {
        let mut row = String::new();
        for re in [0.1f64, 0.2, 0.3, 0.4, 0.5, 0.6, 0.8] {
            let c = Complex64::new(re * s, im * s);
            let mut plan = None;
            let d = disp.eval(c, &mut plan).unwrap();
            let gain = match resolvent_solve(&ws, alpha, c, &f, None) {
                Ok((psi, _)) => psi.iter().map(|v| v.norm()).fold(0.0, f64::max),
                Err(_) => f64::NAN,
            };
            row.push_str(&format!(" ({re:.1},{im:+.2}): lnD={:7.2} gain={:9.2e}", d.ln_abs(), gain));
        }
        println!("{row}");
    }
}
