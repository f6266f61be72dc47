use num_complex::Complex64;
use tollmien::num::winding::{winding_number, Rect};
use tollmien::orrsommerfeld::Dispersion;
use tollmien::profile::ShearProfile;

fn main() {
    let p = ShearProfile::exponential(1.0);
    for nu in [1e-5f64, 1e-6] {
        let s = nu.powf(0.25);
        for at in [3.0, 5.0, 7.0, 9.0, 12.0, 15.0] {
            let alpha = at * s;
            if alpha > 0.9 { continue; }
            let disp = Dispersion::new(&p, alpha, nu).unwrap();
            let rect = Rect { re: (0.05 * s, (3.0 * s).min(0.9)), im: (1e-3 * s, 1.5 * s) };
            let mut plan = None;
            match winding_number(|c| disp.eval(c, &mut plan), &rect, 32, 11) {
                Ok(w) => println!("nu={nu:.0e} at={at}: winding={w}"),
                Err(e) => println!("nu={nu:.0e} at={at}: err {e}"),
            }
        }
    }
}
