use num_complex::Complex64;
use tollmien::orrsommerfeld::{locate_eigenvalue, Dispersion};
use tollmien::num::winding::{winding_number, Rect};
use tollmien::profile::ShearProfile;

fn main() {
    let p = ShearProfile::exponential(1.0);
    for nu in [1e-4f64, 1e-5] {
        let s = nu.powf(0.25);
        for at in [0.8, 1.2, 1.6, 2.0, 2.6, 3.2] {
            let alpha = at * s;
            let disp = Dispersion::new(&p, alpha, nu).unwrap();
            let rect = Rect { re: (0.02 * s, 0.95 * s), im: (1e-4 * s, 0.6 * s) };
            let mut plan = None;
            let w = winding_number(|c| disp.eval(c, &mut plan), &rect, 24, 11);
            match w {
                Ok(w) => {
                    print!("nu={nu:.0e} at={at}: winding={w}");
                    if w > 0 {
                        if let Ok(Some(pt)) = locate_eigenvalue(&p, alpha, nu, rect) {
                            print!("  c~ = {:.5}+{:.5}i", pt.c.re / s, pt.c.im / s);
                        }
                    }
                    println!();
                }
                Err(e) => println!("nu={nu:.0e} at={at}: winding error {e}"),
            }
        }
    }
}
