use num_complex::Complex64;
use tollmien::num::winding::Rect;
use tollmien::orrsommerfeld::{find_eigenvalue, locate_eigenvalue};
use tollmien::profile::ShearProfile;

fn main() {
    let p = ShearProfile::exponential(1.0);
    for nu in [1e-4f64, 1e-5, 1e-6] {
        let s = nu.powf(0.25);
        let rect = Rect { re: (0.05 * s, (3.0 * s).min(0.9)), im: (1e-3 * s, 1.5 * s) };
        let mut seed: Option<Complex64> = None;
        print!("nu={nu:.0e}:");
        for i in 0..16 {
            let at = 0.8 + 0.4 * i as f64;
            let alpha = at * s;
            let pt = match seed {
                Some(g) => find_eigenvalue(&p, alpha, nu, g).unwrap(),
                None => locate_eigenvalue(&p, alpha, nu, rect).unwrap(),
            };
            match pt {
                Some(pt) => {
                    seed = Some(pt.c);
                    let lt = pt.lambda_tilde();
                    print!(" [{at:.1}: c~={:.3}+{:.3}i L={:.4}]", pt.c_tilde().re, pt.c_tilde().im, lt.re);
                }
                None => { print!(" [{at:.1}: -]"); }
            }
        }
        println!();
    }
}
