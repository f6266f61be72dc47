use num_complex::Complex64;
use tollmien::num::winding::Rect;
use tollmien::orrsommerfeld::locate_eigenvalue;
use tollmien::profile::ShearProfile;

fn main() {
    let p = ShearProfile::exponential(1.0);
    for nu in [1e-4f64, 6e-5, 4e-5, 3e-5, 2e-5, 1.5e-5] {
        let s = nu.powf(0.25);
        let mut found = false;
        for at in [1.6, 2.0, 2.4, 2.8, 3.2] {
            let alpha = at * s;
            let rect = Rect { re: (1.5 * s, (3.5 * s).min(0.95)), im: (1e-3 * s, 0.6 * s) };
            if let Ok(Some(pt)) = locate_eigenvalue(&p, alpha, nu, rect) {
                if pt.c.im > 0.0 {
                    println!("nu={nu:.1e} at={at}: UNSTABLE c~={:.3}+{:.4}i", pt.c_tilde().re, pt.c_tilde().im);
                    found = true;
                    break;
                }
            }
        }
        if !found { println!("nu={nu:.1e}: stable (searched at=1.6..3.2)"); }
    }
}
