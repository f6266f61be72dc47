use tollmien::{profile::ShearProfile, rayleigh};
use num_complex::Complex64;
fn main() {
    let p = ShearProfile::inflection(1.0, 2.0, 1.0);
    for alpha in [0.4, 0.6, 0.8, 1.0] {
        if let Ok(Some(m)) = rayleigh::find_rayleigh_mode(&p, alpha, Complex64::new(0.45, 0.1)) {
            println!("alpha={alpha}: c = {:.8} + {:.8}i  miss={:.2e}", m.c.re, m.c.im, m.miss_residual);
        } else {
            println!("alpha={alpha}: none");
        }
    }
}
