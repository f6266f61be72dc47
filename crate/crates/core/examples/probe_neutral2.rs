use num_complex::Complex64;
use tollmien::orrsommerfeld::{find_eigenvalue, find_unstable};
use tollmien::profile::ShearProfile;

fn main() {
    let p = ShearProfile::exponential(20.0);
    let nu = 1e-4f64;
    let ns = nu / 20.0;
    let a_scale = ns.powf(0.25);
    // seed scan like neutral_at
    let mut seed: Option<Complex64> = None;
    for i in [4usize, 2, 6, 0, 8] {
        let at = 1.2 + 0.35 * i as f64;
        let a = at * a_scale;
        match find_unstable(&p, a, nu, seed) {
            Ok(Some(pt)) => { println!("at={at:.2}: c={:.4}+{:.5}i  g={:.3e}", pt.c.re, pt.c.im, a*pt.c.im); seed = Some(pt.c); }
            Ok(None) => println!("at={at:.2}: none"),
            Err(e) => println!("at={at:.2}: ERR {e}"),
        }
    }
    // walk the lower flank
    if let Some(c0) = seed {
        let mut c = c0;
        let mut a = 2.6 * a_scale;
        for _ in 0..14 {
            a /= 1.35;
            match find_eigenvalue(&p, a, nu, c) {
                Ok(Some(pt)) => { println!("walk a~={:.3}: Im c = {:+.5}", a / a_scale, pt.c.im); c = pt.c; }
                Ok(None) => { println!("walk a~={:.3}: LOST", a / a_scale); break; }
                Err(e) => { println!("walk a~={:.3}: ERR {e}", a / a_scale); break; }
            }
        }
    }
}
