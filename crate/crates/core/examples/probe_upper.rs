use num_complex::Complex64;
use tollmien::orrsommerfeld::{find_eigenvalue, find_unstable};
use tollmien::profile::ShearProfile;

fn main() {
    let p = ShearProfile::exponential(20.0);
    let nu = 3.162e-6f64;
    let ns = nu / 20.0;
    let a_scale = ns.powf(0.25);
    let mut c = match find_unstable(&p, 2.6 * a_scale, nu, None) {
        Ok(Some(pt)) => { println!("center: c={:.5}+{:.5}i", pt.c.re, pt.c.im); pt.c }
        other => { println!("no center: {other:?}"); return; }
    };
    let mut a = 2.6 * a_scale;
    for k in 0..24 {
        a *= 1.18;
        match find_eigenvalue(&p, a, nu, c) {
            Ok(Some(pt)) => { println!("k={k} a~={:.3}: Im c = {:+.6} (re {:.4})", a / a_scale, pt.c.im, pt.c.re); c = pt.c; }
            Ok(None) => { println!("k={k} a~={:.3}: LOST from seed {c:.5}", a / a_scale);
                // try tighter steps
                let mut aa = a / 1.18;
                let mut cc = c;
                for _ in 0..6 {
                    aa *= 1.03;
                    match find_eigenvalue(&p, aa, nu, cc) {
                        Ok(Some(pt)) => { println!("   fine a~={:.3}: Im c={:+.6} re={:.4} res={:.1e}", aa/a_scale, pt.c.im, pt.c.re, pt.residual); cc = pt.c; }
                        o => { println!("   fine a~={:.3}: {o:?}", aa/a_scale); break; }
                    }
                }
                break; }
            Err(e) => { println!("k={k}: ERR {e}"); break; }
        }
    }
}
