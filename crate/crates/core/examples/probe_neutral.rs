use tollmien::orrsommerfeld::{most_unstable, neutral_curves};
use tollmien::profile::ShearProfile;
use std::time::Instant;

fn main() {
    let p = ShearProfile::exponential(20.0);
    let nus: Vec<f64> = (0..5).map(|i| 1e-4 * 10f64.powf(-0.75 * i as f64)).collect();
    println!("nus = {nus:?}");
    let t0 = Instant::now();
    match neutral_curves(&p, &nus) {
        Ok(nc) => {
            for s in &nc.samples {
                println!("nu={:.3e}: a- = {:.6} a+ = {:.6}", s.nu, s.alpha_minus, s.alpha_plus);
            }
            println!("exponents: e- = {:.4} e+ = {:.4} (targets 0.25, 0.1667)", nc.fitted_exponents.0, nc.fitted_exponents.1);
            println!("prefactors: {:.4}, {:.4}", nc.fitted_prefactors.0, nc.fitted_prefactors.1);
        }
        Err(e) => println!("neutral failed: {e}"),
    }
    println!("neutral elapsed {:?}", t0.elapsed());
    let t0 = Instant::now();
    for nu in [1e-5f64, 1e-6, 1e-7] {
        let p1 = ShearProfile::exponential(1.0);
        match most_unstable(&p1, nu) {
            Ok(Some(pt)) => println!("u=1 nu={nu:.0e}: alpha0~={:.4} Re lambda~={:.5} c~={:.4}+{:.4}i",
                pt.alpha_tilde(), pt.lambda_tilde().re, pt.c_tilde().re, pt.c_tilde().im),
            Ok(None) => println!("u=1 nu={nu:.0e}: no band"),
            Err(e) => println!("u=1 nu={nu:.0e}: err {e}"),
        }
    }
    println!("most_unstable elapsed {:?}", t0.elapsed());
}
