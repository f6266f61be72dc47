//! Banded complex linear systems with partial pivoting.
//!
//! Row storage is widened by `kl` extra superdiagonals so pivoting-induced
//! fill stays inside the band (the classic LAPACK `gbtrf` layout, row major).

use crate::error::{Error, Result};
use num_complex::Complex64;

#[derive(Debug, Clone)]
pub struct Banded {
    pub n: usize,
    pub kl: usize,
    pub ku: usize,
    /// Effective superdiagonal width including pivot fill.
    kw: usize,
    /// Row i holds columns [i - kl, i + kw], width kl + kw + 1.
    data: Vec<Complex64>,
}

impl Banded {
    pub fn new(n: usize, kl: usize, ku: usize) -> Self {
        let kw = ku + kl;
        Banded { n, kl, ku, kw, data: vec![Complex64::new(0.0, 0.0); n * (kl + kw + 1)] }
    }

    #[inline]
    fn idx(&self, i: usize, j: usize) -> usize {
        debug_assert!(j + self.kl >= i && j <= i + self.kw, "({i},{j}) outside band");
        i * (self.kl + self.kw + 1) + (j + self.kl - i)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        let k = self.idx(i, j);
        self.data[k] = v;
    }

    #[inline]
    pub fn add(&mut self, i: usize, j: usize, v: Complex64) {
        let k = self.idx(i, j);
        self.data[k] += v;
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        if j + self.kl < i || j > i + self.kw {
            return Complex64::new(0.0, 0.0);
        }
        self.data[self.idx(i, j)]
    }

    /// y = A x (uses only the declared band, valid before factorization).
    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut y = vec![Complex64::new(0.0, 0.0); self.n];
        for i in 0..self.n {
            let j0 = i.saturating_sub(self.kl);
            let j1 = (i + self.ku).min(self.n - 1);
            let mut acc = Complex64::new(0.0, 0.0);
            for j in j0..=j1 {
                acc += self.data[self.idx(i, j)] * x[j];
            }
            y[i] = acc;
        }
        y
    }

    /// LU factorization with partial pivoting; consumes the matrix.
    pub fn factor(mut self) -> Result<BandedLu> {
        let n = self.n;
        let mut ipiv = vec![0usize; n];
        let mut factors: Vec<(usize, usize, Complex64)> = Vec::with_capacity(n * self.kl);
        for k in 0..n {
            // Pivot among rows k..k+kl.
            let imax = (k..=(k + self.kl).min(n - 1))
                .max_by(|&a, &b| {
                    self.get(a, k).norm().partial_cmp(&self.get(b, k).norm()).unwrap()
                })
                .unwrap();
            ipiv[k] = imax;
            if imax != k {
                self.swap_rows_from(k, imax);
            }
            let piv = self.get(k, k);
            if piv.norm() == 0.0 {
                return Err(Error::invalid(format!("banded LU: zero pivot at row {k}")));
            }
            let jmax = (k + self.kw).min(n - 1);
            for i in k + 1..=(k + self.kl).min(n - 1) {
                let f = self.get(i, k) / piv;
                if f.norm() != 0.0 {
                    for j in k..=jmax {
                        let v = self.get(k, j) * f;
                        let idx = self.idx(i, j);
                        self.data[idx] -= v;
                    }
                }
                self.set(i, k, Complex64::new(0.0, 0.0));
                factors.push((i, k, f));
            }
        }
        Ok(BandedLu { upper: self, ipiv, factors })
    }

    fn swap_rows_from(&mut self, k: usize, i: usize) {
        // Swap the stored segments of rows k and i for columns >= k.
        let jmax = (k + self.kw).min(self.n - 1);
        for j in k..=jmax {
            let a = self.get(k, j);
            let b = self.get(i, j);
            self.set(k, j, b);
            self.set(i, j, a);
        }
    }
}

#[derive(Debug, Clone)]
pub struct BandedLu {
    upper: Banded,
    ipiv: Vec<usize>,
    factors: Vec<(usize, usize, Complex64)>,
}

impl BandedLu {
    pub fn solve(&self, b: &[Complex64]) -> Vec<Complex64> {
        let n = self.upper.n;
        let mut x = b.to_vec();
        // Replay permutations and eliminations in order.
        let mut fi = 0;
        for k in 0..n {
            let p = self.ipiv[k];
            if p != k {
                x.swap(k, p);
            }
            while fi < self.factors.len() && self.factors[fi].1 == k {
                let (i, _, f) = self.factors[fi];
                let upd = f * x[k];
                x[i] -= upd;
                fi += 1;
            }
        }
        // Back substitution on U.
        for k in (0..n).rev() {
            let jmax = (k + self.upper.kw).min(n - 1);
            let mut acc = x[k];
            for j in k + 1..=jmax {
                acc -= self.upper.get(k, j) * x[j];
            }
            x[k] = acc / self.upper.get(k, k);
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn solves_random_banded_system() {
        // Deterministic pseudo-random band, verified through the residual.
        let n = 60;
        let (kl, ku) = (3, 2);
        let mut a = Banded::new(n, kl, ku);
        let mut s = 1234567u64;
        let mut rnd = || {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((s >> 33) as f64) / (u32::MAX as f64) - 0.5
        };
        for i in 0..n {
            for j in i.saturating_sub(kl)..=(i + ku).min(n - 1) {
                a.set(i, j, c(rnd(), rnd()));
            }
            a.add(i, i, c(4.0, 0.0));
        }
        let x_true: Vec<Complex64> = (0..n).map(|i| c(i as f64 / 7.0, -(i as f64) / 11.0)).collect();
        let b = a.matvec(&x_true);
        let lu = a.clone().factor().unwrap();
        let x = lu.solve(&b);
        let err: f64 = x.iter().zip(&x_true).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        assert!(err < 1e-11, "max err {err}");
    }

    #[test]
    fn pivoting_handles_small_leading_entry() {
        let n = 4;
        let mut a = Banded::new(n, 1, 1);
        a.set(0, 0, c(1e-300, 0.0));
        a.set(0, 1, c(1.0, 0.0));
        a.set(1, 0, c(1.0, 0.0));
        a.set(1, 1, c(1.0, 0.0));
        a.set(1, 2, c(0.5, 0.0));
        a.set(2, 1, c(0.5, 0.0));
        a.set(2, 2, c(2.0, 0.0));
        a.set(2, 3, c(1.0, 0.0));
        a.set(3, 2, c(1.0, 0.0));
        a.set(3, 3, c(3.0, 0.0));
        let b: Vec<Complex64> = vec![c(1.0, 0.0); n];
        let orig = a.clone();
        let x = a.factor().unwrap().solve(&b);
        let r = orig.matvec(&x);
        for (ri, bi) in r.iter().zip(&b) {
            assert!((ri - bi).norm() < 1e-12);
        }
    }
}
