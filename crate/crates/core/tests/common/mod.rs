#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rank3_frobenius::exactnum::{rat, ApproxComplex, BigRational, Moebius};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Composite Simpson rule on `[a, b]` with `n` (even) panels.
pub fn simpson(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for k in 1..n {
        let w = if k % 2 == 1 { 4.0 } else { 2.0 };
        s += w * f(a + k as f64 * h);
    }
    s * h / 3.0
}

/// Γ(1/n) = n ∫_0^∞ exp(−u^n) du, by quadrature. The integrand is below 1e-40 past u = 6.
pub fn gamma_reciprocal_quadrature(n: i32) -> f64 {
    n as f64 * simpson(|u| (-u.powi(n)).exp(), 0.0, 6.0, 40_000)
}

pub fn random_tau(r: &mut ChaCha8Rng, im_lo: f64, im_hi: f64) -> ApproxComplex {
    ApproxComplex::exact(r.gen_range(-0.5..0.5), r.gen_range(im_lo..im_hi))
}

pub fn random_unit_scaled(r: &mut ChaCha8Rng, lo: f64, hi: f64) -> ApproxComplex {
    let m = r.gen_range(lo..hi);
    let a = r.gen_range(0.0..std::f64::consts::TAU);
    ApproxComplex::exact(m * a.cos(), m * a.sin())
}

pub fn random_rational(r: &mut ChaCha8Rng, num: i64, den: i64) -> BigRational {
    rat(r.gen_range(-num..=num), r.gen_range(1..=den))
}

/// A product of 1 to `max_len` generators drawn from `S`, `T`, `T⁻¹`.
pub fn random_sl2_word(r: &mut ChaCha8Rng, max_len: usize) -> Moebius {
    let len = r.gen_range(1..=max_len);
    let mut m = Moebius::identity();
    for _ in 0..len {
        let g = match r.gen_range(0..3) {
            0 => Moebius::s(),
            1 => Moebius::t(),
            _ => Moebius::t_pow(-1),
        };
        m = &m * &g;
    }
    m
}

/// A rational matrix with small entries and nonzero determinant.
pub fn random_gl2(r: &mut ChaCha8Rng) -> Moebius {
    loop {
        let e: Vec<BigRational> = (0..4).map(|_| random_rational(r, 3, 2)).collect();
        let m = Moebius::from_rationals(e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone());
        if m.is_invertible() {
            return m;
        }
    }
}

/// `24c0(c1 + 2c0²)` and `c2 + 12c0c1 + 16c0³`, written out independently of the library.
pub fn psi_identity_parts(c: &[BigRational; 3]) -> (BigRational, BigRational) {
    let [c0, c1, c2] = c;
    let num = rat(24, 1) * c0 * (c1 + rat(2, 1) * c0 * c0);
    let den = c2 + rat(12, 1) * c0 * c1 + rat(16, 1) * c0 * c0 * c0;
    (num, den)
}

/// `1728 g2³ / (g2³ − 27 g3²)`.
pub fn j_from_curve(g2: &BigRational, g3: &BigRational) -> BigRational {
    let g2c = g2 * g2 * g2;
    rat(1728, 1) * &g2c / (&g2c - rat(27, 1) * g3 * g3)
}
