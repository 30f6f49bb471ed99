use num_rational::BigRational;
use num_traits::Zero;

use super::solution::ConstantSolutionParams;
use crate::error::{Error, Result};
use crate::exactnum::rat;

/// `Δ = 32(c1 + 2c0²)³ − (c2 + 12c1c0 + 16c0³)²`.
pub fn cubic_discriminant(c0: &BigRational, c1: &BigRational, c2: &BigRational) -> BigRational {
    let a = c1 + rat(2, 1) * c0 * c0;
    let b = c2 + rat(12, 1) * c1 * c0 + rat(16, 1) * c0 * c0 * c0;
    rat(32, 1) * &a * &a * &a - &b * &b
}

/// Dense polynomial, lowest degree first, no trailing zeros.
type Poly = Vec<BigRational>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn derivative(p: &Poly) -> Poly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c * rat(i as i64, 1)).collect())
}

fn rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = a.clone();
    let lead = b.last().expect("nonzero divisor");
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let q = r.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            r[shift + i] -= &q * c;
        }
        r.pop();
        r = trim(r);
    }
    r
}

fn gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

/// The cubic `4x³ − 12c0x² − 6c1x − c2/2` whose roots are `−2X_k(0)`.
pub fn halphen_cubic(c0: &BigRational, c1: &BigRational, c2: &BigRational) -> Vec<BigRational> {
    vec![-c2 / rat(2, 1), rat(-6, 1) * c1, rat(-12, 1) * c0, rat(4, 1)]
}

/// Invert `(α, β) ↦ (c0, c1, c2)` on the degenerate locus `Δ = 0`.
///
/// The repeated root `x` of the cubic comes from `gcd(P, P′)`, and then
/// `β = 2x`, `α = c0 − β/2`. A repeated root of a rational cubic is rational,
/// so no surd case arises.
pub fn recover_alpha_beta(c0: &BigRational, c1: &BigRational, c2: &BigRational) -> Result<ConstantSolutionParams> {
    let disc = cubic_discriminant(c0, c1, c2);
    if !disc.is_zero() {
        return Err(Error::NotDegenerate(disc.to_string()));
    }
    let p = halphen_cubic(c0, c1, c2);
    let g = gcd(&p, &derivative(&p));
    let root = match g.len() {
        // linear gcd: the double root
        2 => -&g[0] / &g[1],
        // quadratic gcd (x − r)²: a triple root
        3 => -&g[1] / (rat(2, 1) * &g[2]),
        _ => return Err(Error::Inconsistent(format!("unexpected gcd degree {}", g.len().saturating_sub(1)))),
    };
    let beta = rat(2, 1) * root;
    let alpha = c0 - &beta / rat(2, 1);
    let back = ConstantSolutionParams::taylor_start(&alpha, &beta);
    if back != [c0.clone(), c1.clone(), c2.clone()] {
        return Err(Error::Inconsistent("forward map does not reproduce the input".into()));
    }
    Ok(ConstantSolutionParams::exact(alpha, beta))
}
