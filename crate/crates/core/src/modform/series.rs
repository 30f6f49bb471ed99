//! Truncated q-expansions with rigorous tail bounds.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::divisor::sigma_table;
use super::Weight;
use crate::error::{Error, Result};
use crate::exactnum::{ApproxComplex, U};

/// Default cap on the number of q-series terms.
pub const DEFAULT_TERM_BUDGET: usize = 20_000;

/// Tail target: terms are added until the majorant drops below this (absolute).
const TAIL_TARGET: f64 = 1e-19;

/// Bound for `Σ_{n>N} n^e xⁿ`, `0 ≤ x < 1`.
///
/// Consecutive ratios `((n+1)/n)^e x` decrease in `n`, so the tail is dominated
/// by a geometric series started at `n = N + 1` with ratio `((N+2)/(N+1))^e x`.
pub fn tail_bound(e: u32, x: f64, n: usize) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let n1 = (n + 1) as f64;
    let r = ((n1 + 1.0) / n1).powi(e as i32) * x;
    if r >= 1.0 {
        return f64::INFINITY;
    }
    let first = n1.powi(e as i32) * x.powf(n1);
    first / (1.0 - r) * (1.0 + 1e-12)
}

/// Smallest `N ≤ budget` with `scale · tail_bound(e, x, N) ≤ target`, or `budget`.
fn choose_terms(e: u32, x: f64, scale: f64, target: f64, budget: usize) -> usize {
    let mut n = 1;
    while n < budget && scale * tail_bound(e, x, n) > target {
        n += if n < 64 { 1 } else { n / 8 };
    }
    n.min(budget)
}

/// `q = exp(2πiτ)` as a ball.
pub fn nome(tau: &ApproxComplex) -> ApproxComplex {
    let two_pi_i = ApproxComplex::i() * ApproxComplex::pi() * 2.0;
    (two_pi_i * *tau).exp()
}

/// `Σ_{n=1}^{N} a_n qⁿ` for real coefficients given with relative error bounds.
fn sum_series(q: &ApproxComplex, coeffs: &[(f64, f64)]) -> ApproxComplex {
    let mut acc = ApproxComplex::zero();
    let mut pow = *q;
    for (n, &(a, rel)) in coeffs.iter().enumerate().skip(1) {
        let c = ApproxComplex::with_err(a, 0.0, rel * a.abs());
        acc = acc + pow * c;
        if n + 1 < coeffs.len() {
            pow = pow * *q;
        }
    }
    acc
}

/// `D^m E_k(τ)` by direct summation of the q-expansion, `D = q d/dq`.
///
/// Works anywhere in the upper half plane, but the number of terms grows like
/// `1/Im τ`; `budget` caps it and the truncation error is always included in
/// the returned radius (possibly infinite when the budget is too small).
pub fn eisenstein_q_series(k: Weight, tau: &ApproxComplex, deriv: u32, budget: usize) -> Result<ApproxComplex> {
    if tau.im() - tau.err <= 0.0 {
        return Err(Error::NotUpperHalfPlane(tau.to_string()));
    }
    let q = nome(tau);
    let x = q.abs_upper();
    if x >= 1.0 {
        return Err(Error::NotUpperHalfPlane(tau.to_string()));
    }
    let e = k.k() + deriv;
    let c = k.leading();
    let n = choose_terms(e, x, c.abs(), TAIL_TARGET, budget);
    let mut coeffs = sigma_table(k.k() - 1, n);
    if deriv > 0 {
        for (i, (a, rel)) in coeffs.iter_mut().enumerate().skip(1) {
            *a *= (i as f64).powi(deriv as i32);
            *rel += (deriv as f64 + 1.0) * U;
        }
    }
    let s = sum_series(&q, &coeffs) * c;
    let tail = c.abs() * tail_bound(e, x, n);
    let head = if deriv == 0 { s + 1.0 } else { s };
    Ok(head.widen(tail))
}

/// Coefficients `τ(1..=N)` of `Δ = (E4³ − E6²)/1728 = q Π (1 − qⁿ)²⁴`, exactly.
fn ramanujan_tau_table() -> &'static [BigInt] {
    static TABLE: OnceLock<Vec<BigInt>> = OnceLock::new();
    TABLE.get_or_init(|| {
        const N: usize = 80;
        let e4: Vec<BigInt> =
            (0..=N).map(|n| if n == 0 { BigInt::from(1) } else { 240 * super::divisor_sum(3, n as u64) }).collect();
        let e6: Vec<BigInt> =
            (0..=N).map(|n| if n == 0 { BigInt::from(1) } else { -504 * super::divisor_sum(5, n as u64) }).collect();
        let mul = |a: &[BigInt], b: &[BigInt]| -> Vec<BigInt> {
            (0..=N).map(|n| (0..=n).map(|i| &a[i] * &b[n - i]).sum()).collect()
        };
        let e4_3 = mul(&mul(&e4, &e4), &e4);
        let e6_2 = mul(&e6, &e6);
        e4_3.iter().zip(e6_2.iter()).map(|(a, b)| (a - b) / 1728).collect()
    })
}

/// Ramanujan's `τ(n)` for `1 ≤ n ≤ 80`.
pub fn ramanujan_tau(n: usize) -> Option<BigInt> {
    ramanujan_tau_table().get(n).filter(|_| n >= 1).cloned()
}

/// `Δ(τ) = Σ τ(n) qⁿ`, summed from exact coefficients.
///
/// Avoids the cancellation in `E4³ − E6²`. The tail uses `|τ(n)| ≤ 2n⁶`.
/// Only the first 80 coefficients are stored, so `τ` should be reduced first.
pub fn delta_series(tau: &ApproxComplex) -> Result<ApproxComplex> {
    let q = nome(tau);
    let x = q.abs_upper();
    let table = ramanujan_tau_table();
    let n = choose_terms(6, x, 2.0, TAIL_TARGET * x, table.len() - 1);
    let coeffs: Vec<(f64, f64)> = table[..=n]
        .iter()
        .map(|t| {
            let v = t.to_f64().unwrap_or(f64::NAN);
            (v, 2.0 * U)
        })
        .collect();
    let tail = 2.0 * tail_bound(6, x, n);
    let s = sum_series(&q, &coeffs);
    let s = s.widen(tail);
    if !s.err.is_finite() {
        return Err(Error::PrecisionUnreachable { requested: TAIL_TARGET, achieved: s.err });
    }
    Ok(s)
}
