//! Third-order jets `(f, f′, f″, f‴)` over exact or ball scalars.

use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exactnum::ApproxComplex;

/// The scalar operations jets need.
pub trait Field:
    Clone + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Div<Output = Self> + Neg<Output = Self>
{
    fn from_i64(n: i64) -> Self;
    /// True when the value is zero or, for balls, cannot be told apart from zero.
    fn may_be_zero(&self) -> bool;

    fn zero() -> Self {
        Self::from_i64(0)
    }
    fn one() -> Self {
        Self::from_i64(1)
    }
}

impl Field for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
    fn may_be_zero(&self) -> bool {
        self.is_zero()
    }
    fn one() -> Self {
        <BigRational as One>::one()
    }
}

impl Field for ApproxComplex {
    fn from_i64(n: i64) -> Self {
        ApproxComplex::from_i64(n)
    }
    fn may_be_zero(&self) -> bool {
        !self.is_nonzero()
    }
}

/// Value and first three derivatives of a function at one point.
#[derive(Clone, Debug, PartialEq)]
pub struct Jet<F> {
    pub d: [F; 4],
}

impl<F: Field> Jet<F> {
    pub fn new(d0: F, d1: F, d2: F, d3: F) -> Self {
        Jet { d: [d0, d1, d2, d3] }
    }

    pub fn constant(c: F) -> Self {
        Jet::new(c, F::zero(), F::zero(), F::zero())
    }

    pub fn value(&self) -> &F {
        &self.d[0]
    }

    pub fn add(&self, o: &Jet<F>) -> Jet<F> {
        let [a0, a1, a2, a3] = self.d.clone();
        let [b0, b1, b2, b3] = o.d.clone();
        Jet::new(a0 + b0, a1 + b1, a2 + b2, a3 + b3)
    }

    pub fn scale(&self, k: &F) -> Jet<F> {
        let [a0, a1, a2, a3] = self.d.clone();
        Jet::new(a0 * k.clone(), a1 * k.clone(), a2 * k.clone(), a3 * k.clone())
    }

    /// Leibniz rule.
    pub fn mul(&self, o: &Jet<F>) -> Jet<F> {
        let [a0, a1, a2, a3] = self.d.clone();
        let [b0, b1, b2, b3] = o.d.clone();
        let three = F::from_i64(3);
        let two = F::from_i64(2);
        Jet::new(
            a0.clone() * b0.clone(),
            a1.clone() * b0.clone() + a0.clone() * b1.clone(),
            a2.clone() * b0.clone() + two * a1.clone() * b1.clone() + a0.clone() * b2.clone(),
            a3 * b0 + three.clone() * a2 * b1 + three * a1 * b2 + a0 * b3,
        )
    }

    /// Chain rule: `outer` holds the derivatives of `g` at `inner.value()`,
    /// the result is the jet of `g ∘ inner`.
    pub fn compose(outer: &Jet<F>, inner: &Jet<F>) -> Jet<F> {
        let [g0, g1, g2, g3] = outer.d.clone();
        let [_, h1, h2, h3] = inner.d.clone();
        let three = F::from_i64(3);
        Jet::new(
            g0,
            g1.clone() * h1.clone(),
            g2.clone() * h1.clone() * h1.clone() + g1.clone() * h2.clone(),
            g3 * h1.clone() * h1.clone() * h1.clone() + three * g2 * h1 * h2 + g1 * h3,
        )
    }

    /// Jet of `(c t + d)^{−p}` at `t`, with `j = c t + d` already computed.
    pub fn inverse_power(c: &F, j: &F, p: i64) -> Jet<F> {
        let inv = F::one() / j.clone();
        let mut pows = vec![F::one()];
        for _ in 0..p + 3 {
            let last = pows.last().unwrap().clone();
            pows.push(last * inv.clone());
        }
        let p_ = p as usize;
        let (p0, p1, p2) = (F::from_i64(-p), F::from_i64(p * (p + 1)), F::from_i64(-p * (p + 1) * (p + 2)));
        Jet::new(
            pows[p_].clone(),
            p0 * c.clone() * pows[p_ + 1].clone(),
            p1 * c.clone() * c.clone() * pows[p_ + 2].clone(),
            p2 * c.clone() * c.clone() * c.clone() * pows[p_ + 3].clone(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn product_and_chain_rule_exact() {
        // u(t) = t^2 at t = 3, v(t) = t^3
        let u = Jet::new(rat(9, 1), rat(6, 1), rat(2, 1), rat(0, 1));
        let v = Jet::new(rat(27, 1), rat(27, 1), rat(18, 1), rat(6, 1));
        // t^5 at 3: 243, 405, 540, 540
        assert_eq!(u.mul(&v), Jet::new(rat(243, 1), rat(405, 1), rat(540, 1), rat(540, 1)));
        // (t^2)^3 = t^6 at 3: 729, 1458, 2430, 3240; outer g(s) = s^3 at s = 9
        let g = Jet::new(rat(729, 1), rat(243, 1), rat(54, 1), rat(6, 1));
        assert_eq!(Jet::compose(&g, &u), Jet::new(rat(729, 1), rat(1458, 1), rat(2430, 1), rat(3240, 1)));
    }

    #[test]
    fn inverse_power_exact() {
        // (2t + 1)^-2 at t = 1: 1/9, -4/27, 24/81, -192/243
        let j = Jet::inverse_power(&rat(2, 1), &rat(3, 1), 2);
        assert_eq!(j, Jet::new(rat(1, 9), rat(-4, 27), rat(24, 81), rat(-192, 243)));
    }
}
