use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::jet::{Field, Jet};
use crate::error::{Error, Result};
use crate::exactnum::{rat_to_ball, ApproxComplex};

/// Default maximum index accepted by [`extend_coefficients`].
pub const DEFAULT_CEILING: usize = 256;

/// Exact Taylor data `c_0 … c_N` of `f(t) = Σ c_n tⁿ/n!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalTaylor {
    coeffs: Vec<BigRational>,
}

impl RationalTaylor {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        RationalTaylor { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// `f^{(m)}(t) = Σ_{n ≥ m} c_n t^{n−m}/(n−m)!` for `m ≤ 3`, with the polynomial truncated at `N`.
    pub fn jet<F: Field>(&self, t: &F, lift: impl Fn(&BigRational) -> F) -> Jet<F> {
        let n = self.coeffs.len();
        // inverse factorials as exact rationals, lifted once
        let mut inv_fact = Vec::with_capacity(n);
        let mut f = <BigRational as One>::one();
        for k in 0..n {
            if k > 0 {
                f /= BigRational::from_integer(BigInt::from(k));
            }
            inv_fact.push(f.clone());
        }
        let mut out: [F; 4] = [F::zero(), F::zero(), F::zero(), F::zero()];
        for (m, slot) in out.iter_mut().enumerate() {
            // Horner in t over k = n − m
            let mut acc = F::zero();
            for idx in (m..n).rev() {
                let coef = lift(&(&self.coeffs[idx] * &inv_fact[idx - m]));
                acc = acc * t.clone() + coef;
            }
            *slot = acc;
        }
        let [a, b, c, d] = out;
        Jet::new(a, b, c, d)
    }

    pub fn jet_exact(&self, t: &BigRational) -> Jet<BigRational> {
        self.jet(t, |c| c.clone())
    }

    pub fn jet_approx(&self, t: &ApproxComplex) -> Jet<ApproxComplex> {
        self.jet(t, rat_to_ball)
    }
}

/// Extend `(c0, c1, c2)` to `c_0 … c_N` with the WDVV recursion
/// `c_{n+3} = Σ_{a=0}^{n} C(n,a) (−24 c_a c_{n−a+2} + 36 c_{a+1} c_{n−a+1})`.
pub fn extend_coefficients(c0: &BigRational, c1: &BigRational, c2: &BigRational, n: usize) -> Result<RationalTaylor> {
    extend_coefficients_with_ceiling(c0, c1, c2, n, DEFAULT_CEILING)
}

/// [`extend_coefficients`] with an explicit ceiling on `N`.
pub fn extend_coefficients_with_ceiling(
    c0: &BigRational,
    c1: &BigRational,
    c2: &BigRational,
    n: usize,
    ceiling: usize,
) -> Result<RationalTaylor> {
    if n > ceiling {
        return Err(Error::CeilingExceeded { requested: n, ceiling });
    }
    let mut c = vec![c0.clone(), c1.clone(), c2.clone()];
    let m24 = BigRational::from_integer(BigInt::from(-24));
    let p36 = BigRational::from_integer(BigInt::from(36));
    while c.len() <= n {
        let k = c.len() - 3;
        let mut s = <BigRational as Zero>::zero();
        let mut binom = BigInt::one();
        for a in 0..=k {
            let term = &m24 * &c[a] * &c[k - a + 2] + &p36 * &c[a + 1] * &c[k - a + 1];
            if !term.is_zero() {
                s += term * &binom;
            }
            binom = binom * (k - a) / (a + 1);
        }
        c.push(s);
    }
    c.truncate(n + 1);
    Ok(RationalTaylor::new(c))
}

/// The same recursion on balls, for coefficients that are not known exactly.
pub fn extend_coefficients_approx(start: [ApproxComplex; 3], n: usize, ceiling: usize) -> Result<Vec<ApproxComplex>> {
    if n > ceiling {
        return Err(Error::CeilingExceeded { requested: n, ceiling });
    }
    let mut c = start.to_vec();
    while c.len() <= n {
        let k = c.len() - 3;
        let mut s = ApproxComplex::zero();
        let mut binom = BigInt::one();
        for a in 0..=k {
            let term = c[a] * c[k - a + 2] * -24.0 + c[a + 1] * c[k - a + 1] * 36.0;
            s = s + term * rat_to_ball(&BigRational::from_integer(binom.clone()));
            binom = binom * (k - a) / (a + 1);
        }
        c.push(s);
    }
    c.truncate(n + 1);
    Ok(c)
}
