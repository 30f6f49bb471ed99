use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ball::{ApproxComplex, U};
use super::rational::squarefree_decompose;
use crate::error::{Error, Result};

/// An element `x + y·√−D` of the imaginary quadratic field Q(√−D).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadElem {
    pub x: BigRational,
    pub y: BigRational,
    pub d: u64,
}

impl QuadElem {
    pub fn new(x: BigRational, y: BigRational, d: u64) -> Self {
        QuadElem { x, y, d }
    }

    pub fn rational(x: BigRational, d: u64) -> Self {
        QuadElem { x, y: BigRational::zero(), d }
    }

    fn dd(&self) -> BigRational {
        BigRational::from_integer(BigInt::from(self.d))
    }

    pub fn add(&self, o: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.d, o.d);
        QuadElem::new(&self.x + &o.x, &self.y + &o.y, self.d)
    }

    pub fn mul(&self, o: &QuadElem) -> QuadElem {
        debug_assert_eq!(self.d, o.d);
        // (x + y s)(u + v s) with s^2 = -D
        let x = &self.x * &o.x - &self.y * &o.y * self.dd();
        let y = &self.x * &o.y + &self.y * &o.x;
        QuadElem::new(x, y, self.d)
    }

    pub fn scale(&self, k: &BigRational) -> QuadElem {
        QuadElem::new(&self.x * k, &self.y * k, self.d)
    }

    pub fn norm(&self) -> BigRational {
        &self.x * &self.x + &self.y * &self.y * self.dd()
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn div(&self, o: &QuadElem) -> Option<QuadElem> {
        if o.is_zero() {
            return None;
        }
        let n = o.norm();
        let conj = QuadElem::new(o.x.clone(), -o.y.clone(), o.d);
        let num = self.mul(&conj);
        Some(QuadElem::new(num.x / &n, num.y / n, self.d))
    }
}

/// An exact point `τ = (p + q√−D)/r` of the upper half plane.
///
/// Stored canonically: `D` squarefree, `r > 0`, `q > 0`, `gcd(p, q, r) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticPoint {
    p: BigInt,
    q: BigInt,
    r: BigInt,
    d: u64,
}

impl QuadraticPoint {
    /// Build `(p + q√−D)/r`, folding square factors of `D` into `q`.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, r: impl Into<BigInt>, d: u64) -> Result<Self> {
        let (p, q, r) = (p.into(), q.into(), r.into());
        if d == 0 {
            return Err(Error::NotUpperHalfPlane("D must be positive".into()));
        }
        if r.is_zero() {
            return Err(Error::Parse("zero denominator".into()));
        }
        let (m, s) = squarefree_decompose(d);
        let x = BigRational::new(p, r.clone());
        let y = BigRational::new(q * BigInt::from(m), r);
        Self::from_parts(&x, &y, s)
    }

    /// Build `x + y√−D` from rational parts; `D` must already be squarefree.
    pub fn from_parts(x: &BigRational, y: &BigRational, d: u64) -> Result<Self> {
        if !y.is_positive() {
            return Err(Error::NotUpperHalfPlane(format!("imaginary coefficient {y} is not positive")));
        }
        debug_assert_eq!(squarefree_decompose(d).0, 1);
        let r = x.denom().lcm(y.denom());
        let p = x.numer() * (&r / x.denom());
        let q = y.numer() * (&r / y.denom());
        let g = p.gcd(&q).gcd(&r);
        Ok(QuadraticPoint { p: p / &g, q: q / &g, r: r / g, d })
    }

    pub fn from_elem(e: &QuadElem) -> Result<Self> {
        Self::from_parts(&e.x, &e.y, e.d)
    }

    /// `√−1`.
    pub fn i() -> Self {
        Self::new(0, 1, 1, 1).unwrap()
    }

    /// `ρ = (−1 + √−3)/2`.
    pub fn rho() -> Self {
        Self::new(-1, 1, 2, 3).unwrap()
    }

    /// `√−D` for any positive `D`.
    pub fn sqrt_neg(d: u64) -> Self {
        Self::new(0, 1, 1, d).unwrap()
    }

    /// `(−1 + √−D)/2`.
    pub fn half_odd(d: u64) -> Self {
        Self::new(-1, 1, 2, d).unwrap()
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }
    pub fn q(&self) -> &BigInt {
        &self.q
    }
    pub fn r(&self) -> &BigInt {
        &self.r
    }
    pub fn d(&self) -> u64 {
        self.d
    }

    pub fn to_elem(&self) -> QuadElem {
        QuadElem::new(self.re(), BigRational::new(self.q.clone(), self.r.clone()), self.d)
    }

    pub fn re(&self) -> BigRational {
        BigRational::new(self.p.clone(), self.r.clone())
    }

    /// `Im(τ)^2 = q^2 D / r^2`.
    pub fn im_squared(&self) -> BigRational {
        BigRational::new(&self.q * &self.q * BigInt::from(self.d), &self.r * &self.r)
    }

    /// `|τ|^2`.
    pub fn norm(&self) -> BigRational {
        self.to_elem().norm()
    }

    /// Embed into C with a radius of two ulps per component.
    pub fn embed(&self) -> ApproxComplex {
        let re = self.re().to_f64().unwrap_or(f64::NAN);
        let im = self.im_squared().to_f64().unwrap_or(f64::NAN).sqrt();
        let err = 2.0 * U * (re.abs() + im.abs());
        ApproxComplex::with_err(re, im, err)
    }

    /// Translate by an integer.
    pub fn translate(&self, n: &BigInt) -> QuadraticPoint {
        QuadraticPoint { p: &self.p + n * &self.r, q: self.q.clone(), r: self.r.clone(), d: self.d }
    }

    /// `−1/τ`.
    pub fn invert(&self) -> QuadraticPoint {
        let e = self.to_elem();
        let minus_one = QuadElem::rational(-BigRational::one(), self.d);
        Self::from_elem(&minus_one.div(&e).expect("nonzero point")).expect("S preserves the upper half plane")
    }
}

impl fmt::Display for QuadraticPoint {
    /// Prints in the CLI grammar, e.g. `(-1+sqrt(-7))/2`, `2*sqrt(-1)`, `5+sqrt(-2)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let surd = if self.q.is_one() { format!("sqrt(-{})", self.d) } else { format!("{}*sqrt(-{})", self.q, self.d) };
        let body = if self.p.is_zero() { surd } else { format!("{}+{}", self.p, surd) };
        if self.r.is_one() {
            write!(f, "{body}")
        } else {
            write!(f, "({body})/{}", self.r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;

    #[test]
    fn canonical_forms() {
        let a = QuadraticPoint::new(0, 1, 1, 4).unwrap();
        assert_eq!(a, QuadraticPoint::new(0, 2, 1, 1).unwrap());
        let b = QuadraticPoint::new(-2, 2, 4, 27).unwrap();
        assert_eq!(
            (b.p().clone(), b.q().clone(), b.r().clone(), b.d()),
            (BigInt::from(-1), BigInt::from(3), BigInt::from(2), 3)
        );
        assert!(QuadraticPoint::new(0, -1, 1, 2).is_err());
    }

    #[test]
    fn embed_i_and_rho() {
        let i = QuadraticPoint::i().embed();
        assert_eq!((i.re(), i.im()), (0.0, 1.0));
        let rho = QuadraticPoint::rho().embed();
        assert!((rho.im() - 3f64.sqrt() / 2.0).abs() <= rho.err);
        assert!(rho.err <= 4.0 * U);
    }

    #[test]
    fn inversion_and_translation() {
        let i = QuadraticPoint::i();
        assert_eq!(i.invert(), i);
        let t = QuadraticPoint::sqrt_neg(2).translate(&BigInt::from(5));
        assert_eq!(t.to_string(), "5+sqrt(-2)");
        assert_eq!(QuadraticPoint::rho().to_string(), "(-1+sqrt(-3))/2");
        assert_eq!(QuadraticPoint::new(0, 2, 1, 1).unwrap().to_string(), "2*sqrt(-1)");
    }

    #[test]
    fn field_division() {
        let e = QuadElem::new(rat(1, 2), rat(3, 1), 5);
        let f = QuadElem::new(rat(-2, 1), rat(1, 7), 5);
        let q = e.div(&f).unwrap();
        assert_eq!(q.mul(&f), e);
    }
}
