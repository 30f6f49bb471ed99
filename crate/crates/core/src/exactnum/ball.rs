//! Complex balls: a double-precision midpoint plus an absolute error radius.
//!
//! Every arithmetic operation propagates the input radii with the usual
//! ball rules and then adds a rounding term proportional to the magnitude of
//! the computed midpoint. The radius itself is inflated by a few ulps so that
//! rounding in the radius computation cannot make it too small.
//!
//! Elementary functions (`exp`, `sin`, `cos`, `sqrt`) assume the platform libm
//! is faithful (error below one ulp), which holds for glibc and musl.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;

/// Unit roundoff for binary64.
pub const U: f64 = f64::EPSILON / 2.0;

/// Absolute distance between `std::f64::consts::PI` and pi.
const PI_ERR: f64 = 1.2246467991473532e-16;

fn inflate(r: f64) -> f64 {
    r * (1.0 + 4.0 * U) + f64::MIN_POSITIVE
}

/// A complex value together with a rigorous absolute error radius.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ApproxComplex {
    pub mid: Complex64,
    pub err: f64,
}

impl ApproxComplex {
    pub fn new(mid: Complex64, err: f64) -> Self {
        debug_assert!(err >= 0.0 && err.is_finite() || err.is_infinite());
        ApproxComplex { mid, err }
    }

    /// An exactly representable value (zero radius).
    pub fn exact(re: f64, im: f64) -> Self {
        ApproxComplex { mid: Complex64::new(re, im), err: 0.0 }
    }

    pub fn real(re: f64) -> Self {
        Self::exact(re, 0.0)
    }

    pub fn with_err(re: f64, im: f64, err: f64) -> Self {
        ApproxComplex { mid: Complex64::new(re, im), err }
    }

    pub fn zero() -> Self {
        Self::exact(0.0, 0.0)
    }

    pub fn one() -> Self {
        Self::exact(1.0, 0.0)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::exact(0.0, 1.0)
    }

    pub fn pi() -> Self {
        Self::with_err(std::f64::consts::PI, 0.0, PI_ERR)
    }

    pub fn from_i64(n: i64) -> Self {
        let x = n as f64;
        // i64 -> f64 rounds to nearest.
        let err = if x.abs() > 9007199254740992.0 { U * x.abs() } else { 0.0 };
        Self::with_err(x, 0.0, err)
    }

    pub fn re(&self) -> f64 {
        self.mid.re
    }

    pub fn im(&self) -> f64 {
        self.mid.im
    }

    pub fn abs_mid(&self) -> f64 {
        self.mid.norm()
    }

    /// Upper bound on the modulus of every point in the ball.
    pub fn abs_upper(&self) -> f64 {
        inflate(self.mid.norm() + self.err)
    }

    /// Lower bound on the modulus of every point in the ball (may be zero).
    pub fn abs_lower(&self) -> f64 {
        let m = self.mid.norm() * (1.0 - 2.0 * U) - self.err;
        m.max(0.0)
    }

    /// The ball `|x|` as a real ball.
    pub fn abs(&self) -> ApproxComplex {
        let m = self.mid.norm();
        ApproxComplex::with_err(m, 0.0, inflate(self.err + 2.0 * U * m))
    }

    /// True when zero is certainly excluded from the ball.
    pub fn is_nonzero(&self) -> bool {
        self.abs_lower() > 0.0
    }

    /// True when the ball contains zero.
    pub fn contains_zero(&self) -> bool {
        !self.is_nonzero()
    }

    /// True when the ball contains the given point.
    pub fn contains(&self, z: Complex64) -> bool {
        (self.mid - z).norm() <= self.err * (1.0 + 4.0 * U)
    }

    /// True when `other`'s ball lies inside this one.
    pub fn encloses(&self, other: &ApproxComplex) -> bool {
        (self.mid - other.mid).norm() + other.err <= self.err * (1.0 + 4.0 * U)
    }

    /// True when the two balls intersect.
    pub fn overlaps(&self, other: &ApproxComplex) -> bool {
        (self.mid - other.mid).norm() <= inflate(self.err + other.err)
    }

    /// Enlarge the radius by `extra`.
    pub fn widen(self, extra: f64) -> Self {
        ApproxComplex { mid: self.mid, err: inflate(self.err + extra) }
    }

    pub fn conj(&self) -> Self {
        ApproxComplex { mid: self.mid.conj(), err: self.err }
    }

    pub fn re_part(&self) -> Self {
        ApproxComplex::with_err(self.mid.re, 0.0, self.err)
    }

    pub fn im_part(&self) -> Self {
        ApproxComplex::with_err(self.mid.im, 0.0, self.err)
    }

    /// Multiply by a double, treated as exact.
    pub fn scale(&self, s: f64) -> Self {
        let mid = self.mid * s;
        ApproxComplex { mid, err: inflate(self.err * s.abs() + U * mid.norm()) }
    }

    pub fn recip(&self) -> Self {
        ApproxComplex::one() / *self
    }

    pub fn square(&self) -> Self {
        *self * *self
    }

    /// Integer power by repeated squaring; negative exponents go through the reciprocal.
    pub fn powi(&self, n: i32) -> Self {
        if n < 0 {
            return self.recip().powi(-n);
        }
        let mut base = *self;
        let mut acc = ApproxComplex::one();
        let mut e = n as u32;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        acc
    }

    /// Complex exponential.
    pub fn exp(&self) -> Self {
        let mid = self.mid.exp();
        let m = mid.norm();
        // |exp(z + d) - exp(z)| <= |exp(z)| (exp(|d|) - 1)
        let prop = m * self.err.exp_m1();
        ApproxComplex { mid, err: inflate(prop + 4.0 * U * m) }
    }

    /// Principal square root. The bound is valid for the branch selected by the
    /// midpoint; callers that straddle the negative real axis get the root on the
    /// midpoint's side.
    pub fn sqrt(&self) -> Self {
        self.nth_root(2)
    }

    /// Principal `n`-th root (see [`ApproxComplex::sqrt`] for the branch caveat).
    pub fn nth_root(&self, n: u32) -> Self {
        let m = self.mid.norm();
        let mid = if n == 2 { self.mid.sqrt() } else { self.mid.powf(1.0 / n as f64) };
        let r = mid.norm();
        if self.err == 0.0 {
            return ApproxComplex { mid, err: inflate(4.0 * n as f64 * U * r) };
        }
        let err = if self.err < 0.5 * m {
            // |(z+d)^(1/n) - z^(1/n)| <= |d| max |w|^(1/n - 1) / n over the ball
            let lo = m - self.err;
            self.err * lo.powf(1.0 / n as f64 - 1.0) / n as f64
        } else {
            // Crude: everything within the ball has modulus <= m + err.
            2.0 * (m + self.err).powf(1.0 / n as f64)
        };
        ApproxComplex { mid, err: inflate(err + 4.0 * n as f64 * U * r) }
    }

    /// Real sine of a real ball (imaginary part must be exactly zero).
    pub fn sin_real(&self) -> Self {
        let v = self.mid.re.sin();
        ApproxComplex::with_err(v, 0.0, inflate(self.err + 2.0 * U))
    }

    pub fn cos_real(&self) -> Self {
        let v = self.mid.re.cos();
        ApproxComplex::with_err(v, 0.0, inflate(self.err + 2.0 * U))
    }

    /// Distance from the midpoint to `z` plus the radius.
    pub fn dist_upper(&self, z: Complex64) -> f64 {
        inflate((self.mid - z).norm() + self.err)
    }
}

impl Default for ApproxComplex {
    fn default() -> Self {
        ApproxComplex::zero()
    }
}

impl From<f64> for ApproxComplex {
    fn from(x: f64) -> Self {
        ApproxComplex::real(x)
    }
}

impl From<Complex64> for ApproxComplex {
    fn from(z: Complex64) -> Self {
        ApproxComplex { mid: z, err: 0.0 }
    }
}

impl Add for ApproxComplex {
    type Output = ApproxComplex;
    fn add(self, rhs: ApproxComplex) -> ApproxComplex {
        let mid = self.mid + rhs.mid;
        ApproxComplex { mid, err: inflate(self.err + rhs.err + 2.0 * U * mid.norm()) }
    }
}

impl Sub for ApproxComplex {
    type Output = ApproxComplex;
    fn sub(self, rhs: ApproxComplex) -> ApproxComplex {
        let mid = self.mid - rhs.mid;
        ApproxComplex { mid, err: inflate(self.err + rhs.err + 2.0 * U * mid.norm()) }
    }
}

impl Neg for ApproxComplex {
    type Output = ApproxComplex;
    fn neg(self) -> ApproxComplex {
        ApproxComplex { mid: -self.mid, err: self.err }
    }
}

impl Mul for ApproxComplex {
    type Output = ApproxComplex;
    fn mul(self, rhs: ApproxComplex) -> ApproxComplex {
        let mid = self.mid * rhs.mid;
        let a = self.mid.norm();
        let b = rhs.mid.norm();
        let prop = a * rhs.err + b * self.err + self.err * rhs.err;
        ApproxComplex { mid, err: inflate(prop + 4.0 * U * a * b) }
    }
}

impl Div for ApproxComplex {
    type Output = ApproxComplex;
    fn div(self, rhs: ApproxComplex) -> ApproxComplex {
        let b = rhs.mid.norm();
        let lo = b - rhs.err;
        if !(lo > 0.0) {
            return ApproxComplex { mid: self.mid / rhs.mid, err: f64::INFINITY };
        }
        let mid = self.mid / rhs.mid;
        let a = self.mid.norm();
        let prop = (self.err * b + a * rhs.err) / (b * lo);
        ApproxComplex { mid, err: inflate(prop + 8.0 * U * mid.norm()) }
    }
}

impl Add<f64> for ApproxComplex {
    type Output = ApproxComplex;
    fn add(self, rhs: f64) -> ApproxComplex {
        self + ApproxComplex::real(rhs)
    }
}

impl Sub<f64> for ApproxComplex {
    type Output = ApproxComplex;
    fn sub(self, rhs: f64) -> ApproxComplex {
        self - ApproxComplex::real(rhs)
    }
}

impl Mul<f64> for ApproxComplex {
    type Output = ApproxComplex;
    fn mul(self, rhs: f64) -> ApproxComplex {
        self.scale(rhs)
    }
}

impl Div<f64> for ApproxComplex {
    type Output = ApproxComplex;
    fn div(self, rhs: f64) -> ApproxComplex {
        self / ApproxComplex::real(rhs)
    }
}

fn compact(x: f64) -> String {
    if x == 0.0 {
        "0".to_string()
    } else if (1e-5..1e16).contains(&x.abs()) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

impl fmt::Display for ApproxComplex {
    /// `re ± err`, or `re+imi ± err` when the imaginary midpoint is nonzero.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let err = format!("{:.2e}", self.err);
        if self.mid.im == 0.0 {
            write!(f, "{} ± {err}", compact(self.mid.re))
        } else {
            let im = compact(self.mid.im);
            let sign = if im.starts_with('-') { "" } else { "+" };
            write!(f, "{}{sign}{im}i ± {err}", compact(self.mid.re))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        assert_eq!(ApproxComplex::with_err(0.5, 0.0, 1e-16).to_string(), "0.5 ± 1.00e-16");
        assert_eq!(ApproxComplex::with_err(1.0, -6.6e-16, 0.0).to_string(), "1-6.6e-16i ± 0.00e0");
    }

    #[test]
    fn arithmetic_keeps_truth_inside() {
        // 0.1 is not representable; carry the representation error explicitly.
        let tenth = ApproxComplex::with_err(0.1, 0.0, 1e-17);
        let mut acc = ApproxComplex::zero();
        for _ in 0..10 {
            acc = acc + tenth;
        }
        assert!(acc.contains(Complex64::new(1.0, 0.0)));
        let third = ApproxComplex::one() / ApproxComplex::real(3.0);
        let back = third * ApproxComplex::real(3.0);
        assert!(back.contains(Complex64::new(1.0, 0.0)));
    }

    #[test]
    fn division_by_ball_containing_zero_is_unbounded() {
        let z = ApproxComplex::with_err(1e-20, 0.0, 1e-10);
        let q = ApproxComplex::one() / z;
        assert!(q.err.is_infinite());
        assert!(z.contains_zero());
    }

    #[test]
    fn exp_of_i_pi_is_minus_one() {
        let z = ApproxComplex::i() * ApproxComplex::pi();
        let e = z.exp();
        assert!(e.contains(Complex64::new(-1.0, 0.0)), "{e}");
        assert!(e.err < 2e-15);
    }

    #[test]
    fn roots() {
        let z = ApproxComplex::exact(-4.0, 0.0);
        let r = z.sqrt();
        assert!(r.contains(Complex64::new(0.0, 2.0)));
        let c = ApproxComplex::exact(-8.0, 0.0).nth_root(3);
        let expect = Complex64::new(1.0, 3f64.sqrt());
        assert!((c.mid - expect).norm() < 1e-14);
    }

    #[test]
    fn powers() {
        let z = ApproxComplex::exact(0.0, 2.0);
        assert!(z.powi(-4).contains(Complex64::new(1.0 / 16.0, 0.0)));
        assert!(z.powi(3).contains(Complex64::new(0.0, -8.0)));
    }
}
