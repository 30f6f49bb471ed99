use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ball::ApproxComplex;
use super::point::Point;
use super::quadratic::{QuadElem, QuadraticPoint};
use super::rational::rat_to_ball;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Entries of a 2×2 matrix `[[a, b], [c, d]]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<T> {
    pub a: T,
    pub b: T,
    pub c: T,
    pub d: T,
}

impl<T> Mat2<T> {
    pub fn new(a: T, b: T, c: T, d: T) -> Self {
        Mat2 { a, b, c, d }
    }
}

fn mul_exact(x: &Mat2<BigRational>, y: &Mat2<BigRational>) -> Mat2<BigRational> {
    Mat2::new(
        &x.a * &y.a + &x.b * &y.c,
        &x.a * &y.b + &x.b * &y.d,
        &x.c * &y.a + &x.d * &y.c,
        &x.c * &y.b + &x.d * &y.d,
    )
}

fn mul_approx(x: &Mat2<ApproxComplex>, y: &Mat2<ApproxComplex>) -> Mat2<ApproxComplex> {
    Mat2::new(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d)
}

/// A 2×2 matrix acting by fractional linear transformations.
///
/// The exact flavor has rational entries; the approximate flavor carries a
/// complex ball per entry. Products of mixed flavors are approximate.
#[derive(Clone, Debug, PartialEq)]
pub enum Moebius {
    Exact(Mat2<BigRational>),
    Approx(Mat2<ApproxComplex>),
}

impl Moebius {
    pub fn from_i64(a: i64, b: i64, c: i64, d: i64) -> Moebius {
        let r = |n: i64| BigRational::from_integer(BigInt::from(n));
        Moebius::Exact(Mat2::new(r(a), r(b), r(c), r(d)))
    }

    pub fn from_rationals(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Moebius {
        Moebius::Exact(Mat2::new(a, b, c, d))
    }

    pub fn from_approx(a: ApproxComplex, b: ApproxComplex, c: ApproxComplex, d: ApproxComplex) -> Moebius {
        Moebius::Approx(Mat2::new(a, b, c, d))
    }

    pub fn identity() -> Moebius {
        Moebius::from_i64(1, 0, 0, 1)
    }

    /// `S = [[0, −1], [1, 0]]`.
    pub fn s() -> Moebius {
        Moebius::from_i64(0, -1, 1, 0)
    }

    /// `T = [[1, 1], [0, 1]]`.
    pub fn t() -> Moebius {
        Moebius::from_i64(1, 1, 0, 1)
    }

    /// `T^n`.
    pub fn t_pow(n: i64) -> Moebius {
        Moebius::from_i64(1, n, 0, 1)
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Moebius::Exact(_))
    }

    pub fn exact(&self) -> Option<&Mat2<BigRational>> {
        match self {
            Moebius::Exact(m) => Some(m),
            Moebius::Approx(_) => None,
        }
    }

    /// Integer entries when the matrix is exact and integral.
    pub fn integer_entries(&self) -> Option<[BigInt; 4]> {
        let m = self.exact()?;
        let all = [&m.a, &m.b, &m.c, &m.d];
        if all.iter().all(|x| x.is_integer()) {
            Some([m.a.to_integer(), m.b.to_integer(), m.c.to_integer(), m.d.to_integer()])
        } else {
            None
        }
    }

    /// Integer entries as `i64` (panics on overflow, which does not happen for reduction words).
    pub fn i64_entries(&self) -> Option<[i64; 4]> {
        let e = self.integer_entries()?;
        Some([e[0].to_i64()?, e[1].to_i64()?, e[2].to_i64()?, e[3].to_i64()?])
    }

    pub fn to_approx(&self) -> Mat2<ApproxComplex> {
        match self {
            Moebius::Exact(m) => Mat2::new(rat_to_ball(&m.a), rat_to_ball(&m.b), rat_to_ball(&m.c), rat_to_ball(&m.d)),
            Moebius::Approx(m) => m.clone(),
        }
    }

    pub fn det(&self) -> Scalar {
        match self {
            Moebius::Exact(m) => Scalar::Exact(&m.a * &m.d - &m.b * &m.c),
            Moebius::Approx(m) => Scalar::Approx(m.a * m.d - m.b * m.c),
        }
    }

    /// True when the determinant is certainly nonzero.
    pub fn is_invertible(&self) -> bool {
        match self.det() {
            Scalar::Exact(q) => !q.is_zero(),
            Scalar::Approx(z) => z.is_nonzero(),
        }
    }

    /// Matrix product `self · other`.
    pub fn compose(&self, other: &Moebius) -> Moebius {
        match (self, other) {
            (Moebius::Exact(x), Moebius::Exact(y)) => Moebius::Exact(mul_exact(x, y)),
            _ => Moebius::Approx(mul_approx(&self.to_approx(), &other.to_approx())),
        }
    }

    pub fn inverse(&self) -> Result<Moebius> {
        if !self.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(match self {
            Moebius::Exact(m) => {
                let det = &m.a * &m.d - &m.b * &m.c;
                Moebius::Exact(Mat2::new(&m.d / &det, -&m.b / &det, -&m.c / &det, &m.a / &det))
            }
            Moebius::Approx(m) => {
                let det = m.a * m.d - m.b * m.c;
                Moebius::Approx(Mat2::new(m.d / det, -m.b / det, -m.c / det, m.a / det))
            }
        })
    }

    /// `(a z + b)/(c z + d)` on a complex ball.
    pub fn apply_approx(&self, z: &ApproxComplex) -> Result<ApproxComplex> {
        let m = self.to_approx();
        let den = m.c * *z + m.d;
        if !den.is_nonzero() {
            return Err(Error::PoleAtInput(format!("c z + d vanishes at {z}")));
        }
        Ok((m.a * *z + m.b) / den)
    }

    /// `(a τ + b)/(c τ + d)` computed exactly in Q(√−D).
    pub fn apply_exact(&self, tau: &QuadraticPoint) -> Result<QuadraticPoint> {
        let m = self.exact().ok_or(Error::NonExactMatrix)?;
        let e = tau.to_elem();
        let lift = |x: &BigRational| QuadElem::rational(x.clone(), e.d);
        let num = e.scale(&m.a).add(&lift(&m.b));
        let den = e.scale(&m.c).add(&lift(&m.d));
        let q = num.div(&den).ok_or_else(|| Error::PoleAtInput(format!("c τ + d vanishes at {tau}")))?;
        QuadraticPoint::from_elem(&q)
    }

    /// `c z + d` as a ball.
    pub fn automorphy_factor(&self, z: &ApproxComplex) -> ApproxComplex {
        let m = self.to_approx();
        m.c * *z + m.d
    }
}

impl Mul for &Moebius {
    type Output = Moebius;
    fn mul(self, rhs: &Moebius) -> Moebius {
        self.compose(rhs)
    }
}

impl Mul for Moebius {
    type Output = Moebius;
    fn mul(self, rhs: Moebius) -> Moebius {
        self.compose(&rhs)
    }
}

impl fmt::Display for Moebius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Moebius::Exact(m) => write!(f, "[[{}, {}], [{}, {}]]", m.a, m.b, m.c, m.d),
            Moebius::Approx(m) => write!(f, "[[{}, {}], [{}, {}]]", m.a, m.b, m.c, m.d),
        }
    }
}

/// Apply `A` to a point. Exact points stay exact and require an exact matrix.
pub fn moebius_apply(a: &Moebius, z: &Point) -> Result<Point> {
    match z {
        Point::Exact(q) => a.apply_exact(q).map(Point::Exact),
        Point::Approx(w) => a.apply_approx(w).map(Point::Approx),
    }
}

impl Default for Moebius {
    fn default() -> Self {
        Moebius::identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn identity_and_s_fix_i() {
        let i = Point::Exact(QuadraticPoint::i());
        assert_eq!(moebius_apply(&Moebius::identity(), &i).unwrap(), i);
        assert_eq!(moebius_apply(&Moebius::s(), &i).unwrap(), i);
    }

    #[test]
    fn translation_back_to_sqrt_minus_two() {
        let tau = QuadraticPoint::sqrt_neg(2).translate(&BigInt::from(5));
        let out = moebius_apply(&Moebius::from_i64(1, -5, 0, 1), &Point::Exact(tau)).unwrap();
        assert_eq!(out, Point::Exact(QuadraticPoint::sqrt_neg(2)));
    }

    #[test]
    fn errors() {
        let i = Point::Exact(QuadraticPoint::i());
        let approx = Moebius::from_approx(
            ApproxComplex::one(),
            ApproxComplex::zero(),
            ApproxComplex::zero(),
            ApproxComplex::one(),
        );
        assert_eq!(moebius_apply(&approx, &i), Err(Error::NonExactMatrix));
        // c z + d = z - 2 at z = 2
        let m = Moebius::from_i64(1, 0, 1, -2);
        assert!(matches!(m.apply_approx(&ApproxComplex::real(2.0)), Err(Error::PoleAtInput(_))));
        assert_eq!(Moebius::from_i64(1, 2, 2, 4).inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn composition_exact_and_approx() {
        let a = Moebius::from_i64(2, 1, 1, 1);
        let b = Moebius::from_i64(1, -3, 1, -2);
        let tau = QuadraticPoint::new(1, 2, 3, 7).unwrap();
        let lhs = a.apply_exact(&b.apply_exact(&tau).unwrap()).unwrap();
        let rhs = (&a * &b).apply_exact(&tau).unwrap();
        assert_eq!(lhs, rhs);

        let z = ApproxComplex::exact(0.3, 1.7);
        let lhs = a.apply_approx(&b.apply_approx(&z).unwrap()).unwrap();
        let rhs = (&a * &b).apply_approx(&z).unwrap();
        assert!(lhs.overlaps(&rhs));
        let inv = a.inverse().unwrap();
        let back = inv.apply_approx(&a.apply_approx(&z).unwrap()).unwrap();
        assert!(back.contains(Complex64::new(0.3, 1.7)));
    }
}
