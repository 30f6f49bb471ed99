use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::ball::ApproxComplex;
use super::moebius::Moebius;
use super::point::Point;
use super::quadratic::QuadraticPoint;
use crate::error::{Error, Result};

const MAX_STEPS: usize = 10_000;

/// A reduced representative together with the integer matrix that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct Reduced {
    /// `τ′ = A τ`, in the standard fundamental domain.
    pub point: Point,
    /// `A`, integer entries, determinant 1.
    pub matrix: Moebius,
}

/// Move `τ` into `|Re τ′| ≤ 1/2`, `|τ′| ≥ 1` with `T` and `S` steps.
///
/// Boundary ties go to `Re τ′ ≤ 0`: the strip is taken half-open as
/// `[−1/2, 1/2)` and a point on the unit circle with positive real part is
/// flipped by `S`. Exact input is reduced exactly; approximate input chooses
/// steps from the midpoint and then applies the accumulated word to the
/// original ball, so the output radius is honest.
pub fn fundamental_domain_reduce(tau: &Point) -> Result<Reduced> {
    tau.check_upper()?;
    match tau {
        Point::Exact(q) => reduce_exact(q).map(|(p, m)| Reduced { point: Point::Exact(p), matrix: m }),
        Point::Approx(z) => reduce_approx(z).map(|(p, m)| Reduced { point: Point::Approx(p), matrix: m }),
    }
}

fn floor_half_shift(re: &BigRational) -> BigInt {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    (re + half).floor().to_integer()
}

fn reduce_exact(tau: &QuadraticPoint) -> Result<(QuadraticPoint, Moebius)> {
    let mut z = tau.clone();
    let mut word = Moebius::identity();
    let one = BigRational::one();
    for _ in 0..MAX_STEPS {
        let n = floor_half_shift(&z.re());
        if n != BigInt::from(0) {
            z = z.translate(&-&n);
            word = &t_pow_big(-&n) * &word;
        }
        let norm = z.norm();
        if norm < one || (norm == one && z.re().is_positive()) {
            z = z.invert();
            word = &Moebius::s() * &word;
            continue;
        }
        return Ok((z, word));
    }
    Err(Error::Unsupported("fundamental domain reduction did not terminate".into()))
}

fn t_pow_big(n: BigInt) -> Moebius {
    let r = |x: BigInt| BigRational::from_integer(x);
    Moebius::from_rationals(r(BigInt::one()), r(n), r(BigInt::from(0)), r(BigInt::one()))
}

fn reduce_approx(tau: &ApproxComplex) -> Result<(ApproxComplex, Moebius)> {
    let mut z = tau.mid;
    let mut word = Moebius::identity();
    for _ in 0..MAX_STEPS {
        let n = (z.re + 0.5).floor();
        if n != 0.0 {
            if n.abs() > 1e15 {
                return Err(Error::Unsupported(format!("real part {} too large to reduce", z.re)));
            }
            z.re -= n;
            word = &Moebius::t_pow(-(n as i64)) * &word;
        }
        let norm = z.norm_sqr();
        if norm < 1.0 || (norm == 1.0 && z.re > 0.0) {
            z = -z.inv();
            word = &Moebius::s() * &word;
            continue;
        }
        let image = word.apply_approx(tau)?;
        return Ok((image, word));
    }
    Err(Error::Unsupported("fundamental domain reduction did not terminate".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::moebius_apply;
    use num_complex::Complex64;

    #[test]
    fn translate_sqrt_minus_two() {
        let tau = QuadraticPoint::sqrt_neg(2).translate(&BigInt::from(5));
        let r = fundamental_domain_reduce(&Point::Exact(tau)).unwrap();
        assert_eq!(r.point, Point::Exact(QuadraticPoint::sqrt_neg(2)));
        assert_eq!(r.matrix, Moebius::t_pow(-5));
    }

    #[test]
    fn fixed_points_stay() {
        for p in [QuadraticPoint::i(), QuadraticPoint::rho()] {
            let r = fundamental_domain_reduce(&Point::Exact(p.clone())).unwrap();
            assert_eq!(r.point, Point::Exact(p));
            assert_eq!(r.matrix, Moebius::identity());
        }
        // rho + 1 sits on the right edge and moves to rho
        let r = fundamental_domain_reduce(&Point::Exact(QuadraticPoint::rho().translate(&BigInt::from(1)))).unwrap();
        assert_eq!(r.point, Point::Exact(QuadraticPoint::rho()));
    }

    #[test]
    fn unit_circle_tie() {
        // (1 + sqrt(-15))/4 has |z| = 1 and Re > 0
        let z = QuadraticPoint::new(1, 1, 4, 15).unwrap();
        let r = fundamental_domain_reduce(&Point::Exact(z)).unwrap();
        assert_eq!(r.point, Point::Exact(QuadraticPoint::new(-1, 1, 4, 15).unwrap()));
    }

    #[test]
    fn approx_low_point() {
        let z = ApproxComplex::exact(0.1, 0.1);
        let r = fundamental_domain_reduce(&Point::Approx(z)).unwrap();
        let w = r.point.embed();
        assert!(w.mid.norm() >= 1.0 - 1e-12 && w.mid.re.abs() <= 0.5 + 1e-12);
        let again = moebius_apply(&r.matrix, &Point::Approx(z)).unwrap().embed();
        assert!((again.mid - w.mid).norm() <= 1e-12);
        assert_eq!(r.matrix.det().as_exact().unwrap(), &BigRational::one());
    }

    #[test]
    fn rejects_lower_half_plane() {
        let z = Point::Approx(ApproxComplex::new(Complex64::new(0.0, -1.0), 0.0));
        assert!(matches!(fundamental_domain_reduce(&z), Err(Error::NotUpperHalfPlane(_))));
    }
}
