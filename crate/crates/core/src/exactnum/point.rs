use std::fmt;

use num_complex::Complex64;

use super::ball::ApproxComplex;
use super::quadratic::QuadraticPoint;
use crate::error::{Error, Result};

/// A point of the upper half plane, exact or approximate.
#[derive(Clone, Debug, PartialEq)]
pub enum Point {
    Exact(QuadraticPoint),
    Approx(ApproxComplex),
}

impl Point {
    pub fn approx(re: f64, im: f64) -> Point {
        Point::Approx(ApproxComplex::exact(re, im))
    }

    pub fn embed(&self) -> ApproxComplex {
        match self {
            Point::Exact(q) => q.embed(),
            Point::Approx(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&QuadraticPoint> {
        match self {
            Point::Exact(q) => Some(q),
            Point::Approx(_) => None,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Point::Exact(_))
    }

    /// Fails unless `Im τ` is certainly positive.
    pub fn check_upper(&self) -> Result<()> {
        match self {
            Point::Exact(_) => Ok(()),
            Point::Approx(z) => {
                if z.im() - z.err > 0.0 {
                    Ok(())
                } else {
                    Err(Error::NotUpperHalfPlane(z.to_string()))
                }
            }
        }
    }
}

impl From<QuadraticPoint> for Point {
    fn from(q: QuadraticPoint) -> Self {
        Point::Exact(q)
    }
}

impl From<ApproxComplex> for Point {
    fn from(z: ApproxComplex) -> Self {
        Point::Approx(z)
    }
}

impl From<Complex64> for Point {
    fn from(z: Complex64) -> Self {
        Point::Approx(z.into())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Point::Exact(q) => write!(f, "{q}"),
            Point::Approx(z) => write!(f, "{z}"),
        }
    }
}
