use std::fmt;

use num_rational::BigRational;

use super::ball::ApproxComplex;
use super::rational::rat_to_ball;

/// A value that is either an exact rational or an approximate complex ball.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Exact(BigRational),
    Approx(ApproxComplex),
}

impl Scalar {
    pub fn to_approx(&self) -> ApproxComplex {
        match self {
            Scalar::Exact(q) => rat_to_ball(q),
            Scalar::Approx(z) => *z,
        }
    }

    pub fn as_exact(&self) -> Option<&BigRational> {
        match self {
            Scalar::Exact(q) => Some(q),
            Scalar::Approx(_) => None,
        }
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Exact(q)
    }
}

impl From<ApproxComplex> for Scalar {
    fn from(z: ApproxComplex) -> Self {
        Scalar::Approx(z)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Approx(z) => write!(f, "{z}"),
        }
    }
}
