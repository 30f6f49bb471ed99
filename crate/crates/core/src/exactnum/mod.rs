//! Exact arithmetic tower and error-bounded complex values.
//!
//! [`BigRational`] and [`BigInt`] come from `num`; everything else here is
//! built on top: exact points of the upper half plane in an imaginary
//! quadratic field, complex balls, Möbius matrices in exact and approximate
//! flavors, reduction to the standard fundamental domain, and rational
//! recognition by continued fractions.

mod ball;
mod moebius;
mod point;
mod quadratic;
mod rational;
mod recognize;
mod reduce;
mod scalar;

pub use ball::{ApproxComplex, U};
pub use moebius::{moebius_apply, Mat2, Moebius};
pub use point::Point;
pub use quadratic::{QuadElem, QuadraticPoint};
pub use rational::{parse_rational, rat, rat_to_ball, squarefree_decompose};
pub use recognize::{rational_recognize, recognition_window};
pub use reduce::{fundamental_domain_reduce, Reduced};
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
