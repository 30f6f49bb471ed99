use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::eisenstein::{EisensteinTriple, Weight};
use super::series::{delta_series, eisenstein_q_series, DEFAULT_TERM_BUDGET};
use crate::error::{Error, Result};
use crate::exactnum::{fundamental_domain_reduce, rat, ApproxComplex, Point};

/// Weierstrass model `y² = 4x³ − g2 x − g3` with rational invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveModel {
    g2: BigRational,
    g3: BigRational,
}

impl CurveModel {
    pub fn new(g2: BigRational, g3: BigRational) -> Result<CurveModel> {
        let c = CurveModel { g2, g3 };
        if c.discriminant().is_zero() {
            return Err(Error::SingularCurve);
        }
        Ok(c)
    }

    pub fn from_i64(g2: i64, g3: i64) -> Result<CurveModel> {
        CurveModel::new(rat(g2, 1), rat(g3, 1))
    }

    pub fn g2(&self) -> &BigRational {
        &self.g2
    }

    pub fn g3(&self) -> &BigRational {
        &self.g3
    }

    /// `Δ_W = g2³ − 27 g3²`.
    pub fn discriminant(&self) -> BigRational {
        &self.g2 * &self.g2 * &self.g2 - rat(27, 1) * &self.g3 * &self.g3
    }

    /// `j = 1728 g2³ / Δ_W`, exactly.
    pub fn j_invariant(&self) -> BigRational {
        rat(1728, 1) * &self.g2 * &self.g2 * &self.g2 / self.discriminant()
    }
}

impl fmt::Display for CurveModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^2 = 4x^3 - ({})x - ({})", self.g2, self.g3)
    }
}

/// Input accepted by [`j_invariant`].
#[derive(Clone, Debug, PartialEq)]
pub enum JInput {
    Point(Point),
    Curve(CurveModel),
}

/// Output of [`j_invariant`]: a ball for points, an exact rational for curves.
#[derive(Clone, Debug, PartialEq)]
pub enum JValue {
    Approx(ApproxComplex),
    Exact(BigRational),
}

/// `j(τ) = E4(τ)³ / Δ(τ)`, evaluated at the reduced point.
///
/// `Δ` is summed from its exact integer coefficients, which avoids the
/// catastrophic cancellation in `E4³ − E6²` when `Im τ` is large.
pub fn j_of_point(tau: &Point) -> Result<ApproxComplex> {
    let red = fundamental_domain_reduce(tau)?;
    let w = red.point.embed();
    let e4 = eisenstein_q_series(Weight::Four, &w, 0, DEFAULT_TERM_BUDGET)?;
    let delta = delta_series(&w)?;
    Ok(e4.powi(3) / delta)
}

/// j-invariant of a point (numeric, within `tol` relative to `max(1, |j|)`) or of a curve (exact).
pub fn j_invariant(input: &JInput, tol: f64) -> Result<JValue> {
    match input {
        JInput::Curve(c) => Ok(JValue::Exact(c.j_invariant())),
        JInput::Point(p) => {
            let j = j_of_point(p)?;
            let scale = j.abs_mid().max(1.0);
            if j.err > tol * scale || !j.err.is_finite() {
                return Err(Error::PrecisionUnreachable { requested: tol * scale, achieved: j.err });
            }
            Ok(JValue::Approx(j))
        }
    }
}

/// `g2(τ) = (4π⁴/3) E4(τ)`, `g3(τ) = (8π⁶/27) E6(τ)` for the lattice `Z + Zτ`.
pub fn lattice_invariants(tau: &Point) -> Result<(ApproxComplex, ApproxComplex)> {
    let t = EisensteinTriple::at(tau)?;
    let pi2 = ApproxComplex::pi().square();
    let g2 = pi2.square() * t.e4 * 4.0 / 3.0;
    let g3 = pi2.powi(3) * t.e6 * 8.0 / 27.0;
    Ok((g2, g3))
}
