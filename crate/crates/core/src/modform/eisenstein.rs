use std::fmt;

use super::quasi::QmPoly;
use super::series::{eisenstein_q_series, DEFAULT_TERM_BUDGET};
use crate::error::{Error, Result};
use crate::exactnum::{fundamental_domain_reduce, ApproxComplex, Point};

/// Weight of a holomorphic Eisenstein series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Weight {
    Two,
    Four,
    Six,
}

impl Weight {
    pub fn k(self) -> u32 {
        match self {
            Weight::Two => 2,
            Weight::Four => 4,
            Weight::Six => 6,
        }
    }

    /// Coefficient in front of `Σ σ_{k−1}(n) qⁿ`.
    pub fn leading(self) -> f64 {
        match self {
            Weight::Two => -24.0,
            Weight::Four => 240.0,
            Weight::Six => -504.0,
        }
    }

    pub fn from_k(k: u32) -> Option<Weight> {
        match k {
            2 => Some(Weight::Two),
            4 => Some(Weight::Four),
            6 => Some(Weight::Six),
            _ => None,
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.k())
    }
}

/// `E_k(τ)` with its error radius.
#[derive(Clone, Debug, PartialEq)]
pub struct EisensteinValue {
    pub weight: Weight,
    pub tau: Point,
    pub value: ApproxComplex,
}

/// `E2, E4, E6` and `E2*` at one point, sharing a single reduction.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EisensteinTriple {
    pub e2: ApproxComplex,
    pub e4: ApproxComplex,
    pub e6: ApproxComplex,
    pub e2_star: ApproxComplex,
}

impl EisensteinTriple {
    /// Evaluate at `τ`: reduce to the fundamental domain, sum there, transport back.
    pub fn at(tau: &Point) -> Result<EisensteinTriple> {
        let red = fundamental_domain_reduce(tau)?;
        let z = tau.embed();
        let w = red.point.embed();
        let raw = |k| eisenstein_q_series(k, &w, 0, DEFAULT_TERM_BUDGET);
        let (e2r, e4r, e6r) = (raw(Weight::Two)?, raw(Weight::Four)?, raw(Weight::Six)?);
        let m = red.matrix.to_approx();
        let j = red.matrix.automorphy_factor(&z);
        let inv = j.recip();
        let inv2 = inv.square();
        let e4 = e4r * inv2.square();
        let e6 = e6r * inv2.square() * inv2;
        // E2(τ) = (cτ+d)^−2 E2(Aτ) − 6c / (πi (cτ+d))
        let anomaly = m.c * inv * ApproxComplex::i() * 6.0 / ApproxComplex::pi();
        let e2 = e2r * inv2 + anomaly;
        let e2_star = e2 - star_shift(&z);
        Ok(EisensteinTriple { e2, e4, e6, e2_star })
    }

    pub fn get(&self, k: Weight) -> ApproxComplex {
        match k {
            Weight::Two => self.e2,
            Weight::Four => self.e4,
            Weight::Six => self.e6,
        }
    }

    /// The values `(E2*, E4, E6)` used by almost-holomorphic formulas.
    pub fn star_vars(&self) -> [ApproxComplex; 3] {
        [self.e2_star, self.e4, self.e6]
    }
}

/// `3/(π Im τ)`.
pub(crate) fn star_shift(z: &ApproxComplex) -> ApproxComplex {
    ApproxComplex::real(3.0) / (ApproxComplex::pi() * z.im_part())
}

fn gate(value: ApproxComplex, tol: f64) -> Result<ApproxComplex> {
    if !(tol > 0.0) {
        return Err(Error::Unsupported(format!("tolerance must be positive, got {tol}")));
    }
    if value.err > tol || !value.err.is_finite() {
        return Err(Error::PrecisionUnreachable { requested: tol, achieved: value.err });
    }
    Ok(value)
}

/// `E_k(τ)` to within `tol`.
///
/// Fails with `PrecisionUnreachable` when the double-precision ball cannot be
/// made as narrow as `tol` at this point.
pub fn eisenstein(k: Weight, tau: &Point, tol: f64) -> Result<EisensteinValue> {
    let t = EisensteinTriple::at(tau)?;
    let value = gate(t.get(k), tol)?;
    Ok(EisensteinValue { weight: k, tau: tau.clone(), value })
}

/// `E2*(τ) = E2(τ) − 3/(π Im τ)` to within `tol`.
pub fn e2_star(tau: &Point, tol: f64) -> Result<ApproxComplex> {
    gate(EisensteinTriple::at(tau)?.e2_star, tol)
}

/// `∂E2* = (E2*² − E4)/12`.
pub fn ahd_first(v: &[ApproxComplex; 3]) -> ApproxComplex {
    let [s, e4, _] = *v;
    (s.square() - e4) / 12.0
}

/// `∂²E2* = (E6 − (3/2) E2* E4 + (1/2) E2*³)/36`.
pub fn ahd_second(v: &[ApproxComplex; 3]) -> ApproxComplex {
    let [s, e4, e6] = *v;
    (e6 - s * e4 * 1.5 + s.powi(3) * 0.5) / 36.0
}

/// `∂^order E2*(τ)`, the iterated almost-holomorphic derivative.
///
/// Orders 1 and 2 use the closed forms; higher orders expand the derivation
/// symbolically on polynomials in `(E2*, E4, E6)`.
pub fn ahd_e2_star(order: u32, tau: &Point, tol: f64) -> Result<ApproxComplex> {
    let vars = EisensteinTriple::at(tau)?.star_vars();
    let v = match order {
        0 => vars[0],
        1 => ahd_first(&vars),
        2 => ahd_second(&vars),
        n => QmPoly::e2_derivative(n).eval(&vars),
    };
    gate(v, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::QuadraticPoint;
    use std::f64::consts::PI;

    #[test]
    fn values_at_i() {
        let i = Point::Exact(QuadraticPoint::i());
        let e2 = eisenstein(Weight::Two, &i, 1e-12).unwrap().value;
        assert!((e2.re() - 0.954929658551372).abs() < 1e-12);
        let e6 = eisenstein(Weight::Six, &i, 1e-12).unwrap().value;
        assert!(e6.abs_mid() < 1e-13);
        assert!(e2_star(&i, 1e-12).unwrap().abs_upper() < 1e-12);
    }

    #[test]
    fn values_at_rho() {
        let rho = Point::Exact(QuadraticPoint::rho());
        assert!(eisenstein(Weight::Four, &rho, 1e-12).unwrap().value.abs_upper() < 1e-12);
        let e2 = eisenstein(Weight::Two, &rho, 1e-12).unwrap().value;
        // E2(ρ) = 2√3/π
        assert!((e2.mid.re - 2.0 * 3f64.sqrt() / PI).abs() < 1e-12);
        assert!(e2_star(&rho, 1e-12).unwrap().abs_upper() < 1e-12);
    }

    #[test]
    fn reduction_matches_direct_sum() {
        let z = ApproxComplex::exact(0.37, 0.21);
        let t = EisensteinTriple::at(&Point::Approx(z)).unwrap();
        for k in [Weight::Two, Weight::Four, Weight::Six] {
            let direct = eisenstein_q_series(k, &z, 0, DEFAULT_TERM_BUDGET).unwrap();
            assert!(direct.overlaps(&t.get(k)), "{k}: {direct} vs {}", t.get(k));
            assert!((direct.mid - t.get(k).mid).norm() < 1e-9);
        }
    }

    #[test]
    fn tolerance_gate() {
        let i = Point::Exact(QuadraticPoint::i());
        assert!(matches!(eisenstein(Weight::Four, &i, 1e-30), Err(Error::PrecisionUnreachable { .. })));
        assert!(matches!(eisenstein(Weight::Four, &Point::approx(0.0, -1.0), 1e-3), Err(Error::NotUpperHalfPlane(_))));
    }

    #[test]
    fn first_derivative_at_i() {
        let i = Point::Exact(QuadraticPoint::i());
        let d = ahd_e2_star(1, &i, 1e-12).unwrap();
        assert!((d.re() + 0.1213135743557).abs() < 1e-9, "{d}");
    }
}
