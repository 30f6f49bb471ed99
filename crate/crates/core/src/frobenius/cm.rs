use std::fmt;

use num_traits::{ToPrimitive, Zero};

use super::coeffs::{rationality_verdict, RationalityVerdict};
use super::point::FrobeniusPoint;
use crate::catalog::{load_catalog, CMEntry};
use crate::error::{Error, Result};
use crate::exactnum::{fundamental_domain_reduce, rat_to_ball, ApproxComplex, Moebius, Point, QuadraticPoint};
use crate::modform::{j_of_point, lattice_invariants, CurveModel};

/// Result of [`classify_cm`].
#[derive(Clone, Debug, PartialEq)]
pub enum CmClassification {
    /// `M τ0` equals the row's modulus for the integer matrix `witness`.
    Matched { entry: Box<CMEntry>, witness: Moebius },
    /// CM by construction, but the curve is not one of the thirteen defined over Q.
    /// `j` is the numeric value at `τ0`, which is not a rational integer.
    CMNotOverQ { reduced: QuadraticPoint, j: Option<ApproxComplex> },
}

impl CmClassification {
    pub fn is_matched(&self) -> bool {
        matches!(self, CmClassification::Matched { .. })
    }

    pub fn entry(&self) -> Option<&CMEntry> {
        match self {
            CmClassification::Matched { entry, .. } => Some(entry),
            CmClassification::CMNotOverQ { .. } => None,
        }
    }
}

impl fmt::Display for CmClassification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmClassification::Matched { entry, witness } => {
                write!(f, "CM over Q: yes, row {} ({}), j = {}, via {}", entry.row, entry.label(), entry.j, witness)
            }
            CmClassification::CMNotOverQ { reduced, j } => {
                write!(f, "CM: yes; over Q: no (reduced tau = {reduced}")?;
                if let Some(j) = j {
                    write!(f, ", j = {j}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Match `τ0` modulo `SL(2,Z)` against the thirteen catalog moduli.
pub fn classify_cm(tau0: &QuadraticPoint) -> Result<CmClassification> {
    let red = fundamental_domain_reduce(&Point::Exact(tau0.clone()))?;
    for entry in load_catalog() {
        let er = fundamental_domain_reduce(&Point::Exact(entry.modulus.clone()))?;
        if er.point == red.point {
            let witness = &er.matrix.inverse()? * &red.matrix;
            return Ok(CmClassification::Matched { entry: Box::new(entry), witness });
        }
    }
    let reduced = red.point.as_exact().cloned().expect("exact input reduces exactly");
    Ok(CmClassification::CMNotOverQ { reduced, j: j_of_point(&red.point).ok() })
}

/// Evidence for [`weak_symmetry`].
#[derive(Clone, Debug, PartialEq)]
pub struct WeakSymmetry {
    pub holds: bool,
    pub verdict: RationalityVerdict,
    pub cm: CmClassification,
}

impl fmt::Display for WeakSymmetry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "weak symmetry: {}; {}; {}", if self.holds { "yes" } else { "no" }, self.verdict, self.cm)
    }
}

/// Coefficients recognized as rational and `τ0` on one of the thirteen orbits.
pub fn weak_symmetry(p: &FrobeniusPoint, max_denominator: u64, tol: f64) -> Result<WeakSymmetry> {
    let tau = p.tau0().as_exact().ok_or_else(|| Error::Unsupported("weak symmetry needs an exact tau0".into()))?;
    let cm = classify_cm(tau)?;
    let verdict = rationality_verdict(p, max_denominator, tol)?;
    Ok(WeakSymmetry { holds: cm.is_matched() && verdict.is_defined_over_q(), verdict, cm })
}

/// The values `ω0² = 1/(aπ²)` for which the curve `(g2, g3)` is the scaling
/// `a² g2(τ0) = g2`, `a³ g3(τ0) = g3` of the lattice `Z + Zτ0`.
///
/// `g3 = 0` leaves the sign of `a` free and `g2 = 0` leaves a cube root of
/// unity free; every candidate is returned, the real one first. Residuals are
/// measured relative to `max(1, |g2|)` and `max(1, |g3|)`.
pub fn pin_omega(tau0: &QuadraticPoint, curve: &CurveModel, tol: f64) -> Result<Vec<ApproxComplex>> {
    let (g2t, g3t) = lattice_invariants(&Point::Exact(tau0.clone()))?;
    let (g2, g3) = (rat_to_ball(curve.g2()), rat_to_ball(curve.g3()));
    let candidates: Vec<ApproxComplex> = if curve.g3().is_zero() {
        let a = (g2 / g2t).sqrt();
        vec![a, -a]
    } else if curve.g2().is_zero() {
        let a = (g3 / g3t).nth_root(3);
        let mut roots: Vec<ApproxComplex> =
            (0..3).map(|k| a * ApproxComplex::exact(0.0, 2.0 * std::f64::consts::PI * k as f64 / 3.0).exp()).collect();
        roots.sort_by(|x, y| x.im().abs().total_cmp(&y.im().abs()));
        roots
    } else {
        vec![(g3 / g3t) / (g2 / g2t)]
    };
    let scale2 = curve.g2().to_f64().unwrap_or(f64::INFINITY).abs().max(1.0);
    let scale3 = curve.g3().to_f64().unwrap_or(f64::INFINITY).abs().max(1.0);
    let mut out = Vec::new();
    let mut worst = 0.0f64;
    for a in candidates {
        let r2 = (a.square() * g2t - g2).abs_mid() / scale2;
        let r3 = (a.powi(3) * g3t - g3).abs_mid() / scale3;
        worst = worst.max(r2.max(r3));
        if r2 <= tol && r3 <= tol {
            out.push((a * ApproxComplex::pi().square()).recip());
        }
    }
    if out.is_empty() {
        return Err(Error::Inconsistent(format!(
            "no scaling maps the lattice of {tau0} onto the curve (residual {worst:.3e})"
        )));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::frobenius::{frob_coefficients, omega_gamma_quarter, DEFAULT_MAX_DENOMINATOR};
    use num_bigint::BigInt;

    #[test]
    fn classify_examples() {
        let c = classify_cm(&QuadraticPoint::half_odd(7)).unwrap();
        assert_eq!(c.entry().unwrap().j, rat(-3375, 1));
        let shifted = QuadraticPoint::sqrt_neg(2).translate(&BigInt::from(5));
        let c = classify_cm(&shifted).unwrap();
        assert_eq!(c.entry().unwrap().modulus, QuadraticPoint::sqrt_neg(2));
        if let CmClassification::Matched { witness, .. } = &c {
            assert_eq!(witness.apply_exact(&shifted).unwrap(), QuadraticPoint::sqrt_neg(2));
        }
        let c = classify_cm(&QuadraticPoint::sqrt_neg(5)).unwrap();
        assert!(!c.is_matched());
        if let CmClassification::CMNotOverQ { j: Some(j), .. } = c {
            // j(√−5) = 632000 + 282880√5, far from any integer
            assert!((j.re() - (632000.0 + 282880.0 * 5f64.sqrt())).abs() < 1e-4);
        }
    }

    #[test]
    fn pin_omega_examples() {
        let w = pin_omega(&QuadraticPoint::sqrt_neg(3), &CurveModel::from_i64(60, -88).unwrap(), 1e-9).unwrap();
        assert_eq!(w.len(), 1);
        assert!((w[0].mid.re + 0.14940679812946).abs() < 1e-11 && w[0].im().abs() < 1e-12);

        let w = pin_omega(&QuadraticPoint::i(), &CurveModel::from_i64(-4, 0).unwrap(), 1e-9).unwrap();
        assert_eq!(w.len(), 2);
        // |ω0²| = Γ(1/4)⁴/(8π³)
        let g = crate::modform::gamma_constant(crate::modform::GammaConstant::Quarter).re();
        let expect = g.powi(4) / (8.0 * std::f64::consts::PI.powi(3));
        for x in &w {
            assert!(x.re().abs() < 1e-12 && (x.im().abs() - expect).abs() < 1e-12);
        }
        assert!((w[0].im() + w[1].im()).abs() < 1e-12);

        let w = pin_omega(&QuadraticPoint::rho(), &CurveModel::from_i64(0, -1).unwrap(), 1e-9).unwrap();
        assert_eq!(w.len(), 3);
        let p = FrobeniusPoint::from_omega_sq(Point::Exact(QuadraticPoint::rho()), w[0]).unwrap();
        let c = frob_coefficients(&p, 1e-9).unwrap();
        assert!(c.recognized[2].is_some());

        let bad = pin_omega(&QuadraticPoint::sqrt_neg(4), &CurveModel::from_i64(44, -64).unwrap(), 1e-9);
        assert!(matches!(bad, Err(Error::Inconsistent(_))));
    }

    #[test]
    fn weak_symmetry_examples() {
        let p = FrobeniusPoint::new(Point::Exact(QuadraticPoint::i()), omega_gamma_quarter()).unwrap();
        assert!(weak_symmetry(&p, DEFAULT_MAX_DENOMINATOR, 1e-9).unwrap().holds);
        let p = FrobeniusPoint::new(Point::Exact(QuadraticPoint::sqrt_neg(5)), ApproxComplex::one()).unwrap();
        assert!(!weak_symmetry(&p, DEFAULT_MAX_DENOMINATOR, 1e-9).unwrap().holds);

        // ω0² pinned from the row's c0 = 1/16: ω0² = −E2*(2i)/(24 c0)
        let two_i = Point::Exact(QuadraticPoint::sqrt_neg(4));
        let s = crate::modform::e2_star(&two_i, 1e-12).unwrap();
        let p = FrobeniusPoint::from_omega_sq(two_i, -(s / ApproxComplex::real(1.5))).unwrap();
        let ws = weak_symmetry(&p, DEFAULT_MAX_DENOMINATOR, 1e-9).unwrap();
        assert!(ws.holds, "{ws}");

        let approx = FrobeniusPoint::new(Point::approx(0.0, 1.0), ApproxComplex::one()).unwrap();
        assert!(matches!(weak_symmetry(&approx, 10, 1e-9), Err(Error::Unsupported(_))));
    }
}
