use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::point::{a_matrix, FrobeniusPoint};
use crate::error::{Error, Result};
use crate::exactnum::{rat_to_ball, rational_recognize, ApproxComplex};
use crate::modform::EisensteinTriple;
use crate::wdvv::{gl2_apply, potential_value, AnalyticSolution, FInfinityChart};

/// Denominator bound used when none is given.
pub const DEFAULT_MAX_DENOMINATOR: u64 = 1_000_000;

/// `(c0, c1, c2)` of `f^(τ0,ω0)` with any rational forms that were recognized.
#[derive(Clone, Debug, PartialEq)]
pub struct CoeffTriple {
    pub c: [ApproxComplex; 3],
    pub recognized: [Option<BigRational>; 3],
}

impl CoeffTriple {
    /// All three recognized, if they were.
    pub fn exact(&self) -> Option<[BigRational; 3]> {
        match &self.recognized {
            [Some(a), Some(b), Some(c)] => Some([a.clone(), b.clone(), c.clone()]),
            _ => None,
        }
    }

    /// Invert the closed forms: `E2* = −24 c0 ω0²`, `E4 = 288 (c1 + 2c0²) ω0⁴`,
    /// `E6 = −864 (c2 + 12 c0 c1 + 16 c0³) ω0⁶`.
    pub fn eisenstein_values(&self, omega_sq: ApproxComplex) -> [ApproxComplex; 3] {
        let [c0, c1, c2] = self.c;
        let w4 = omega_sq.square();
        [
            c0 * omega_sq * -24.0,
            (c1 + c0.square() * 2.0) * w4 * 288.0,
            (c2 + c0 * c1 * 12.0 + c0.powi(3) * 16.0) * w4 * omega_sq * -864.0,
        ]
    }
}

impl fmt::Display for CoeffTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (n, (c, r)) in self.c.iter().zip(&self.recognized).enumerate() {
            if n > 0 {
                write!(f, ", ")?;
            }
            match r {
                Some(q) => write!(f, "c{n} = {q}")?,
                None => write!(f, "c{n} = {c}")?,
            }
        }
        Ok(())
    }
}

/// Closed forms from `(E2*, E4, E6)` and `ω0²`:
/// `c0 = −E2*/(24ω0²)`, `c1 = −2c0² + E4/(288ω0⁴)`, `c2 = −E6/(864ω0⁶) − 12c0c1 − 16c0³`.
pub fn coefficients_from_eisenstein(vars: &[ApproxComplex; 3], omega_sq: ApproxComplex) -> [ApproxComplex; 3] {
    let [s, e4, e6] = *vars;
    let w4 = omega_sq.square();
    let w6 = w4 * omega_sq;
    let c0 = -(s / (omega_sq * 24.0));
    let c1 = c0.square() * -2.0 + e4 / (w4 * 288.0);
    let c2 = -(e6 / (w6 * 864.0)) - c0 * c1 * 12.0 - c0.powi(3) * 16.0;
    [c0, c1, c2]
}

/// `ω0²` making the closed form for `c_k` equal `c` at the point with values `(E2*, E4, E6)`:
/// `ω0² = −E2*/(24c0)`, `ω0⁴ = (E4 − E2*²)/(288c1)` or `ω0⁶ = (−E6/864 + E2*(E4 − E2*²)/576 + E2*³/864)/c2`,
/// taking the principal root.
pub fn omega_sq_from_coefficient(k: usize, c: &BigRational, vars: &[ApproxComplex; 3]) -> Result<ApproxComplex> {
    if c.is_zero() {
        return Err(Error::Unsupported(format!("cannot pin omega0 from c{k} = 0")));
    }
    let [s, e4, e6] = *vars;
    let c = rat_to_ball(c);
    let w = match k {
        0 => -(s / (c * 24.0)),
        1 => ((e4 - s.square()) / (c * 288.0)).sqrt(),
        2 => ((-(e6 / 864.0) + s * (e4 - s.square()) / 576.0 + s.powi(3) / 864.0) / c).nth_root(3),
        _ => return Err(Error::Unsupported(format!("only c0, c1, c2 pin omega0, got c{k}"))),
    };
    if !w.is_nonzero() {
        return Err(Error::Inconsistent(format!("pinning from c{k} gives omega0^2 = {w}, not separated from 0")));
    }
    Ok(w)
}

/// `c0, c1, c2` at `P`, each recognized as a rational with denominator at most 10⁶ when possible.
///
/// Values whose radius exceeds `tol` are still returned, but are never recognized.
pub fn frob_coefficients(p: &FrobeniusPoint, tol: f64) -> Result<CoeffTriple> {
    let vars = EisensteinTriple::at(p.tau0())?.star_vars();
    let c = coefficients_from_eisenstein(&vars, p.omega_sq());
    let recognized = c.map(|x| if x.err <= tol { rational_recognize(&x, DEFAULT_MAX_DENOMINATOR) } else { None });
    Ok(CoeffTriple { c, recognized })
}

/// `f^(τ0,ω0) = gl2_apply(a_matrix(P), 2πi f∞)`.
pub fn frobenius_solution(p: &FrobeniusPoint) -> AnalyticSolution {
    gl2_apply(&a_matrix(p), &AnalyticSolution::FInfinity(FInfinityChart::Modular))
        .expect("a_matrix has determinant -i/(2 pi)")
}

/// `f^(τ0,ω0)(t)`.
pub fn f_eval(p: &FrobeniusPoint, t: &ApproxComplex) -> Result<ApproxComplex> {
    let s = p.domain_scale();
    if !(*t + s).is_nonzero() {
        return Err(Error::PoleAtInput(format!("t = -4 pi omega0^2 Im tau0 at {t}")));
    }
    frobenius_solution(p).eval(t)
}

/// Flat coordinates `(t1, t2, t)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PotentialPoint {
    pub t1: ApproxComplex,
    pub t2: ApproxComplex,
    pub t: ApproxComplex,
}

/// `F = ½t1²t + t1t2² + t2⁴ f^(τ0,ω0)(t)` on the disc `|t| < |4πω0² Im τ0|`.
pub fn potential_eval(p: &FrobeniusPoint, pt: &PotentialPoint) -> Result<ApproxComplex> {
    if pt.t.abs_upper() >= p.domain_radius() {
        return Err(Error::OutsideDomain(format!("|t| must stay below {}", p.domain_radius())));
    }
    potential_value(&frobenius_solution(p), &pt.t1, &pt.t2, &pt.t)
}

/// Outcome of the rationality test.
#[derive(Clone, Debug, PartialEq)]
pub enum RationalityVerdict {
    /// All of `c0, c1, c2` were recognized, so every coefficient is rational.
    DefinedOverQ([BigRational; 3]),
    /// At least one coefficient did not match a small rational. This is not a proof of irrationality.
    NotRecognized(CoeffTriple),
}

impl RationalityVerdict {
    pub fn is_defined_over_q(&self) -> bool {
        matches!(self, RationalityVerdict::DefinedOverQ(_))
    }
}

impl fmt::Display for RationalityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RationalityVerdict::DefinedOverQ([a, b, c]) => write!(f, "defined over Q: ({a}, {b}, {c})"),
            RationalityVerdict::NotRecognized(t) => write!(f, "not recognized: {t}"),
        }
    }
}

/// Recognize `(c0, c1, c2)` with the given denominator bound; balls are widened to `tol` first.
pub fn rationality_verdict(p: &FrobeniusPoint, max_denominator: u64, tol: f64) -> Result<RationalityVerdict> {
    let vars = EisensteinTriple::at(p.tau0())?.star_vars();
    let c = coefficients_from_eisenstein(&vars, p.omega_sq());
    let recognized = c.map(|x| {
        let widened = ApproxComplex::new(x.mid, x.err.max(tol));
        rational_recognize(&widened, max_denominator)
    });
    let triple = CoeffTriple { c, recognized };
    Ok(match triple.exact() {
        Some(q) => RationalityVerdict::DefinedOverQ(q),
        None => RationalityVerdict::NotRecognized(triple),
    })
}
