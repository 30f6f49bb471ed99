use std::fmt;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::ToPrimitive;

use super::jet::{Field, Jet};
use super::taylor::RationalTaylor;
use crate::error::{Error, Result};
use crate::exactnum::{rat_to_ball, ApproxComplex, Moebius, Point, Scalar};
use crate::modform::{EisensteinTriple, QmPoly};

/// Coordinate in which the special solution `f∞ = −E2/24` is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FInfinityChart {
    /// `h(τ) = −E2(τ)/24` in the variable `τ`; solves the rescaled equation
    /// `h‴ = 2πi (−24 h h″ + 36 h′²)`.
    Tau,
    /// `f(t) = −E2(t/2πi)/24` in `t = 2πiτ`; solves `f‴ = −24 f f″ + 36 f′²`.
    T,
    /// `g(s) = 2πi f∞(s) = −(πi/12) E2(s)`; solves the plain equation in `s`
    /// and is invariant under `SL(2,Z)`.
    Modular,
}

/// `(α, β)` of `f(t) = α/(1+βt)² + β/(2(1+βt))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConstantSolutionParams {
    pub alpha: Scalar,
    pub beta: Scalar,
}

impl ConstantSolutionParams {
    pub fn exact(alpha: BigRational, beta: BigRational) -> Self {
        ConstantSolutionParams { alpha: Scalar::Exact(alpha), beta: Scalar::Exact(beta) }
    }

    pub fn approx(alpha: ApproxComplex, beta: ApproxComplex) -> Self {
        ConstantSolutionParams { alpha: Scalar::Approx(alpha), beta: Scalar::Approx(beta) }
    }

    pub fn as_exact(&self) -> Option<(&BigRational, &BigRational)> {
        Some((self.alpha.as_exact()?, self.beta.as_exact()?))
    }

    /// `(c0, c1, c2) = (α + β/2, −2αβ − β²/2, 6αβ² + β³)`.
    pub fn taylor_start<F: Field>(alpha: &F, beta: &F) -> [F; 3] {
        let (a, b) = (alpha.clone(), beta.clone());
        let two = F::from_i64(2);
        [
            a.clone() + b.clone() / two.clone(),
            F::from_i64(-2) * a.clone() * b.clone() - b.clone() * b.clone() / two,
            F::from_i64(6) * a * b.clone() * b.clone() + b.clone() * b.clone() * b,
        ]
    }
}

impl fmt::Display for ConstantSolutionParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "alpha = {}, beta = {}", self.alpha, self.beta)
    }
}

/// A solution of the WDVV ODE that can be evaluated with derivatives up to order 3.
#[derive(Clone, Debug, PartialEq)]
pub enum AnalyticSolution {
    FInfinity(FInfinityChart),
    Constant(ConstantSolutionParams),
    Series { taylor: RationalTaylor, radius: f64 },
    Transformed { a: Moebius, inner: Arc<AnalyticSolution> },
}

/// `(1+βt)` and the jet of `α/(1+βt)² + β/(2(1+βt))`.
fn constant_jet<F: Field>(alpha: &F, beta: &F, t: &F) -> Result<Jet<F>> {
    let w = F::one() + beta.clone() * t.clone();
    if w.may_be_zero() {
        return Err(Error::PoleAtInput("1 + beta t vanishes".into()));
    }
    let a = Jet::inverse_power(beta, &w, 2).scale(alpha);
    let b = Jet::inverse_power(beta, &w, 1).scale(&(beta.clone() / F::from_i64(2)));
    Ok(a.add(&b))
}

/// Jet of `det/(ct+d)² · g((at+b)/(ct+d)) + c/(2(ct+d))` given a way to evaluate `g`.
fn transformed_jet<F: Field>([a, b, c, d]: [F; 4], t: &F, inner: impl FnOnce(&F) -> Result<Jet<F>>) -> Result<Jet<F>> {
    let j = c.clone() * t.clone() + d.clone();
    if j.may_be_zero() {
        return Err(Error::PoleAtInput("c t + d vanishes".into()));
    }
    let det = a.clone() * d - b.clone() * c.clone();
    let m = (a * t.clone() + b) / j.clone();
    // m′ = det/(ct+d)², so the jet of m is det times the jet of (ct+d)^{-2}, shifted by one order
    let u = Jet::inverse_power(&c, &j, 2);
    let mj =
        Jet::new(m.clone(), det.clone() * u.d[0].clone(), det.clone() * u.d[1].clone(), det.clone() * u.d[2].clone());
    let g = inner(&m)?;
    let composed = Jet::compose(&g, &mj);
    let main = composed.mul(&u).scale(&det);
    let shift = Jet::inverse_power(&c, &j, 1).scale(&(c.clone() / F::from_i64(2)));
    Ok(main.add(&shift))
}

fn two_pi_i() -> ApproxComplex {
    ApproxComplex::i() * ApproxComplex::pi() * 2.0
}

impl AnalyticSolution {
    /// Scalar `λ` with `f‴ = λ(−24 f f″ + 36 f′²)`; `2πi` for the `τ` chart, else 1.
    pub fn equation_scale(&self) -> ApproxComplex {
        match self {
            AnalyticSolution::FInfinity(FInfinityChart::Tau) => two_pi_i(),
            _ => ApproxComplex::one(),
        }
    }

    /// Derivatives up to order 3 at `t`, as balls.
    pub fn eval_jet(&self, t: &ApproxComplex) -> Result<Jet<ApproxComplex>> {
        match self {
            AnalyticSolution::FInfinity(chart) => f_infinity_jet(*chart, t),
            AnalyticSolution::Constant(p) => constant_jet(&p.alpha.to_approx(), &p.beta.to_approx(), t),
            AnalyticSolution::Series { taylor, radius } => {
                if t.abs_upper() >= *radius {
                    return Err(Error::OutsideDomain(format!("|t| must stay below the radius {radius}")));
                }
                Ok(taylor.jet_approx(t))
            }
            AnalyticSolution::Transformed { a, inner } => {
                let m = a.to_approx();
                transformed_jet([m.a, m.b, m.c, m.d], t, |s| inner.eval_jet(s))
            }
        }
    }

    /// Exact derivatives at a rational `t`, when every ingredient is exact.
    pub fn eval_jet_exact(&self, t: &BigRational) -> Result<Jet<BigRational>> {
        match self {
            AnalyticSolution::FInfinity(_) => Err(Error::Unsupported("f-infinity has no exact evaluation".into())),
            AnalyticSolution::Constant(p) => {
                let (alpha, beta) = p.as_exact().ok_or_else(|| Error::Unsupported("approximate alpha, beta".into()))?;
                constant_jet(alpha, beta, t)
            }
            AnalyticSolution::Series { taylor, radius } => {
                if t.to_f64().is_none_or(|v| v.abs() >= *radius) {
                    return Err(Error::OutsideDomain(format!("|t| must stay below the radius {radius}")));
                }
                Ok(taylor.jet_exact(t))
            }
            AnalyticSolution::Transformed { a, inner } => {
                let m = a.exact().ok_or(Error::NonExactMatrix)?;
                transformed_jet([m.a.clone(), m.b.clone(), m.c.clone(), m.d.clone()], t, |s| inner.eval_jet_exact(s))
            }
        }
    }

    /// `f(t)`.
    pub fn eval(&self, t: &ApproxComplex) -> Result<ApproxComplex> {
        Ok(self.eval_jet(t)?.d[0])
    }

    /// Taylor coefficients `(c0, c1, c2, c3)` at `t = 0`, exactly.
    pub fn taylor_at_zero_exact(&self) -> Result<[BigRational; 4]> {
        let j = self.eval_jet_exact(&BigRational::from_integer(0.into()))?;
        Ok(j.d)
    }

    /// A series solution with the given radius of validity.
    pub fn series(taylor: RationalTaylor, radius: f64) -> Self {
        AnalyticSolution::Series { taylor, radius }
    }
}

fn f_infinity_jet(chart: FInfinityChart, x: &ApproxComplex) -> Result<Jet<ApproxComplex>> {
    let tpi = two_pi_i();
    let tau = match chart {
        FInfinityChart::T => *x / tpi,
        _ => *x,
    };
    let p = Point::Approx(tau);
    p.check_upper().map_err(|_| Error::OutsideDomain(format!("tau = {tau} is not in the upper half plane")))?;
    let t = EisensteinTriple::at(&p)?;
    let vars = [t.e2, t.e4, t.e6];
    // D^n E2 with D = q d/dq
    let mut d = [ApproxComplex::zero(); 4];
    for (n, slot) in d.iter_mut().enumerate() {
        *slot = QmPoly::e2_derivative(n as u32).eval(&vars);
    }
    let (outer, step) = match chart {
        FInfinityChart::T => (ApproxComplex::one(), ApproxComplex::one()),
        FInfinityChart::Tau => (ApproxComplex::one(), tpi),
        FInfinityChart::Modular => (tpi, tpi),
    };
    let mut scale = outer / -24.0;
    let mut out = [ApproxComplex::zero(); 4];
    for n in 0..4 {
        out[n] = d[n] * scale;
        scale = scale * step;
    }
    Ok(Jet { d: out })
}

/// `f^A(t) = det A/(ct+d)² · f((at+b)/(ct+d)) + c/(2(ct+d))`.
///
/// This is a right action: `gl2_apply(A, gl2_apply(B, f))` equals
/// `gl2_apply(B·A, f)`.
pub fn gl2_apply(a: &Moebius, f: &AnalyticSolution) -> Result<AnalyticSolution> {
    if !a.is_invertible() {
        return Err(Error::SingularMatrix);
    }
    Ok(AnalyticSolution::Transformed { a: a.clone(), inner: Arc::new(f.clone()) })
}

/// `f(t) = α/(1+βt)² + β/(2(1+βt))`.
pub fn constant_solution(params: ConstantSolutionParams) -> AnalyticSolution {
    AnalyticSolution::Constant(params)
}

/// Embed an exact jet as balls (used to compare exact and approximate paths).
pub fn jet_to_balls(j: &Jet<BigRational>) -> Jet<ApproxComplex> {
    Jet { d: [rat_to_ball(&j.d[0]), rat_to_ball(&j.d[1]), rat_to_ball(&j.d[2]), rat_to_ball(&j.d[3])] }
}
