use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};

use super::jet::{Field, Jet};
use super::solution::{AnalyticSolution, ConstantSolutionParams};
use crate::error::{Error, Result};
use crate::exactnum::{ApproxComplex, Scalar};

fn wdvv_form<F: Field>(j: &Jet<F>, lambda: F) -> F {
    let [f0, f1, f2, f3] = j.d.clone();
    f3 - lambda * (F::from_i64(-24) * f0 * f2 + F::from_i64(36) * f1.clone() * f1)
}

fn chazy_form<F: Field>(j: &Jet<F>, scale: F) -> F {
    // γ = scale · f
    let [g0, g1, g2, g3] = j.scale(&scale).d;
    g3 - F::from_i64(6) * g2 * g0 + F::from_i64(9) * g1.clone() * g1
}

/// `f‴ + 24 f f″ − 36 f′²` at `t` (for the `τ` chart of `f∞`:
/// `h‴ + 48πi h h″ − 72πi h′²`).
pub fn wdvv_residual(f: &AnalyticSolution, t: &ApproxComplex) -> Result<ApproxComplex> {
    let j = f.eval_jet(t)?;
    Ok(wdvv_form(&j, f.equation_scale()))
}

/// Exact WDVV residual at a rational point.
pub fn wdvv_residual_exact(f: &AnalyticSolution, t: &BigRational) -> Result<BigRational> {
    let j = f.eval_jet_exact(t)?;
    Ok(wdvv_form(&j, <BigRational as Field>::one()))
}

/// Chazy residual `γ‴ − 6γγ″ + 9γ′²` for `γ = −4f`
/// (for the `τ` chart: `γ = −4·2πi·h = (πi/3) E2`).
pub fn chazy_residual(f: &AnalyticSolution, t: &ApproxComplex) -> Result<ApproxComplex> {
    let j = f.eval_jet(t)?;
    Ok(chazy_form(&j, f.equation_scale() * -4.0))
}

pub fn chazy_residual_exact(f: &AnalyticSolution, t: &BigRational) -> Result<BigRational> {
    let j = f.eval_jet_exact(t)?;
    Ok(chazy_form(&j, BigRational::from_i64(-4)))
}

/// Residuals of the Halphen closed form
/// `X3 = X4 = −β/(1+βt)`, `X2 = −β/(1+βt) − 6α/(1+βt)²`
/// in `(X2+X3)′ = 2X2X3`, `(X3+X4)′ = 2X3X4`, `(X4+X2)′ = 2X4X2`, plus
/// `−(X2+X3+X4)/6 − f(t)` against the constant solution. Returns the four
/// residuals in that order.
pub fn halphen_residuals<F: Field>(alpha: &F, beta: &F, t: &F) -> Result<[F; 4]> {
    let w = F::one() + beta.clone() * t.clone();
    if w.may_be_zero() {
        return Err(Error::PoleAtInput("1 + beta t vanishes".into()));
    }
    let (a, b) = (alpha.clone(), beta.clone());
    let w2 = w.clone() * w.clone();
    let w3 = w2.clone() * w.clone();
    let x3 = -(b.clone() / w.clone());
    let x4 = x3.clone();
    let x2 = x3.clone() - F::from_i64(6) * a.clone() / w2.clone();
    let dx3 = b.clone() * b.clone() / w2.clone();
    let dx4 = dx3.clone();
    let dx2 = dx3.clone() + F::from_i64(12) * a.clone() * b.clone() / w3;
    let two = F::from_i64(2);
    let r1 = dx2.clone() + dx3.clone() - two.clone() * x2.clone() * x3.clone();
    let r2 = dx3 + dx4.clone() - two.clone() * x3.clone() * x4.clone();
    let r3 = dx4 + dx2 - two * x4.clone() * x2.clone();
    let f = a / w2 + b / (F::from_i64(2) * w);
    let r4 = -(x2 + x3 + x4) / F::from_i64(6) - f;
    Ok([r1, r2, r3, r4])
}

/// Largest Halphen residual magnitude (including the `f` reconstruction).
///
/// Exact parameters with an exact `t` are checked in rational arithmetic.
pub fn halphen_residual(params: &ConstantSolutionParams, t: &Scalar) -> Result<f64> {
    if let (Some((a, b)), Some(tt)) = (params.as_exact(), t.as_exact()) {
        let r = halphen_residuals(a, b, tt)?;
        return Ok(r.iter().map(|x| x.abs().to_f64().unwrap_or(f64::INFINITY)).fold(0.0, f64::max));
    }
    let r = halphen_residuals(&params.alpha.to_approx(), &params.beta.to_approx(), &t.to_approx())?;
    Ok(r.iter().map(|x| x.abs_mid()).fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::wdvv::{constant_solution, FInfinityChart};
    use num_traits::Zero;

    #[test]
    fn constant_solutions_are_exact_zeros() {
        let f = constant_solution(ConstantSolutionParams::exact(rat(1, 1), rat(0, 1)));
        assert!(wdvv_residual_exact(&f, &rat(5, 3)).unwrap().is_zero());
        assert_eq!(wdvv_residual(&f, &ApproxComplex::real(0.3)).unwrap().mid.norm(), 0.0);
        let f = constant_solution(ConstantSolutionParams::exact(rat(-3, 7), rat(5, 2)));
        assert!(wdvv_residual_exact(&f, &rat(1, 7)).unwrap().is_zero());
        assert!(chazy_residual_exact(&f, &rat(1, 7)).unwrap().is_zero());
    }

    #[test]
    fn f_infinity_charts() {
        let tau = AnalyticSolution::FInfinity(FInfinityChart::Tau);
        let r = wdvv_residual(&tau, &ApproxComplex::exact(0.0, 1.2)).unwrap();
        assert!(r.abs_mid() <= 1e-8, "{r}");
        let c = chazy_residual(&tau, &ApproxComplex::exact(0.0, 1.5)).unwrap();
        assert!(c.abs_mid() <= 1e-8, "{c}");
        let t = AnalyticSolution::FInfinity(FInfinityChart::T);
        let x = ApproxComplex::i() * ApproxComplex::pi() * 2.0 * ApproxComplex::exact(0.0, 1.1);
        assert!(chazy_residual(&t, &x).unwrap().abs_mid() <= 1e-8);
        assert!(wdvv_residual(&t, &x).unwrap().abs_mid() <= 1e-8);
        let m = AnalyticSolution::FInfinity(FInfinityChart::Modular);
        assert!(wdvv_residual(&m, &ApproxComplex::exact(0.3, 0.9)).unwrap().abs_mid() <= 1e-8);
        assert!(matches!(wdvv_residual(&tau, &ApproxComplex::exact(0.0, -1.0)), Err(Error::OutsideDomain(_))));
    }

    #[test]
    fn halphen_closed_form() {
        let zero = ConstantSolutionParams::exact(rat(0, 1), rat(0, 1));
        assert_eq!(halphen_residual(&zero, &Scalar::Exact(rat(1, 3))).unwrap(), 0.0);
        let p = ConstantSolutionParams::exact(rat(1, 1), rat(2, 1));
        assert_eq!(halphen_residual(&p, &Scalar::Exact(rat(1, 5))).unwrap(), 0.0);
        let pa = ConstantSolutionParams::approx(ApproxComplex::real(1.0), ApproxComplex::real(2.0));
        assert!(halphen_residual(&pa, &Scalar::Approx(ApproxComplex::real(0.2))).unwrap() <= 1e-12);
        assert!(matches!(halphen_residual(&p, &Scalar::Exact(rat(-1, 2))), Err(Error::PoleAtInput(_))));
    }
}
