use super::solution::AnalyticSolution;
use crate::error::{Error, Result};
use crate::exactnum::ApproxComplex;

/// `F = ½ t1² t + t1 t2² + t2⁴ f(t)`.
pub fn potential_value(
    f: &AnalyticSolution,
    t1: &ApproxComplex,
    t2: &ApproxComplex,
    t: &ApproxComplex,
) -> Result<ApproxComplex> {
    let ft = f.eval(t)?;
    Ok(t1.square() * *t * 0.5 + *t1 * t2.square() + t2.square().square() * ft)
}

/// Image of a point and potential value under the inversion.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct InversionImage {
    pub t1_hat: ApproxComplex,
    pub t2_hat: ApproxComplex,
    pub t_hat: ApproxComplex,
    pub f_hat: ApproxComplex,
}

/// Inversion of the potential in the `t` direction:
/// `t̂1 = t1 + t2²/t`, `t̂2 = t2/t`, `t̂ = −1/t`, `F̂ = t⁻²(F − t1² t − t1 t2²)`.
///
/// With these normalizations `F̂(t̂1, t̂2, t̂)` is the potential built from
/// `gl2_apply(S, f)`, `S = [[0, −1], [1, 0]]`.
pub fn dubrovin_inversion(
    t1: &ApproxComplex,
    t2: &ApproxComplex,
    t: &ApproxComplex,
    potential: impl FnOnce(&ApproxComplex, &ApproxComplex, &ApproxComplex) -> Result<ApproxComplex>,
) -> Result<InversionImage> {
    if !t.is_nonzero() {
        return Err(Error::PoleAtInput("inversion needs t != 0".into()));
    }
    let f = potential(t1, t2, t)?;
    let inv = t.recip();
    Ok(InversionImage {
        t1_hat: *t1 + t2.square() * inv,
        t2_hat: *t2 * inv,
        t_hat: -inv,
        f_hat: (f - t1.square() * *t - *t1 * t2.square()) * inv.square(),
    })
}
