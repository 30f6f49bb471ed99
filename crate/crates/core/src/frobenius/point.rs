use std::fmt;

use crate::error::{Error, Result};
use crate::exactnum::{moebius_apply, ApproxComplex, Moebius, Point};
use crate::modform::{gamma_constant, GammaConstant};

/// A pair `(τ0, ω0)` with `τ0` in the upper half plane and `ω0 ≠ 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct FrobeniusPoint {
    tau0: Point,
    omega0: ApproxComplex,
}

impl FrobeniusPoint {
    pub fn new(tau0: Point, omega0: ApproxComplex) -> Result<Self> {
        tau0.check_upper()?;
        if !omega0.is_nonzero() {
            return Err(Error::Unsupported(format!("omega0 = {omega0} is not certainly nonzero")));
        }
        Ok(FrobeniusPoint { tau0, omega0 })
    }

    /// Build from `ω0²`, taking the principal square root (the sign of `ω0`
    /// does not affect any coefficient).
    pub fn from_omega_sq(tau0: Point, omega_sq: ApproxComplex) -> Result<Self> {
        FrobeniusPoint::new(tau0, omega_sq.sqrt())
    }

    pub fn tau0(&self) -> &Point {
        &self.tau0
    }

    pub fn omega0(&self) -> ApproxComplex {
        self.omega0
    }

    pub fn omega_sq(&self) -> ApproxComplex {
        self.omega0.square()
    }

    /// `Im τ0` as a ball.
    pub fn y0(&self) -> ApproxComplex {
        self.tau0.embed().im_part()
    }

    /// `4π ω0² Im τ0`; `|t|` below its modulus is the disc where the
    /// coefficient series converges.
    pub fn domain_scale(&self) -> ApproxComplex {
        ApproxComplex::pi() * 4.0 * self.omega_sq() * self.y0()
    }

    pub fn domain_radius(&self) -> f64 {
        self.domain_scale().abs_lower()
    }
}

impl fmt::Display for FrobeniusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(tau0 = {}, omega0 = {})", self.tau0, self.omega0)
    }
}

/// `Γ(1/4)²/(4π^{3/2})`, the `ω0` that makes the coefficients at `i` rational.
pub fn omega_gamma_quarter() -> ApproxComplex {
    let g = gamma_constant(GammaConstant::Quarter);
    let pi = ApproxComplex::pi();
    g.square() / (pi * pi.sqrt() * 4.0)
}

/// `Γ(1/3)³/(4π²)`, the `ω0` that makes the coefficients at `ρ` rational.
pub fn omega_gamma_third() -> ApproxComplex {
    let g = gamma_constant(GammaConstant::Third);
    g.powi(3) / (ApproxComplex::pi().square() * 4.0)
}

/// `[[τ̄0/(4πω0y0), ω0τ0], [1/(4πω0y0), ω0]]`, with determinant `−i/(2π)`.
pub fn a_matrix(p: &FrobeniusPoint) -> Moebius {
    let tau = p.tau0.embed();
    let w = p.omega0;
    let k = ApproxComplex::pi() * 4.0 * w * p.y0();
    let m = Moebius::from_approx(tau.conj() / k, w * tau, k.recip(), w);
    debug_assert!({
        let det = m.det().to_approx();
        let expect = ApproxComplex::i() / (ApproxComplex::pi() * -2.0);
        (det.mid - expect.mid).norm() <= 1e-9 * (1.0 + w.abs_mid())
    });
    m
}

/// Check that `A` is real with determinant 1 (within its radius).
fn check_real_sl2(a: &Moebius) -> Result<()> {
    let m = a.to_approx();
    let real = [m.a, m.b, m.c, m.d].iter().all(|x| x.im().abs() <= x.err);
    let det = a.det().to_approx();
    if !real || (det.mid - 1.0).norm() > det.err + 1e-12 {
        return Err(Error::Unsupported(format!("expected a real matrix with determinant 1, got {a}")));
    }
    Ok(())
}

/// `(τ0, ω0) ↦ ((aτ0+b)/(cτ0+d), (cτ0+d) ω0)`.
///
/// Exact `τ0` and exact `A` give an exact `τ1`.
pub fn sl2_act(a: &Moebius, p: &FrobeniusPoint) -> Result<FrobeniusPoint> {
    check_real_sl2(a)?;
    let j = a.automorphy_factor(&p.tau0.embed());
    if !j.is_nonzero() {
        return Err(Error::PoleAtInput(format!("c tau0 + d vanishes at {}", p.tau0)));
    }
    let tau1 = match (&p.tau0, a.is_exact()) {
        (Point::Exact(_), true) => moebius_apply(a, &p.tau0)?,
        _ => Point::Approx(a.apply_approx(&p.tau0.embed())?),
    };
    FrobeniusPoint::new(tau1, j * p.omega0)
}

/// `t(τ) = −4π ω0² Im τ0 · (τ0 − τ)/(τ̄0 − τ)`, the inverse of `a_matrix`.
pub fn tau_to_t(p: &FrobeniusPoint, tau: &Point) -> Result<ApproxComplex> {
    let t0 = p.tau0.embed();
    let z = tau.embed();
    let den = t0.conj() - z;
    if !den.is_nonzero() {
        return Err(Error::PoleAtInput(format!("tau = conj(tau0) at {z}")));
    }
    Ok(-p.domain_scale() * (t0 - z) / den)
}
