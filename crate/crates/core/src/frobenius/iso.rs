use std::fmt;

use num_complex::Complex64;

use super::point::FrobeniusPoint;
use crate::error::Result;
use crate::exactnum::{fundamental_domain_reduce, ApproxComplex, Moebius, Point, QuadraticPoint};
use crate::modform::{j_of_point, EisensteinTriple};

/// Tolerance on `j` used by [`has_symmetry`] for approximate input, relative to `max(1, |j|)`.
pub const SYMMETRY_J_TOL: f64 = 1e-8;

/// Result of [`are_isomorphic`].
#[derive(Clone, Debug, PartialEq)]
pub struct IsoVerdict {
    pub isomorphic: bool,
    /// `|x0 − x1| / max(1, |x0|, |x1|)` for `E2*/ω², E4/ω⁴, E6/ω⁶`.
    pub diffs: [f64; 3],
    /// Integer `A` with `A τ0 = τ1`, found by reduction when both `τ` are exact.
    pub witness: Option<Moebius>,
    /// `ω1^k = (cτ0+d)^k ω0^k` holds for this `k`: 4 on the orbit of `i`, 6 on that of `ρ`, else 2.
    pub k: Option<u32>,
}

impl fmt::Display for IsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "isomorphic: {}", if self.isomorphic { "yes" } else { "no" })?;
        if let Some(k) = self.k {
            write!(f, ", k = {k}")?;
        }
        if let Some(w) = &self.witness {
            write!(f, ", witness {w}")?;
        }
        write!(f, ", diffs [{:.3e}, {:.3e}, {:.3e}]", self.diffs[0], self.diffs[1], self.diffs[2])
    }
}

fn normalized(p: &FrobeniusPoint) -> Result<[ApproxComplex; 3]> {
    let [s, e4, e6] = EisensteinTriple::at(p.tau0())?.star_vars();
    let w2 = p.omega_sq();
    let w4 = w2.square();
    Ok([s / w2, e4 / w4, e6 / (w4 * w2)])
}

/// Which elliptic point a reduced exact point is, if any.
fn orbit_k(reduced: &QuadraticPoint) -> u32 {
    if *reduced == QuadraticPoint::i() {
        4
    } else if *reduced == QuadraticPoint::rho() {
        6
    } else {
        2
    }
}

fn orbit_k_approx(tau: &Point) -> Result<u32> {
    let j = j_of_point(tau)?;
    Ok(if near(&j, 1728.0) {
        4
    } else if near(&j, 0.0) {
        6
    } else {
        2
    })
}

fn near(j: &ApproxComplex, target: f64) -> bool {
    (j.mid - Complex64::new(target, 0.0)).norm() <= j.err + SYMMETRY_J_TOL * j.abs_mid().max(1.0)
}

/// Two points give isomorphic Frobenius manifolds iff `E2*/ω²`, `E4/ω⁴` and `E6/ω⁶` agree.
pub fn are_isomorphic(p0: &FrobeniusPoint, p1: &FrobeniusPoint, tol: f64) -> Result<IsoVerdict> {
    let (a, b) = (normalized(p0)?, normalized(p1)?);
    let mut diffs = [0.0; 3];
    let mut isomorphic = true;
    for n in 0..3 {
        let scale = a[n].abs_mid().max(b[n].abs_mid()).max(1.0);
        diffs[n] = (a[n].mid - b[n].mid).norm() / scale;
        if (a[n].mid - b[n].mid).norm() > tol * scale + a[n].err + b[n].err {
            isomorphic = false;
        }
    }
    let mut witness = None;
    let mut k = None;
    if let (Point::Exact(_), Point::Exact(_)) = (p0.tau0(), p1.tau0()) {
        let r0 = fundamental_domain_reduce(p0.tau0())?;
        let r1 = fundamental_domain_reduce(p1.tau0())?;
        if r0.point == r1.point {
            witness = Some(&r1.matrix.inverse()? * &r0.matrix);
            if isomorphic {
                k = r0.point.as_exact().map(orbit_k);
            }
        }
    } else if isomorphic {
        k = Some(orbit_k_approx(p0.tau0())?);
    }
    Ok(IsoVerdict { isomorphic, diffs, witness, k })
}

/// True iff `τ0` lies in the `SL(2,Z)` orbit of `i` or `ρ`, i.e. `j(τ0) ∈ {0, 1728}`.
///
/// Exact input is decided by reduction; approximate input compares `j` to
/// within [`SYMMETRY_J_TOL`].
pub fn has_symmetry(tau0: &Point) -> Result<bool> {
    let red = fundamental_domain_reduce(tau0)?;
    match &red.point {
        Point::Exact(q) => Ok(orbit_k(q) != 2),
        Point::Approx(_) => Ok(orbit_k_approx(tau0)? != 2),
    }
}
