//! Symmetry, CM over Q, weak symmetry and omega0 pinned by a Weierstrass model.

use num_bigint::BigInt;
use rank3_frobenius::exactnum::{Point, QuadraticPoint};
use rank3_frobenius::frobenius::{
    classify_cm, has_symmetry, pin_omega, weak_symmetry, FrobeniusPoint, DEFAULT_MAX_DENOMINATOR,
};
use rank3_frobenius::modform::CurveModel;

fn main() -> rank3_frobenius::Result<()> {
    let moduli = [
        QuadraticPoint::i(),
        QuadraticPoint::rho(),
        QuadraticPoint::half_odd(7),
        QuadraticPoint::sqrt_neg(2).translate(&BigInt::from(5)),
        QuadraticPoint::sqrt_neg(5),
    ];
    for tau in &moduli {
        let sym = has_symmetry(&Point::Exact(tau.clone()))?;
        println!("{tau}: symmetric {sym}; {}", classify_cm(tau)?);
    }
    let tau = QuadraticPoint::sqrt_neg(3);
    let candidates = pin_omega(&tau, &CurveModel::from_i64(60, -88)?, 1e-9)?;
    for w in candidates {
        let p = FrobeniusPoint::from_omega_sq(Point::Exact(tau.clone()), w)?;
        println!("omega0^2 = {w}: {}", weak_symmetry(&p, DEFAULT_MAX_DENOMINATOR, 1e-9)?);
    }
    Ok(())
}
