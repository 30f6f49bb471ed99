//! c0, c1, c2 at (tau0, omega0) and the rationality verdict at the two symmetric points.

use rank3_frobenius::exactnum::{ApproxComplex, Point, QuadraticPoint};
use rank3_frobenius::frobenius::{
    frob_coefficients, omega_gamma_quarter, omega_gamma_third, rationality_verdict, FrobeniusPoint,
    DEFAULT_MAX_DENOMINATOR,
};

fn main() -> rank3_frobenius::Result<()> {
    let points = [
        FrobeniusPoint::new(Point::Exact(QuadraticPoint::i()), omega_gamma_quarter())?,
        FrobeniusPoint::new(Point::Exact(QuadraticPoint::rho()), omega_gamma_third())?,
        FrobeniusPoint::new(Point::Exact(QuadraticPoint::i()), ApproxComplex::one())?,
        FrobeniusPoint::new(Point::approx(0.2, 1.3), ApproxComplex::exact(0.5, 0.1))?,
    ];
    for p in &points {
        println!("{p}");
        println!("  {}", frob_coefficients(p, 1e-9)?);
        println!("  {}", rationality_verdict(p, DEFAULT_MAX_DENOMINATOR, 1e-9)?);
    }
    Ok(())
}
