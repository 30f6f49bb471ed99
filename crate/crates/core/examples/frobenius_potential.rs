//! Evaluating f^(tau0, omega0) and the potential inside its disc, and the series from the recursion.

use rank3_frobenius::exactnum::{ApproxComplex, Point, QuadraticPoint};
use rank3_frobenius::frobenius::{
    f_eval, frob_coefficients, omega_gamma_quarter, potential_eval, FrobeniusPoint, PotentialPoint,
};
use rank3_frobenius::wdvv::extend_coefficients;

fn main() -> rank3_frobenius::Result<()> {
    let p = FrobeniusPoint::new(Point::Exact(QuadraticPoint::i()), omega_gamma_quarter())?;
    let radius = p.domain_radius();
    let t = ApproxComplex::real(radius / 10.0);
    println!("disc radius {radius:.12}");
    println!("f({:.6}) = {}", t.re(), f_eval(&p, &t)?);
    if let Some([c0, c1, c2]) = frob_coefficients(&p, 1e-9)?.exact() {
        let s = extend_coefficients(&c0, &c1, &c2, 12)?;
        println!("degree-12 series: {}", s.jet_approx(&t).value());
    }
    let pt = PotentialPoint { t1: ApproxComplex::real(0.5), t2: ApproxComplex::real(0.25), t };
    println!("F = {}", potential_eval(&p, &pt)?);
    Ok(())
}
