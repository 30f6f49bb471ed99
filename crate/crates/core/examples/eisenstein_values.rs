//! E2, E4, E6 and E2* at the elliptic points and at a point that needs reduction.

use rank3_frobenius::exactnum::{Point, QuadraticPoint};
use rank3_frobenius::modform::{e2_star, eisenstein, gamma_constant, GammaConstant, Weight};
use std::f64::consts::PI;

fn main() -> rank3_frobenius::Result<()> {
    let i = Point::Exact(QuadraticPoint::i());
    let rho = Point::Exact(QuadraticPoint::rho());
    for (name, tau) in [("i", &i), ("rho", &rho), ("0.5i", &Point::approx(0.0, 0.5))] {
        println!("tau = {name}");
        for k in [Weight::Two, Weight::Four, Weight::Six] {
            let v = eisenstein(k, tau, 1e-12)?.value;
            println!("  E{} = {v}", k.k());
        }
        println!("  E2* = {}", e2_star(tau, 1e-12)?);
    }
    let e2 = eisenstein(Weight::Two, &i, 1e-12)?.value;
    println!("pi E2(i) - 3 = {:.3e}", e2.re() * PI - 3.0);
    let e4 = eisenstein(Weight::Four, &i, 1e-12)?.value;
    let g = gamma_constant(GammaConstant::Quarter);
    println!("64 pi^6 E4(i)/3 = {:.10}, Gamma(1/4)^8 = {:.10}", 64.0 * PI.powi(6) * e4.re() / 3.0, g.re().powi(8));
    Ok(())
}
