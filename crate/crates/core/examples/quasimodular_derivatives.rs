//! Ramanujan derivation on polynomials in (E2, E4, E6) and the almost-holomorphic derivatives of E2*.

use rank3_frobenius::exactnum::{Point, QuadraticPoint};
use rank3_frobenius::modform::{ahd_e2_star, QmPoly};

fn main() -> rank3_frobenius::Result<()> {
    for n in 1..=3 {
        println!("D^{n} E2 = {}", QmPoly::e2_derivative(n));
    }
    let tau = Point::Exact(QuadraticPoint::sqrt_neg(2));
    for order in 0..=3 {
        println!("d^{order} E2*(sqrt(-2)) = {}", ahd_e2_star(order, &tau, 1e-10)?);
    }
    Ok(())
}
