//! j from a point (numerically) and from a Weierstrass model (exactly).

use rank3_frobenius::exactnum::{Point, QuadraticPoint};
use rank3_frobenius::modform::{j_invariant, CurveModel, JInput, JValue};

fn main() -> rank3_frobenius::Result<()> {
    for d in [1, 2, 3, 7] {
        let tau = QuadraticPoint::sqrt_neg(d);
        if let JValue::Approx(j) = j_invariant(&JInput::Point(Point::Exact(tau.clone())), 1e-9)? {
            println!("j({tau}) = {:.6}", j.re());
        }
    }
    let heegner = QuadraticPoint::half_odd(163);
    if let JValue::Approx(j) = j_invariant(&JInput::Point(Point::Exact(heegner.clone())), 1e-9)? {
        println!("j({heegner}) = {:.15e}", j.re());
    }
    let curve = CurveModel::from_i64(60, -88)?;
    if let JValue::Exact(j) = j_invariant(&JInput::Curve(curve.clone()), 0.0)? {
        println!("y^2 = 4x^3 - 60x + 88: j = {j}, Delta = {}", curve.discriminant());
    }
    Ok(())
}
