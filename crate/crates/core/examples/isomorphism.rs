//! The SL(2,R) action on (tau0, omega0) and the isomorphism test.

use rank3_frobenius::exactnum::{ApproxComplex, Moebius, Point, QuadraticPoint};
use rank3_frobenius::frobenius::{are_isomorphic, sl2_act, FrobeniusPoint};

fn main() -> rank3_frobenius::Result<()> {
    let i = Point::Exact(QuadraticPoint::i());
    let p = FrobeniusPoint::new(i.clone(), ApproxComplex::one())?;
    let q = FrobeniusPoint::new(i, ApproxComplex::i())?;
    println!("(i, 1) vs (i, i): {}", are_isomorphic(&p, &q, 1e-10)?);

    let base = FrobeniusPoint::new(Point::Exact(QuadraticPoint::new(1, 1, 3, 5)?), ApproxComplex::exact(0.8, -0.3))?;
    let moved = sl2_act(&Moebius::from_i64(3, 1, 2, 1), &base)?;
    println!("{base} -> {moved}");
    println!("{}", are_isomorphic(&base, &moved, 1e-9)?);

    let two_i = FrobeniusPoint::new(Point::Exact(QuadraticPoint::sqrt_neg(4)), ApproxComplex::one())?;
    let three_i = FrobeniusPoint::new(Point::Exact(QuadraticPoint::sqrt_neg(9)), ApproxComplex::one())?;
    println!("(2i, 1) vs (3i, 1): {}", are_isomorphic(&two_i, &three_i, 1e-10)?);
    Ok(())
}
