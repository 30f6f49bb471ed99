//! Residuals of the SL(2,Z) transformation laws for E2, E4, E6 and E2*.

use rank3_frobenius::exactnum::{Moebius, Point};
use rank3_frobenius::modform::{verify_transform, TransformLaw};

fn main() {
    let tau = Point::approx(0.13, 0.91);
    let words = [Moebius::s(), Moebius::t(), Moebius::from_i64(2, 1, 5, 3), Moebius::from_i64(-3, 2, 7, -5)];
    for a in &words {
        for law in [TransformLaw::E2, TransformLaw::E4, TransformLaw::E6, TransformLaw::E2Star] {
            match verify_transform(law, a, &tau, 1e-9) {
                Ok(r) => println!("{a} {law:?}: residual {r:.2e}"),
                Err(e) => println!("{a} {law:?}: {e}"),
            }
        }
    }
}
