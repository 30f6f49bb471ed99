//! The GL(2,C) action on solutions: f^A and its composition law.

use rank3_frobenius::exactnum::{rat, ApproxComplex, Moebius};
use rank3_frobenius::wdvv::{constant_solution, gl2_apply, wdvv_residual, ConstantSolutionParams};

fn main() -> rank3_frobenius::Result<()> {
    let f = constant_solution(ConstantSolutionParams::exact(rat(1, 3), rat(2, 1)));
    let a = Moebius::from_i64(2, 1, 1, 1);
    let b = Moebius::from_i64(1, -1, 3, -2);
    let t = ApproxComplex::exact(0.1, 0.3);
    let fa = gl2_apply(&a, &f)?;
    println!("f(t) = {}", f.eval(&t)?);
    println!("f^A(t) = {}, residual {}", fa.eval(&t)?, wdvv_residual(&fa, &t)?);
    let sequential = gl2_apply(&a, &gl2_apply(&b, &f)?)?.eval(&t)?;
    let product = gl2_apply(&(&b * &a), &f)?.eval(&t)?;
    println!("(f^B)^A(t) = {sequential}");
    println!("f^(BA)(t)  = {product}");
    Ok(())
}
