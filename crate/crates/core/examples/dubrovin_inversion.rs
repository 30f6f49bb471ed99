//! Inversion of the potential F = t1^2 t/2 + t1 t2^2 + t2^4 f(t), compared with the S action on f.

use rank3_frobenius::exactnum::{rat, ApproxComplex, Moebius};
use rank3_frobenius::wdvv::{
    constant_solution, dubrovin_inversion, gl2_apply, potential_value, ConstantSolutionParams,
};

fn main() -> rank3_frobenius::Result<()> {
    let f = constant_solution(ConstantSolutionParams::exact(rat(1, 2), rat(1, 3)));
    let fs = gl2_apply(&Moebius::s(), &f)?;
    let (t1, t2, t) = (ApproxComplex::real(0.3), ApproxComplex::real(-0.7), ApproxComplex::exact(0.4, 0.2));
    let img = dubrovin_inversion(&t1, &t2, &t, |a, b, c| potential_value(&f, a, b, c))?;
    let direct = potential_value(&fs, &img.t1_hat, &img.t2_hat, &img.t_hat)?;
    println!("inverted potential: {}", img.f_hat);
    println!("potential of f^S:   {direct}");
    Ok(())
}
