//! The rational family f = alpha/(1+beta t)^2 + beta/(2(1+beta t)): Halphen residuals and recovery of (alpha, beta).

use rank3_frobenius::exactnum::{rat, Scalar};
use rank3_frobenius::wdvv::{
    constant_solution, cubic_discriminant, halphen_residual, recover_alpha_beta, ConstantSolutionParams,
};

fn main() -> rank3_frobenius::Result<()> {
    let params = ConstantSolutionParams::exact(rat(-2, 5), rat(3, 7));
    let f = constant_solution(params.clone());
    let [c0, c1, c2, c3] = f.taylor_at_zero_exact()?;
    println!("c = ({c0}, {c1}, {c2}, {c3})");
    println!("cubic discriminant = {}", cubic_discriminant(&c0, &c1, &c2));
    let back = recover_alpha_beta(&c0, &c1, &c2)?;
    println!("recovered alpha, beta = {:?}", back.as_exact());
    println!("Halphen residual at t = 1/4: {:.2e}", halphen_residual(&params, &Scalar::Exact(rat(1, 4)))?);
    Ok(())
}
