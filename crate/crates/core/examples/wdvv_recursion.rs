//! Taylor coefficients from the WDVV recursion, and residuals of the equation.

use rank3_frobenius::exactnum::{rat, ApproxComplex};
use rank3_frobenius::wdvv::{
    extend_coefficients, wdvv_residual, wdvv_residual_exact, AnalyticSolution, FInfinityChart,
};

fn main() -> rank3_frobenius::Result<()> {
    let series = extend_coefficients(&rat(0, 1), &rat(1, 24), &rat(0, 1), 10)?;
    for (n, c) in series.coeffs().iter().enumerate() {
        println!("c{n} = {c}");
    }
    let f = AnalyticSolution::series(series, 1.0);
    println!("exact residual at t = 1/10: {}", wdvv_residual_exact(&f, &rat(1, 10))?);

    let finf = AnalyticSolution::FInfinity(FInfinityChart::Tau);
    let r = wdvv_residual(&finf, &ApproxComplex::exact(0.2, 0.9))?;
    println!("f-infinity residual at 0.2+0.9i: {r}");
    Ok(())
}
