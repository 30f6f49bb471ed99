//! Solutions of `f‴ = −24 f f″ + 36 f′²`: exact Taylor recursion, residual
//! checks, the `GL(2, C)` action, constant solutions and the inversion of the
//! potential.

mod constant;
mod dubrovin;
mod jet;
mod residual;
mod solution;
mod taylor;

pub use constant::{cubic_discriminant, halphen_cubic, recover_alpha_beta};
pub use dubrovin::{dubrovin_inversion, potential_value, InversionImage};
pub use jet::{Field, Jet};
pub use residual::{
    chazy_residual, chazy_residual_exact, halphen_residual, halphen_residuals, wdvv_residual, wdvv_residual_exact,
};
pub use solution::{
    constant_solution, gl2_apply, jet_to_balls, AnalyticSolution, ConstantSolutionParams, FInfinityChart,
};
pub use taylor::{
    extend_coefficients, extend_coefficients_approx, extend_coefficients_with_ceiling, RationalTaylor, DEFAULT_CEILING,
};
