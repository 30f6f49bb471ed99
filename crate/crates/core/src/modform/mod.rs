//! Eisenstein series, the almost-holomorphic `E2*`, its derivatives, j-invariants
//! and the Γ(1/4), Γ(1/3) constants, all as error-bounded balls.
//!
//! Evaluation reduces to the standard fundamental domain, where `|q| ≤ e^{−π√3}`
//! and a handful of terms suffice, then transports back through the modular
//! transformation laws (with the extra term for `E2`).

mod curve;
mod divisor;
mod eisenstein;
mod gamma;
mod quasi;
mod series;
mod transform;

pub use curve::{j_invariant, j_of_point, lattice_invariants, CurveModel, JInput, JValue};
pub use divisor::divisor_sum;
pub use eisenstein::{
    ahd_e2_star, ahd_first, ahd_second, e2_star, eisenstein, EisensteinTriple, EisensteinValue, Weight,
};
pub use gamma::{gamma_constant, GammaConstant};
pub use quasi::{Monomial, QmPoly};
pub use series::{delta_series, eisenstein_q_series, nome, ramanujan_tau, tail_bound, DEFAULT_TERM_BUDGET};
pub use transform::{verify_transform, TransformLaw};
