//! Frobenius manifolds attached to a point `(τ0, ω0)`: coefficients, isomorphism, symmetry and CM.

mod cm;
mod coeffs;
mod iso;
mod point;

pub use cm::{classify_cm, pin_omega, weak_symmetry, CmClassification, WeakSymmetry};
pub use coeffs::{
    coefficients_from_eisenstein, f_eval, frob_coefficients, frobenius_solution, omega_sq_from_coefficient,
    potential_eval, rationality_verdict, CoeffTriple, PotentialPoint, RationalityVerdict, DEFAULT_MAX_DENOMINATOR,
};
pub use iso::{are_isomorphic, has_symmetry, IsoVerdict, SYMMETRY_J_TOL};
pub use point::{a_matrix, omega_gamma_quarter, omega_gamma_third, sl2_act, tau_to_t, FrobeniusPoint};
