use std::f64::consts::PI;

use crate::exactnum::{ApproxComplex, U};

/// The two Γ values that normalize ω at the points `i` and `ρ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaConstant {
    /// Γ(1/4)
    Quarter,
    /// Γ(1/3)
    Third,
}

fn agm(mut a: f64, mut b: f64) -> f64 {
    for _ in 0..64 {
        let (na, nb) = ((a + b) / 2.0, (a * b).sqrt());
        if (na - nb).abs() <= 2.0 * U * na {
            return na;
        }
        a = na;
        b = nb;
    }
    a
}

/// Γ(1/4) or Γ(1/3) from the arithmetic-geometric mean.
///
/// `Γ(1/4)² = (2π)^{3/2} / M(1, √2)` and
/// `Γ(1/3)³ = 2^{4/3} π² / (3^{1/4} M(1, (√6 + √2)/4))`.
/// The radius covers roughly thirty correctly rounded operations.
pub fn gamma_constant(which: GammaConstant) -> ApproxComplex {
    let v = match which {
        GammaConstant::Quarter => ((2.0 * PI).powf(1.5) / agm(1.0, 2f64.sqrt())).sqrt(),
        GammaConstant::Third => {
            let m = agm(1.0, (6f64.sqrt() + 2f64.sqrt()) / 4.0);
            (2f64.powf(4.0 / 3.0) * PI * PI / (3f64.powf(0.25) * m)).cbrt()
        }
    };
    ApproxComplex::with_err(v, 0.0, 64.0 * U * v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_digits() {
        let g = gamma_constant(GammaConstant::Quarter);
        assert!((g.re() - 3.625609908221908).abs() < 1e-14);
        let g = gamma_constant(GammaConstant::Third);
        assert!((g.re() - 2.678938534707748).abs() < 1e-14);
    }
}
