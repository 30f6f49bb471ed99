use super::eisenstein::{star_shift, EisensteinTriple, Weight};
use super::series::{eisenstein_q_series, DEFAULT_TERM_BUDGET};
use crate::error::{Error, Result};
use crate::exactnum::{ApproxComplex, Moebius, Point};

/// Which transformation law to check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransformLaw {
    E2,
    E4,
    E6,
    E2Star,
}

/// Below this imaginary part the q-series is no longer summed directly.
const DIRECT_MIN_IM: f64 = 0.05;

fn value_at(law: TransformLaw, z: &ApproxComplex) -> Result<ApproxComplex> {
    if z.im() >= DIRECT_MIN_IM {
        let s = |k| eisenstein_q_series(k, z, 0, DEFAULT_TERM_BUDGET);
        return Ok(match law {
            TransformLaw::E2 => s(Weight::Two)?,
            TransformLaw::E4 => s(Weight::Four)?,
            TransformLaw::E6 => s(Weight::Six)?,
            TransformLaw::E2Star => s(Weight::Two)? - star_shift(z),
        });
    }
    let t = EisensteinTriple::at(&Point::Approx(*z))?;
    Ok(match law {
        TransformLaw::E2 => t.e2,
        TransformLaw::E4 => t.e4,
        TransformLaw::E6 => t.e6,
        TransformLaw::E2Star => t.e2_star,
    })
}

/// `|LHS − RHS|` of the transformation law of `law` under an integer matrix `A` with det 1.
///
/// `E_k(Aτ) = (cτ+d)^k E_k(τ)` for `k = 4, 6` and for `E2*` (weight 2);
/// `E2(Aτ) = (cτ+d)² E2(τ) + 6c(cτ+d)/(πi)`. Both sides are summed directly
/// when the points are high enough; otherwise they go through reduction.
/// Fails when the combined radius of the two sides exceeds `tol`.
pub fn verify_transform(law: TransformLaw, a: &Moebius, tau: &Point, tol: f64) -> Result<f64> {
    let entries = a.i64_entries().ok_or_else(|| Error::Unsupported("matrix must have integer entries".into()))?;
    if entries[0] * entries[3] - entries[1] * entries[2] != 1 {
        return Err(Error::Unsupported("matrix must have determinant 1".into()));
    }
    tau.check_upper()?;
    let z = tau.embed();
    let j = a.automorphy_factor(&z);
    if !j.is_nonzero() {
        return Err(Error::PoleAtInput(format!("c τ + d vanishes at {z}")));
    }
    let w = a.apply_approx(&z)?;
    let lhs = value_at(law, &w)?;
    let base = value_at(law, &z)?;
    let rhs = match law {
        TransformLaw::E2 => {
            let c = ApproxComplex::from_i64(entries[2]);
            j.square() * base - ApproxComplex::i() * c * j * 6.0 / ApproxComplex::pi()
        }
        TransformLaw::E4 => j.powi(4) * base,
        TransformLaw::E6 => j.powi(6) * base,
        TransformLaw::E2Star => j.square() * base,
    };
    let radius = lhs.err + rhs.err;
    if radius > tol {
        return Err(Error::PrecisionUnreachable { requested: tol, achieved: radius });
    }
    Ok((lhs.mid - rhs.mid).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_and_translation() {
        let tau = Point::approx(0.0, 1.3);
        for law in [TransformLaw::E2, TransformLaw::E4, TransformLaw::E6, TransformLaw::E2Star] {
            assert_eq!(verify_transform(law, &Moebius::identity(), &tau, 1e-10).unwrap(), 0.0);
            assert!(verify_transform(law, &Moebius::t(), &Point::approx(0.23, 0.8), 1e-10).unwrap() < 1e-13);
        }
    }

    #[test]
    fn inversion_at_2i() {
        let r = verify_transform(TransformLaw::E4, &Moebius::s(), &Point::approx(0.0, 2.0), 1e-10).unwrap();
        assert!(r <= 1e-10, "{r}");
        let r = verify_transform(TransformLaw::E2, &Moebius::s(), &Point::approx(0.1, 1.5), 1e-10).unwrap();
        assert!(r <= 1e-10, "{r}");
    }

    #[test]
    fn rejects_non_modular() {
        let m = Moebius::from_i64(2, 0, 0, 1);
        assert!(verify_transform(TransformLaw::E4, &m, &Point::approx(0.0, 1.0), 1e-10).is_err());
    }
}
