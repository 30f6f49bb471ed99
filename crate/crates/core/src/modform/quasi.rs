//! Polynomials in `(E2, E4, E6)` with the Ramanujan derivation.
//!
//! The same algebra describes the almost-holomorphic derivative `∂` acting on
//! `(E2*, E4, E6)`, so one implementation serves both.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::exactnum::{rat, rat_to_ball, ApproxComplex};

/// Exponents of `(E2, E4, E6)`.
pub type Monomial = [u32; 3];

const WEIGHTS: [u32; 3] = [2, 4, 6];

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct QmPoly {
    terms: BTreeMap<Monomial, BigRational>,
}

impl QmPoly {
    pub fn zero() -> QmPoly {
        QmPoly::default()
    }

    pub fn constant(c: BigRational) -> QmPoly {
        QmPoly::monomial([0, 0, 0], c)
    }

    pub fn monomial(m: Monomial, c: BigRational) -> QmPoly {
        let mut p = QmPoly::zero();
        p.add_term(m, c);
        p
    }

    /// The generator `E2`, `E4` or `E6` (index 0, 1, 2).
    pub fn var(i: usize) -> QmPoly {
        let mut m = [0; 3];
        m[i] = 1;
        QmPoly::monomial(m, rat(1, 1))
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &QmPoly) -> QmPoly {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c.clone());
        }
        r
    }

    pub fn sub(&self, o: &QmPoly) -> QmPoly {
        self.add(&o.scale(&rat(-1, 1)))
    }

    pub fn scale(&self, k: &BigRational) -> QmPoly {
        let mut r = QmPoly::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, c * k);
        }
        r
    }

    pub fn mul(&self, o: &QmPoly) -> QmPoly {
        let mut r = QmPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term([m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2]], c1 * c2);
            }
        }
        r
    }

    /// Weight when every monomial has the same weight.
    pub fn weight(&self) -> Option<u32> {
        let mut ws = self.terms.keys().map(|m| m.iter().zip(WEIGHTS).map(|(e, w)| e * w).sum::<u32>());
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    /// `D(E2) = (E2² − E4)/12`, `D(E4) = (E2E4 − E6)/3`, `D(E6) = (E2E6 − E4²)/2`.
    pub fn generator_derivative(i: usize) -> QmPoly {
        let (e2, e4, e6) = (QmPoly::var(0), QmPoly::var(1), QmPoly::var(2));
        match i {
            0 => e2.mul(&e2).sub(&e4).scale(&rat(1, 12)),
            1 => e2.mul(&e4).sub(&e6).scale(&rat(1, 3)),
            _ => e2.mul(&e6).sub(&e4.mul(&e4)).scale(&rat(1, 2)),
        }
    }

    /// Apply the derivation (Leibniz rule on every monomial).
    pub fn derive(&self) -> QmPoly {
        let ders: Vec<QmPoly> = (0..3).map(QmPoly::generator_derivative).collect();
        let mut r = QmPoly::zero();
        for (m, c) in &self.terms {
            for i in 0..3 {
                if m[i] == 0 {
                    continue;
                }
                let mut rest = *m;
                rest[i] -= 1;
                let factor = BigRational::from_integer(m[i].into());
                let term = QmPoly::monomial(rest, c * factor).mul(&ders[i]);
                r = r.add(&term);
            }
        }
        r
    }

    /// `D^n E2` (equivalently `∂^n E2*` in the starred variables).
    pub fn e2_derivative(n: u32) -> QmPoly {
        let mut p = QmPoly::var(0);
        for _ in 0..n {
            p = p.derive();
        }
        p
    }

    /// Evaluate at `(E2, E4, E6)` (or `(E2*, E4, E6)`).
    pub fn eval(&self, v: &[ApproxComplex; 3]) -> ApproxComplex {
        let mut acc = ApproxComplex::zero();
        for (m, c) in &self.terms {
            let mut t = rat_to_ball(c);
            for i in 0..3 {
                if m[i] > 0 {
                    t = t * v[i].powi(m[i] as i32);
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl fmt::Display for QmPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c < &BigRational::zero();
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            write!(f, "{}", c.abs())?;
            for (i, name) in ["E2", "E4", "E6"].iter().enumerate() {
                match m[i] {
                    0 => {}
                    1 => write!(f, "*{name}")?,
                    e => write!(f, "*{name}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_derivative_closed_form() {
        let (e2, e4, e6) = (QmPoly::var(0), QmPoly::var(1), QmPoly::var(2));
        let closed =
            e6.sub(&e2.mul(&e4).scale(&rat(3, 2))).add(&e2.mul(&e2).mul(&e2).scale(&rat(1, 2))).scale(&rat(1, 36));
        assert_eq!(QmPoly::e2_derivative(2), closed);
        assert_eq!(closed.weight(), Some(6));
    }

    #[test]
    fn derivation_raises_weight_by_two() {
        let p = QmPoly::var(1).mul(&QmPoly::var(2)).add(&QmPoly::var(0).mul(&QmPoly::var(2)).mul(&QmPoly::var(0)));
        assert_eq!(p.weight(), Some(10));
        assert_eq!(p.derive().weight(), Some(12));
        assert_eq!(QmPoly::e2_derivative(3).weight(), Some(8));
    }

    #[test]
    fn display() {
        assert_eq!(QmPoly::e2_derivative(1).to_string(), "1/12*E2^2 - 1/12*E4");
    }
}
