use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ball::ApproxComplex;

/// Half-width of the acceptance window around `x`: `max(err, 1e−9·max(1, |x|))`.
pub fn recognition_window(x: &ApproxComplex) -> f64 {
    x.err.max(1e-9 * x.abs_mid().max(1.0))
}

/// Continued-fraction convergents of an exact rational, stopping once the
/// denominator exceeds `max_den`.
fn convergents(x: &BigRational, max_den: &BigInt) -> Vec<BigRational> {
    let mut out = Vec::new();
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut rest = x.clone();
    loop {
        let a = rest.floor().to_integer();
        let h = &a * &h1 + &h0;
        let k = &a * &k1 + &k0;
        if &k > max_den {
            break;
        }
        out.push(BigRational::new(h.clone(), k.clone()));
        (h0, h1) = (h1, h);
        (k0, k1) = (k1, k);
        let frac = &rest - BigRational::from_integer(a);
        if frac.is_zero() {
            break;
        }
        rest = frac.recip();
    }
    out
}

/// Recognize a real ball as a small rational.
///
/// Returns `p/q` when exactly one continued-fraction convergent of the
/// midpoint with `q ≤ max_denominator` lies inside the window of
/// [`recognition_window`]. Two or more fitting convergents, or none, give
/// `None`. A ball that is not real within its radius also gives `None`.
pub fn rational_recognize(x: &ApproxComplex, max_denominator: u64) -> Option<BigRational> {
    if x.im().abs() > x.err || !x.mid.re.is_finite() {
        return None;
    }
    let window = recognition_window(x);
    let exact = BigRational::from_float(x.re())?;
    let bound = BigInt::from(max_denominator.max(1));
    let fits: Vec<BigRational> = convergents(&exact, &bound)
        .into_iter()
        .filter(|c| (&exact - c).abs().to_f64().is_some_and(|d| d <= window))
        .collect();
    match fits.as_slice() {
        [one] => Some(one.clone()),
        _ => None,
    }
}
