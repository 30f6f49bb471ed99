//! Serialization helpers: floats rounded to 15 significant digits, rationals as `"num/den"`.

use num_rational::BigRational;
use serde::ser::{SerializeStruct, Serializer};
use serde::Serialize;

use crate::exactnum::ApproxComplex;

/// Round to 15 significant digits; `-0.0` becomes `0.0`, non-finite values pass through.
pub fn sig15(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    if !x.is_finite() {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

/// `"num/den"`, or `"num"` for integers.
pub fn rat_string(q: &BigRational) -> String {
    q.to_string()
}

pub fn ser_f64<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if x.is_finite() {
        s.serialize_f64(sig15(*x))
    } else {
        s.serialize_str(&x.to_string())
    }
}

pub fn ser_rat<S: Serializer>(q: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&rat_string(q))
}

pub fn ser_rats<S: Serializer>(qs: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<String> = qs.iter().map(rat_string).collect();
    v.serialize(s)
}

pub fn ser_rats_opt<S: Serializer>(qs: &[Option<BigRational>], s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<Option<String>> = qs.iter().map(|q| q.as_ref().map(rat_string)).collect();
    v.serialize(s)
}

impl Serialize for ApproxComplex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ApproxComplex", 3)?;
        st.serialize_field("re", &Sig(self.mid.re))?;
        st.serialize_field("im", &Sig(self.mid.im))?;
        st.serialize_field("err", &Sig(self.err))?;
        st.end()
    }
}

struct Sig(f64);

impl Serialize for Sig {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ser_f64(&self.0, s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(sig15(0.1 + 0.2), 0.3);
        assert_eq!(sig15(3.0 / std::f64::consts::PI).to_string(), "0.954929658551372");
        let v = serde_json::to_string(&ApproxComplex::with_err(1.0 / 3.0, 0.0, 1e-17)).unwrap();
        assert_eq!(v, r#"{"re":0.333333333333333,"im":0.0,"err":1e-17}"#);
    }
}
