use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, rat_to_ball, squarefree_decompose, ApproxComplex, Point, QuadraticPoint};

/// A parsed modulus: exact `(p + q√−D)/r`, or a decimal `x+yi`.
#[derive(Clone, Debug, PartialEq)]
pub enum ModulusValue {
    Exact(QuadraticPoint),
    Approx(ApproxComplex),
}

/// Source text with its parsed value.
#[derive(Clone, Debug, PartialEq)]
pub struct ModulusExpr {
    pub source: String,
    pub value: ModulusValue,
}

impl ModulusExpr {
    pub fn parse(src: &str) -> Result<ModulusExpr> {
        let s: String = src.chars().filter(|c| !c.is_whitespace()).collect();
        let value = if is_decimal_form(&s) {
            let z = parse_decimal_complex(&s)?;
            if !(z.im() > 0.0) {
                return Err(Error::NotUpperHalfPlane(src.to_string()));
            }
            ModulusValue::Approx(z)
        } else {
            ModulusValue::Exact(parse_exact(&s)?)
        };
        Ok(ModulusExpr { source: src.to_string(), value })
    }

    pub fn point(&self) -> Point {
        match &self.value {
            ModulusValue::Exact(q) => Point::Exact(q.clone()),
            ModulusValue::Approx(z) => Point::Approx(*z),
        }
    }

    pub fn as_exact(&self) -> Option<&QuadraticPoint> {
        match &self.value {
            ModulusValue::Exact(q) => Some(q),
            ModulusValue::Approx(_) => None,
        }
    }
}

impl fmt::Display for ModulusExpr {
    /// Canonical spelling, which parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            ModulusValue::Exact(q) => write!(f, "{q}"),
            ModulusValue::Approx(z) => write!(f, "{}{:+}i", z.re(), z.im()),
        }
    }
}

fn is_decimal_form(s: &str) -> bool {
    s.len() > 1 && s.ends_with('i') && !s.contains("sqrt") && !s.contains('(')
}

/// `x`, `yi`, `x+yi`, `x-yi`, `i`, `-i` with decimal or integer parts; radius is one ulp-scale rounding.
pub fn parse_decimal_complex(s: &str) -> Result<ApproxComplex> {
    let bad = || Error::Parse(format!("not a complex number: {s:?}"));
    let num = |t: &str| -> Result<f64> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => t.parse::<f64>().map_err(|_| bad()),
        }
    };
    let Some(body) = s.strip_suffix('i') else {
        let x: f64 = s.parse().map_err(|_| bad())?;
        return Ok(decimal_ball(x, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (body[..k].parse::<f64>().map_err(|_| bad())?, num(&body[k..])?),
        None => (0.0, num(body)?),
    };
    if !re.is_finite() || !im.is_finite() {
        return Err(bad());
    }
    Ok(decimal_ball(re, im))
}

fn decimal_ball(re: f64, im: f64) -> ApproxComplex {
    ApproxComplex::with_err(re, im, 2.0 * crate::exactnum::U * (re.abs() + im.abs()))
}

/// Complex input for `ω`: a rational, or anything [`parse_decimal_complex`] accepts.
pub fn parse_complex(s: &str) -> Result<ApproxComplex> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if let Ok(q) = parse_rational(&s) {
        return Ok(rat_to_ball(&q));
    }
    parse_decimal_complex(&s)
}

/// `x + y√−d` with `d` squarefree; `d` is `None` for a rational.
#[derive(Clone, Debug)]
struct Val {
    x: BigRational,
    y: BigRational,
    d: Option<u64>,
}

impl Val {
    fn rational(x: BigRational) -> Val {
        Val { x, y: BigRational::zero(), d: None }
    }

    fn add(self, o: Val, sign: i64) -> Result<Val> {
        let d = match (self.d, o.d) {
            (Some(a), Some(b)) if a != b => return Err(Error::Parse(format!("cannot add sqrt(-{a}) and sqrt(-{b})"))),
            (a, b) => a.or(b),
        };
        let s = BigRational::from_integer(sign.into());
        Ok(Val { x: self.x + &s * o.x, y: self.y + s * o.y, d })
    }

    fn scale(self, k: &BigRational) -> Val {
        Val { x: self.x * k, y: self.y * k, d: self.d }
    }
}

struct Parser<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse(format!("{what} at position {} in {:?}", self.pos, self.s))
    }

    fn eat(&mut self, t: &str) -> bool {
        if self.rest().starts_with(t) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Option<BigInt> {
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let v = self.rest()[..len].parse().ok();
        self.pos += len;
        v
    }

    fn rational(&mut self) -> Result<Option<BigRational>> {
        let Some(n) = self.integer() else { return Ok(None) };
        let save = self.pos;
        if self.eat("/") {
            if let Some(d) = self.integer() {
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                return Ok(Some(BigRational::new(n, d)));
            }
            self.pos = save;
        }
        Ok(Some(BigRational::from_integer(n)))
    }

    fn surd(&mut self) -> Result<Option<Val>> {
        if self.eat("sqrt(-") {
            let n = self.integer().ok_or_else(|| self.err("expected an integer"))?;
            if !self.eat(")") {
                return Err(self.err("expected ')'"));
            }
            let n: u64 = n.try_into().map_err(|_| self.err("radicand too large"))?;
            if n == 0 {
                return Err(self.err("sqrt(-0) is not imaginary"));
            }
            let (m, d) = squarefree_decompose(n);
            return Ok(Some(Val { x: BigRational::zero(), y: BigRational::from_integer(m.into()), d: Some(d) }));
        }
        if self.eat("rho") {
            let half = BigRational::new(1.into(), 2.into());
            return Ok(Some(Val { x: -half.clone(), y: half, d: Some(3) }));
        }
        if self.eat("i") {
            return Ok(Some(Val { x: BigRational::zero(), y: BigRational::from_integer(1.into()), d: Some(1) }));
        }
        Ok(None)
    }

    fn term(&mut self) -> Result<Val> {
        if self.eat("(") {
            let inner = self.expr()?;
            if !self.eat(")") {
                return Err(self.err("expected ')'"));
            }
            if self.eat("/") {
                let d = self.integer().ok_or_else(|| self.err("expected an integer divisor"))?;
                if d.is_zero() {
                    return Err(self.err("zero divisor"));
                }
                return Ok(inner.scale(&BigRational::new(1.into(), d)));
            }
            return Ok(inner);
        }
        match self.rational()? {
            Some(k) => {
                let star = self.eat("*");
                match self.surd()? {
                    Some(v) => Ok(v.scale(&k)),
                    None if star => Err(self.err("expected sqrt(-n) after '*'")),
                    None => Ok(Val::rational(k)),
                }
            }
            None => self.surd()?.ok_or_else(|| self.err("expected a number, sqrt(-n), i or rho")),
        }
    }

    fn expr(&mut self) -> Result<Val> {
        let mut sign = if self.eat("-") {
            -1
        } else {
            self.eat("+");
            1
        };
        let mut acc = Val::rational(BigRational::zero());
        loop {
            let t = self.term()?;
            acc = acc.add(t, sign)?;
            if self.eat("+") {
                sign = 1;
            } else if self.eat("-") {
                sign = -1;
            } else {
                return Ok(acc);
            }
        }
    }
}

/// Parse the exact grammar into a point of the upper half plane.
pub fn parse_exact(s: &str) -> Result<QuadraticPoint> {
    let mut p = Parser { s, pos: 0 };
    let v = p.expr()?;
    if p.pos != s.len() {
        return Err(p.err("unexpected trailing input"));
    }
    match v.d {
        Some(d) if v.y.is_positive() => QuadraticPoint::from_parts(&v.x, &v.y, d),
        _ => Err(Error::NotUpperHalfPlane(format!("{s} does not have positive imaginary part"))),
    }
}
