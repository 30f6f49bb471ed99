use std::fmt::Write as _;

use num_rational::BigRational;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::exactnum::ApproxComplex;
use crate::serde_fmt::{ser_f64, sig15};

/// One reported quantity.
#[derive(Clone, Debug)]
pub enum Value {
    Text(String),
    Int(i64),
    Float(f64),
    Ball(ApproxComplex),
    Rational(BigRational),
    Bool(bool),
    List(Vec<Value>),
    /// Preformatted text for the human report, structured data for JSON.
    Block {
        text: String,
        json: serde_json::Value,
    },
}

impl Serialize for Value {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Value::Text(t) => s.serialize_str(t),
            Value::Int(n) => s.serialize_i64(*n),
            Value::Float(x) => ser_f64(x, s),
            Value::Ball(b) => b.serialize(s),
            Value::Rational(q) => s.serialize_str(&q.to_string()),
            Value::Bool(b) => s.serialize_bool(*b),
            Value::List(v) => v.serialize(s),
            Value::Block { json, .. } => json.serialize(s),
        }
    }
}

/// A float with 15 significant digits; plain notation for moderate magnitudes.
pub fn fmt_f64(x: f64) -> String {
    let r = sig15(x);
    if r == 0.0 || !r.is_finite() || (1e-5..1e16).contains(&r.abs()) {
        format!("{r}")
    } else {
        format!("{r:e}")
    }
}

/// `re ± err` or `re+imi ± err`.
pub fn fmt_ball(b: &ApproxComplex) -> String {
    let err = format!("{:.2e}", b.err);
    if b.im() == 0.0 {
        format!("{} +/- {err}", fmt_f64(b.re()))
    } else {
        let im = fmt_f64(b.im());
        let sign = if im.starts_with('-') { "" } else { "+" };
        format!("{}{sign}{im}i +/- {err}", fmt_f64(b.re()))
    }
}

impl Value {
    fn text(&self) -> String {
        match self {
            Value::Text(t) => t.clone(),
            Value::Int(n) => n.to_string(),
            Value::Float(x) => fmt_f64(*x),
            Value::Ball(b) => fmt_ball(b),
            Value::Rational(q) => q.to_string(),
            Value::Bool(b) => (if *b { "yes" } else { "no" }).to_string(),
            Value::List(v) => v.iter().map(Value::text).collect::<Vec<_>>().join(", "),
            Value::Block { text, .. } => text.clone(),
        }
    }
}

/// Ordered fields.
#[derive(Clone, Debug, Default)]
pub struct Fields(pub Vec<(String, Value)>);

impl Fields {
    pub fn push(&mut self, name: &str, v: Value) {
        self.0.push((name.to_string(), v));
    }
}

impl Serialize for Fields {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// Command echo, normalized inputs, outputs and exit status.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Fields,
    pub outputs: Fields,
    pub exit_status: i32,
}

impl Report {
    pub fn new(command: &str) -> Report {
        Report { command: command.to_string(), inputs: Fields::default(), outputs: Fields::default(), exit_status: 0 }
    }

    pub fn input(&mut self, name: &str, v: Value) -> &mut Self {
        self.inputs.push(name, v);
        self
    }

    pub fn output(&mut self, name: &str, v: Value) -> &mut Self {
        self.outputs.push(name, v);
        self
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let inputs: Vec<String> = self.inputs.0.iter().map(|(k, v)| format!("{k}={}", v.text())).collect();
        let _ = writeln!(s, "{} {}", self.command, inputs.join(" "));
        for (k, v) in &self.outputs.0 {
            let t = v.text();
            if t.contains('\n') {
                let _ = write!(s, "{t}");
                if !t.ends_with('\n') {
                    s.push('\n');
                }
            } else {
                let _ = writeln!(s, "{k}: {t}");
            }
        }
        let _ = writeln!(s, "exit_status: {}", self.exit_status);
        s
    }

    pub fn render_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
