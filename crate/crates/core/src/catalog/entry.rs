use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, QuadraticPoint};
use crate::modform::CurveModel;
use crate::serde_fmt::{rat_string, ser_rat, ser_rats};

/// The embedded table, one row per line.
pub const CATALOG_SOURCE: &str = include_str!("../../data/catalog.txt");

/// A tabulated `ψ`: a rational, or the `∞` printed where `E6` vanishes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Psi {
    Finite(BigRational),
    Infinity,
}

impl fmt::Display for Psi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Psi::Finite(q) => write!(f, "{q}"),
            Psi::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Psi {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// One row of the CM table.
#[derive(Clone, Debug, PartialEq)]
pub struct CMEntry {
    /// 1-based position in the table.
    pub row: usize,
    pub modulus: QuadraticPoint,
    pub curve: CurveModel,
    pub j: BigRational,
    pub delta_e: BigInt,
    pub psi: Psi,
    pub c: [BigRational; 3],
}

impl CMEntry {
    pub fn label(&self) -> String {
        self.modulus.to_string()
    }
}

/// Serialized view of an entry.
#[derive(Serialize)]
pub struct EntryView {
    pub row: usize,
    pub modulus: String,
    #[serde(serialize_with = "ser_rat")]
    pub g2: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub g3: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub j: BigRational,
    pub delta_e: String,
    pub psi: Psi,
    #[serde(serialize_with = "ser_rats")]
    pub c: Vec<BigRational>,
}

impl From<&CMEntry> for EntryView {
    fn from(e: &CMEntry) -> Self {
        EntryView {
            row: e.row,
            modulus: e.label(),
            g2: e.curve.g2().clone(),
            g3: e.curve.g3().clone(),
            j: e.j.clone(),
            delta_e: e.delta_e.to_string(),
            psi: e.psi.clone(),
            c: e.c.to_vec(),
        }
    }
}

fn parse_line(row: usize, line: &str) -> Result<CMEntry> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    let bad = |what: &str| Error::Parse(format!("catalog row {row}: {what}"));
    if fields.len() != 9 {
        return Err(bad("expected 9 fields"));
    }
    let m: Vec<i64> = fields[0].split(',').map(|x| x.parse().map_err(|_| bad("modulus"))).collect::<Result<_>>()?;
    let [p, q, r, d] = m[..] else { return Err(bad("modulus needs p,q,r,D")) };
    let modulus = QuadraticPoint::new(p, q, r, u64::try_from(d).map_err(|_| bad("D"))?)?;
    let curve = CurveModel::new(parse_rational(fields[1])?, parse_rational(fields[2])?)?;
    let j = parse_rational(fields[3])?;
    let delta_e: BigInt = fields[4].parse().map_err(|_| bad("delta_E"))?;
    let psi = if fields[5] == "inf" { Psi::Infinity } else { Psi::Finite(parse_rational(fields[5])?) };
    let c = [parse_rational(fields[6])?, parse_rational(fields[7])?, parse_rational(fields[8])?];
    Ok(CMEntry { row, modulus, curve, j, delta_e, psi, c })
}

/// Parse a catalog in the embedded format (`#` starts a comment line).
pub fn parse_catalog(src: &str) -> Result<Vec<CMEntry>> {
    src.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .enumerate()
        .map(|(i, l)| parse_line(i + 1, l))
        .collect()
}

/// The thirteen rows, in table order.
pub fn load_catalog() -> Vec<CMEntry> {
    parse_catalog(CATALOG_SOURCE).expect("embedded catalog parses")
}

impl fmt::Display for CMEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "row {}: tau = {}, g2 = {}, g3 = {}, j = {}, delta_E = {}, psi = {}, c = ({}, {}, {})",
            self.row,
            self.modulus,
            self.curve.g2(),
            self.curve.g3(),
            self.j,
            self.delta_e,
            self.psi,
            rat_string(&self.c[0]),
            rat_string(&self.c[1]),
            rat_string(&self.c[2])
        )
    }
}
