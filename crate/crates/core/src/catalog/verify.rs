use std::fmt;

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use super::entry::{load_catalog, CMEntry, Psi};
use crate::exactnum::{rat_to_ball, rational_recognize, ApproxComplex, Point};
use crate::frobenius::{coefficients_from_eisenstein, omega_sq_from_coefficient, DEFAULT_MAX_DENOMINATOR};
use crate::modform::{j_of_point, EisensteinTriple};
use crate::serde_fmt::{ser_f64, ser_rat, ser_rats, ser_rats_opt};

/// Tolerance used by `verify-catalog` when none is given.
pub const DEFAULT_CATALOG_TOL: f64 = 1e-9;

/// How close `|E6|` must be to zero for the `ψ = ∞` row.
pub const E6_ZERO_TOL: f64 = 1e-10;

/// (a) exact `j` from `(g2, g3)`.
#[derive(Clone, Debug, Serialize)]
pub struct ExactJCheck {
    #[serde(serialize_with = "ser_rat")]
    pub computed: BigRational,
    #[serde(serialize_with = "ser_rat")]
    pub expected: BigRational,
    pub ok: bool,
}

/// A numeric value compared against an exact one, relative to `max(1, |expected|)`.
#[derive(Clone, Debug, Serialize)]
pub struct NumericCheck {
    pub computed: ApproxComplex,
    #[serde(serialize_with = "ser_f64")]
    pub expected: f64,
    #[serde(serialize_with = "ser_f64")]
    pub rel_error: f64,
    pub ok: bool,
}

impl NumericCheck {
    fn new(computed: ApproxComplex, expected: &BigRational, tol: f64) -> NumericCheck {
        let e = expected.to_f64().unwrap_or(f64::NAN);
        let rel_error = (computed.mid - e).norm() / e.abs().max(1.0);
        NumericCheck { computed, expected: e, rel_error, ok: rel_error <= tol }
    }
}

/// Relation between `Δ_W = g2³ − 27g3²` and the printed `Δ_E`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaRelation {
    Equal,
    EqualUpToSign,
    Mismatch,
}

/// (c) `Δ_W` against `Δ_E`.
#[derive(Clone, Debug, Serialize)]
pub struct DeltaCheck {
    #[serde(serialize_with = "ser_rat")]
    pub delta_w: BigRational,
    pub delta_e: String,
    #[serde(serialize_with = "ser_rat")]
    pub ratio: BigRational,
    pub relation: DeltaRelation,
}

impl DeltaCheck {
    pub fn agrees_up_to_sign(&self) -> bool {
        self.relation != DeltaRelation::Mismatch
    }
}

/// (d) numeric `ψ = 3E2*E4/(2E6)`.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PsiNumeric {
    /// Finite printed value compared with the computed ratio.
    Finite(NumericCheck),
    /// Printed `∞`: `|E6|` is reported and must vanish.
    Infinity {
        e6: ApproxComplex,
        #[serde(serialize_with = "ser_f64")]
        e6_abs: f64,
        ok: bool,
    },
    /// `E6 = 0` where a finite value was printed, or the converse.
    Inconsistent { detail: String },
}

impl PsiNumeric {
    pub fn ok(&self) -> bool {
        match self {
            PsiNumeric::Finite(c) => c.ok,
            PsiNumeric::Infinity { ok, .. } => *ok,
            PsiNumeric::Inconsistent { .. } => false,
        }
    }
}

/// Value of `24c0(c1 + 2c0²)/(c2 + 12c0c1 + 16c0³)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IdentityValue {
    Finite(BigRational),
    /// Nonzero over zero.
    Infinity,
    /// `0/0`.
    Indeterminate,
}

impl fmt::Display for IdentityValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityValue::Finite(q) => write!(f, "{q}"),
            IdentityValue::Infinity => write!(f, "inf"),
            IdentityValue::Indeterminate => write!(f, "0/0"),
        }
    }
}

impl Serialize for IdentityValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// (e) the exact identity from the `c` columns.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub computed: IdentityValue,
    pub expected: Psi,
    pub ok: bool,
}

/// Outcome of (f).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PinStatus {
    Match,
    Mismatch,
    /// All three printed values are zero, so nothing pins `ω0`.
    NotApplicable,
}

/// (f) pin `ω0²` from the first nonzero printed `c` and predict the others.
#[derive(Clone, Debug, Serialize)]
pub struct PinCheck {
    /// Index of the `c` used for pinning.
    pub pinned_from: Option<usize>,
    pub omega_sq: Option<ApproxComplex>,
    pub predicted: Vec<ApproxComplex>,
    #[serde(serialize_with = "ser_rats_opt")]
    pub predicted_recognized: Vec<Option<BigRational>>,
    #[serde(serialize_with = "ser_rats")]
    pub expected: Vec<BigRational>,
    /// `predicted / printed` where the printed value is nonzero.
    pub ratios: Vec<Option<ApproxComplex>>,
    pub status: PinStatus,
}

/// All six checks for one row.
#[derive(Clone, Debug, Serialize)]
pub struct RowReport {
    pub row: usize,
    pub modulus: String,
    pub j_from_curve: ExactJCheck,
    pub j_numeric: NumericCheck,
    pub delta_comparison: DeltaCheck,
    pub psi_numeric: PsiNumeric,
    pub psi_c_identity: IdentityCheck,
    pub c_closed_form: PinCheck,
    pub notes: Vec<String>,
}

impl RowReport {
    /// Checks (a), (b), (d), (e): the ones a correct table and a correct evaluator must pass.
    pub fn acceptance_ok(&self) -> bool {
        self.j_from_curve.ok && self.j_numeric.ok && self.psi_numeric.ok() && self.psi_c_identity.ok
    }
}

fn check_delta(entry: &CMEntry) -> DeltaCheck {
    let delta_w = entry.curve.discriminant();
    let de = BigRational::from_integer(entry.delta_e.clone());
    let ratio = &delta_w / &de;
    let relation = if delta_w == de {
        DeltaRelation::Equal
    } else if delta_w == -de {
        DeltaRelation::EqualUpToSign
    } else {
        DeltaRelation::Mismatch
    };
    DeltaCheck { delta_w, delta_e: entry.delta_e.to_string(), ratio, relation }
}

fn check_psi_numeric(entry: &CMEntry, t: &EisensteinTriple, tol: f64) -> PsiNumeric {
    match &entry.psi {
        Psi::Infinity => {
            let e6_abs = t.e6.abs_upper();
            PsiNumeric::Infinity { e6: t.e6, e6_abs, ok: e6_abs <= E6_ZERO_TOL }
        }
        Psi::Finite(q) => {
            if !t.e6.is_nonzero() {
                return PsiNumeric::Inconsistent { detail: format!("E6 = {} is not separated from 0", t.e6) };
            }
            let psi = t.e2_star * t.e4 * 3.0 / (t.e6 * 2.0);
            PsiNumeric::Finite(NumericCheck::new(psi, q, tol))
        }
    }
}

/// `24c0(c1 + 2c0²)/(c2 + 12c0c1 + 16c0³)` in exact arithmetic.
pub fn psi_from_coefficients(c: &[BigRational; 3]) -> IdentityValue {
    let [c0, c1, c2] = c;
    let two = BigRational::from_integer(2.into());
    let num = BigRational::from_integer(24.into()) * c0 * (c1 + &two * c0 * c0);
    let den = c2 + BigRational::from_integer(12.into()) * c0 * c1 + BigRational::from_integer(16.into()) * c0 * c0 * c0;
    match (num.is_zero(), den.is_zero()) {
        (_, false) => IdentityValue::Finite(num / den),
        (true, true) => IdentityValue::Indeterminate,
        (false, true) => IdentityValue::Infinity,
    }
}

fn check_identity(entry: &CMEntry) -> IdentityCheck {
    let computed = psi_from_coefficients(&entry.c);
    let ok = match (&computed, &entry.psi) {
        (IdentityValue::Finite(a), Psi::Finite(b)) => a == b,
        (IdentityValue::Infinity | IdentityValue::Indeterminate, Psi::Infinity) => true,
        _ => false,
    };
    IdentityCheck { computed, expected: entry.psi.clone(), ok }
}

fn check_pin(entry: &CMEntry, t: &EisensteinTriple, tol: f64) -> PinCheck {
    let expected = entry.c.to_vec();
    let Some(k) = entry.c.iter().position(|x| !x.is_zero()) else {
        return PinCheck {
            pinned_from: None,
            omega_sq: None,
            predicted: vec![],
            predicted_recognized: vec![],
            expected,
            ratios: vec![],
            status: PinStatus::NotApplicable,
        };
    };
    let vars = t.star_vars();
    let omega_sq = match omega_sq_from_coefficient(k, &entry.c[k], &vars) {
        Ok(w) => w,
        Err(_) => ApproxComplex::with_err(f64::NAN, f64::NAN, f64::INFINITY),
    };
    let predicted = coefficients_from_eisenstein(&vars, omega_sq);
    let mut all_match = true;
    let mut ratios = Vec::new();
    for (p, e) in predicted.iter().zip(&entry.c) {
        let ef = e.to_f64().unwrap_or(f64::NAN);
        let scale = ef.abs().max(1.0);
        if (p.mid - ef).norm() > tol * scale + p.err {
            all_match = false;
        }
        ratios.push(if e.is_zero() { None } else { Some(*p / rat_to_ball(e)) });
    }
    let predicted_recognized = predicted.iter().map(|p| rational_recognize(p, DEFAULT_MAX_DENOMINATOR)).collect();
    PinCheck {
        pinned_from: Some(k),
        omega_sq: Some(omega_sq),
        predicted: predicted.to_vec(),
        predicted_recognized,
        expected,
        ratios,
        status: if all_match { PinStatus::Match } else { PinStatus::Mismatch },
    }
}

/// Run checks (a) to (f) on one row; numeric comparisons use `tol` relative to `max(1, |expected|)`.
pub fn verify_row(entry: &CMEntry, tol: f64) -> RowReport {
    let mut notes = Vec::new();
    let tau = Point::Exact(entry.modulus.clone());

    let j_exact = entry.curve.j_invariant();
    let j_from_curve = ExactJCheck { ok: j_exact == entry.j, computed: j_exact, expected: entry.j.clone() };

    let j_ball = j_of_point(&tau).unwrap_or_else(|e| {
        notes.push(format!("numeric j failed: {e}"));
        ApproxComplex::with_err(f64::NAN, f64::NAN, f64::INFINITY)
    });
    let j_numeric = NumericCheck::new(j_ball, &entry.j, tol);

    let delta_comparison = check_delta(entry);
    if !delta_comparison.agrees_up_to_sign() {
        notes.push(format!("Delta_W / Delta_E = {}", delta_comparison.ratio));
    }

    let (psi_numeric, c_closed_form) = match EisensteinTriple::at(&tau) {
        Ok(t) => (check_psi_numeric(entry, &t, tol), check_pin(entry, &t, tol)),
        Err(e) => {
            notes.push(format!("Eisenstein evaluation failed: {e}"));
            let bad = PsiNumeric::Inconsistent { detail: e.to_string() };
            let pin = PinCheck {
                pinned_from: None,
                omega_sq: None,
                predicted: vec![],
                predicted_recognized: vec![],
                expected: entry.c.to_vec(),
                ratios: vec![],
                status: PinStatus::Mismatch,
            };
            (bad, pin)
        }
    };
    if c_closed_form.status == PinStatus::Mismatch {
        let shown: Vec<String> = c_closed_form
            .predicted
            .iter()
            .zip(&c_closed_form.predicted_recognized)
            .map(|(p, r)| r.as_ref().map_or_else(|| format!("{:.12}", p.re()), |q| q.to_string()))
            .collect();
        notes.push(format!("closed forms predict c = ({})", shown.join(", ")));
    }

    let psi_c_identity = check_identity(entry);
    RowReport {
        row: entry.row,
        modulus: entry.label(),
        j_from_curve,
        j_numeric,
        delta_comparison,
        psi_numeric,
        psi_c_identity,
        c_closed_form,
        notes,
    }
}

/// Pass counts per check class.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub rows: usize,
    pub j_from_curve_ok: usize,
    pub j_numeric_ok: usize,
    pub delta_equal: usize,
    pub delta_equal_up_to_sign: usize,
    pub delta_mismatch: usize,
    pub psi_numeric_ok: usize,
    pub psi_c_identity_ok: usize,
    pub c_closed_form_match: usize,
    pub c_closed_form_mismatch: usize,
    pub c_closed_form_not_applicable: usize,
    pub acceptance_ok: bool,
}

/// Reports for every row plus counts.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub rows: Vec<RowReport>,
    pub summary: Summary,
}

pub fn summarize(rows: &[RowReport]) -> Summary {
    let count = |f: &dyn Fn(&RowReport) -> bool| rows.iter().filter(|r| f(r)).count();
    let rel = |d: DeltaRelation| count(&|r: &RowReport| r.delta_comparison.relation == d);
    let pin = |s: PinStatus| count(&|r: &RowReport| r.c_closed_form.status == s);
    Summary {
        rows: rows.len(),
        j_from_curve_ok: count(&|r| r.j_from_curve.ok),
        j_numeric_ok: count(&|r| r.j_numeric.ok),
        delta_equal: rel(DeltaRelation::Equal),
        delta_equal_up_to_sign: rel(DeltaRelation::EqualUpToSign),
        delta_mismatch: rel(DeltaRelation::Mismatch),
        psi_numeric_ok: count(&|r| r.psi_numeric.ok()),
        psi_c_identity_ok: count(&|r| r.psi_c_identity.ok),
        c_closed_form_match: pin(PinStatus::Match),
        c_closed_form_mismatch: pin(PinStatus::Mismatch),
        c_closed_form_not_applicable: pin(PinStatus::NotApplicable),
        acceptance_ok: rows.iter().all(RowReport::acceptance_ok),
    }
}

/// Verify the given rows concurrently; output keeps input order.
pub fn verify_entries(entries: &[CMEntry], tol: f64) -> CatalogReport {
    let rows: Vec<RowReport> = std::thread::scope(|s| {
        let handles: Vec<_> = entries.iter().map(|e| s.spawn(move || verify_row(e, tol))).collect();
        handles.into_iter().map(|h| h.join().expect("row verification panicked")).collect()
    });
    let summary = summarize(&rows);
    CatalogReport { rows, summary }
}

/// All thirteen rows.
pub fn verify_all(tol: f64) -> CatalogReport {
    verify_entries(&load_catalog(), tol)
}

impl fmt::Display for RowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "ok" } else { "FAIL" };
        writeln!(f, "row {} tau = {}", self.row, self.modulus)?;
        writeln!(
            f,
            "  (a) j exact: {} vs {} [{}]",
            self.j_from_curve.computed,
            self.j_from_curve.expected,
            mark(self.j_from_curve.ok)
        )?;
        writeln!(
            f,
            "  (b) j numeric: {:.15e} vs {:.15e}, rel err {:.3e} [{}]",
            self.j_numeric.computed.re(),
            self.j_numeric.expected,
            self.j_numeric.rel_error,
            mark(self.j_numeric.ok)
        )?;
        let d = &self.delta_comparison;
        let rel = match d.relation {
            DeltaRelation::Equal => "equal",
            DeltaRelation::EqualUpToSign => "equal up to sign",
            DeltaRelation::Mismatch => "mismatch",
        };
        writeln!(f, "  (c) Delta_W = {} vs Delta_E = {}: {rel}, ratio {}", d.delta_w, d.delta_e, d.ratio)?;
        match &self.psi_numeric {
            PsiNumeric::Finite(c) => writeln!(
                f,
                "  (d) psi numeric: {:.15} vs {:.15}, rel err {:.3e} [{}]",
                c.computed.re(),
                c.expected,
                c.rel_error,
                mark(c.ok)
            )?,
            PsiNumeric::Infinity { e6_abs, ok, .. } => {
                writeln!(f, "  (d) psi = inf: |E6| <= {e6_abs:.3e} [{}]", mark(*ok))?
            }
            PsiNumeric::Inconsistent { detail } => writeln!(f, "  (d) psi numeric: {detail} [FAIL]")?,
        }
        let id = &self.psi_c_identity;
        writeln!(f, "  (e) psi from c: {} vs {} [{}]", id.computed, id.expected, mark(id.ok))?;
        let pin = &self.c_closed_form;
        match pin.status {
            PinStatus::NotApplicable => writeln!(f, "  (f) closed forms: no nonzero c to pin from")?,
            s => {
                let status = if s == PinStatus::Match { "match" } else { "mismatch" };
                let shown: Vec<String> = pin
                    .predicted
                    .iter()
                    .zip(&pin.predicted_recognized)
                    .map(|(p, r)| r.as_ref().map_or_else(|| format!("{:.12}", p.re()), |q| q.to_string()))
                    .collect();
                let expected: Vec<String> = pin.expected.iter().map(|q| q.to_string()).collect();
                writeln!(
                    f,
                    "  (f) pinned from c{}: predicted ({}) vs printed ({}): {status}",
                    pin.pinned_from.unwrap_or(0),
                    shown.join(", "),
                    expected.join(", ")
                )?
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rows: {}", self.rows)?;
        writeln!(f, "(a) j exact ok: {}/{}", self.j_from_curve_ok, self.rows)?;
        writeln!(f, "(b) j numeric ok: {}/{}", self.j_numeric_ok, self.rows)?;
        writeln!(
            f,
            "(c) Delta: {} equal, {} up to sign, {} mismatch",
            self.delta_equal, self.delta_equal_up_to_sign, self.delta_mismatch
        )?;
        writeln!(f, "(d) psi numeric ok: {}/{}", self.psi_numeric_ok, self.rows)?;
        writeln!(f, "(e) psi from c ok: {}/{}", self.psi_c_identity_ok, self.rows)?;
        writeln!(
            f,
            "(f) closed forms: {} match, {} mismatch, {} not applicable",
            self.c_closed_form_match, self.c_closed_form_mismatch, self.c_closed_form_not_applicable
        )?;
        write!(f, "acceptance checks (a, b, d, e): {}", if self.acceptance_ok { "pass" } else { "FAIL" })
    }
}
