//! Command-line front end: argument parsing, dispatch and deterministic reports.

mod expr;
mod report;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;

pub use expr::{parse_complex, parse_decimal_complex, parse_exact, ModulusExpr, ModulusValue};
pub use report::{fmt_ball, fmt_f64, Fields, Report, Value};

use crate::catalog::{load_catalog, verify_entries, DEFAULT_CATALOG_TOL};
use crate::error::{Error, Result};
use crate::exactnum::{parse_rational, rat_to_ball, ApproxComplex, Moebius, Point};
use crate::frobenius::{
    are_isomorphic, classify_cm, frobenius_solution, has_symmetry, omega_gamma_quarter, omega_gamma_third,
    omega_sq_from_coefficient, rationality_verdict, weak_symmetry, FrobeniusPoint, RationalityVerdict,
    DEFAULT_MAX_DENOMINATOR,
};
use crate::modform::{ahd_e2_star, eisenstein, EisensteinTriple, Weight};
use crate::wdvv::{
    constant_solution, extend_coefficients_approx, extend_coefficients_with_ceiling, gl2_apply, AnalyticSolution,
    ConstantSolutionParams, FInfinityChart, DEFAULT_CEILING,
};

/// Environment variable that overrides the recursion ceiling of `coeffs`.
pub const CEILING_ENV: &str = "RANK3_RECURSION_CEILING";

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Exit status when a verification or expectation fails.
pub const EXIT_FAILED: i32 = 1;
/// Exit status for usage, parse and domain errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "rank3", version, about = "Rank-three Frobenius manifolds from Eisenstein series")]
struct Cli {
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate E2, E4, E6, E2* or its derivatives at a point.
    Eisenstein(EisensteinArgs),
    /// Taylor coefficients c_0 … c_N of the Frobenius-manifold solution at (tau0, omega0).
    Coeffs(CoeffsArgs),
    /// Symmetry and CM classification of a modulus.
    Classify(ClassifyArgs),
    /// Cross-check the thirteen-row CM catalog.
    VerifyCatalog(VerifyArgs),
    /// Apply a GL(2) matrix to a solution and evaluate it.
    Gl2(Gl2Args),
    /// Decide whether two points give isomorphic Frobenius manifolds.
    Isomorphic(IsoArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KArg {
    #[value(name = "2")]
    Two,
    #[value(name = "4")]
    Four,
    #[value(name = "6")]
    Six,
    Star,
    Dstar,
    D2star,
}

#[derive(Args, Debug)]
struct EisensteinArgs {
    #[arg(long, value_enum)]
    k: KArg,
    #[arg(long, allow_hyphen_values = true)]
    tau: String,
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

#[derive(Args, Debug)]
struct CoeffsArgs {
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
    /// `x+yi`, a rational, `gamma4[:R]`, `gamma3[:R]` or `pin:cK=RAT`.
    #[arg(long, allow_hyphen_values = true)]
    omega_sq: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c2: Option<String>,
    /// Print c_0 through c_N.
    #[arg(long, default_value_t = 2)]
    terms: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_DENOMINATOR)]
    max_den: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
    /// Comma-separated rationals to compare with c_0, c_1, …
    #[arg(long, allow_hyphen_values = true)]
    expect: Option<String>,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    tau: String,
    /// Also decide weak symmetry at this omega0^2.
    #[arg(long, allow_hyphen_values = true)]
    omega_sq: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_DENOMINATOR)]
    max_den: u64,
    #[arg(long, default_value_t = 1e-9)]
    tol: f64,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// 1-based row; all rows when absent.
    #[arg(long)]
    row: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_CATALOG_TOL)]
    tol: f64,
}

#[derive(Args, Debug)]
struct Gl2Args {
    /// `a,b,c,d` as rationals.
    #[arg(long, allow_hyphen_values = true)]
    matrix: String,
    /// `finf` (tau chart), `finf-t`, `modular`, `constant:ALPHA,BETA` or `frobenius`.
    #[arg(long)]
    solution: String,
    /// Evaluation point.
    #[arg(long, allow_hyphen_values = true)]
    at: String,
    #[arg(long, allow_hyphen_values = true)]
    tau0: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    omega_sq: Option<String>,
    /// Also check gl2(A, gl2(B, f)) = gl2(B*A, f) for this `B`.
    #[arg(long, allow_hyphen_values = true)]
    compose: Option<String>,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

#[derive(Args, Debug)]
struct IsoArgs {
    #[arg(long, allow_hyphen_values = true)]
    tau0: String,
    #[arg(long, allow_hyphen_values = true)]
    omega0: String,
    #[arg(long, allow_hyphen_values = true)]
    tau1: String,
    #[arg(long, allow_hyphen_values = true)]
    omega1: String,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
}

/// Run the CLI on `argv` (including the program name), writing the report to
/// `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let json = cli.json;
    let result = match cli.command {
        Command::Eisenstein(a) => cmd_eisenstein(&a),
        Command::Coeffs(a) => cmd_coeffs(&a),
        Command::Classify(a) => cmd_classify(&a),
        Command::VerifyCatalog(a) => cmd_verify_catalog(&a),
        Command::Gl2(a) => cmd_gl2(&a),
        Command::Isomorphic(a) => cmd_isomorphic(&a),
    };
    match result {
        Ok(report) => {
            let text = if json { report.render_json() } else { report.render_text() };
            let _ = out.write_all(text.as_bytes());
            report.exit_status
        }
        Err(e) => {
            let _ = writeln!(err, "rank3: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_point(s: &str) -> Result<(ModulusExpr, Point)> {
    let m = ModulusExpr::parse(s)?;
    let p = m.point();
    Ok((m, p))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Unsupported(format!("tolerance must be positive, got {tol}")))
    }
}

fn cmd_eisenstein(a: &EisensteinArgs) -> Result<Report> {
    check_tol(a.tol)?;
    let (m, tau) = parse_point(&a.tau)?;
    let (name, value) = match a.k {
        KArg::Two => ("E2", eisenstein(Weight::Two, &tau, a.tol)?.value),
        KArg::Four => ("E4", eisenstein(Weight::Four, &tau, a.tol)?.value),
        KArg::Six => ("E6", eisenstein(Weight::Six, &tau, a.tol)?.value),
        KArg::Star => ("E2*", ahd_e2_star(0, &tau, a.tol)?),
        KArg::Dstar => ("dE2*", ahd_e2_star(1, &tau, a.tol)?),
        KArg::D2star => ("d2E2*", ahd_e2_star(2, &tau, a.tol)?),
    };
    let mut r = Report::new("eisenstein");
    r.input("k", Value::Text(a.k.to_possible_value().expect("named").get_name().to_string()))
        .input("tau", Value::Text(m.to_string()))
        .input("tol", Value::Float(a.tol));
    r.output("function", Value::Text(name.to_string()))
        .output("value", Value::Ball(value))
        .output("bound", Value::Float(value.err));
    Ok(r)
}

/// How `ω0²` was specified.
#[derive(Clone, Debug, PartialEq)]
pub enum OmegaSpec {
    /// `ω0²` given directly.
    Value(ApproxComplex),
    /// `ω0 = R·Γ(1/4)²/(4π^{3/2})`.
    GammaQuarter(BigRational),
    /// `ω0 = R·Γ(1/3)³/(4π²)`.
    GammaThird(BigRational),
    /// Solve the closed form for `c_k = value`.
    Pin(usize, BigRational),
}

impl OmegaSpec {
    pub fn parse(s: &str) -> Result<OmegaSpec> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let factor = |rest: &str| -> Result<BigRational> {
            match rest.strip_prefix(':') {
                None if rest.is_empty() => Ok(BigRational::from_integer(1.into())),
                Some(r) => parse_rational(r),
                None => Err(Error::Parse(format!("expected ':R' after the normalization in {s:?}"))),
            }
        };
        if let Some(rest) = s.strip_prefix("gamma4") {
            return Ok(OmegaSpec::GammaQuarter(factor(rest)?));
        }
        if let Some(rest) = s.strip_prefix("gamma3") {
            return Ok(OmegaSpec::GammaThird(factor(rest)?));
        }
        if let Some(rest) = s.strip_prefix("pin:c") {
            let (k, v) = rest.split_once('=').ok_or_else(|| Error::Parse(format!("expected pin:cK=RAT, got {s:?}")))?;
            let k: usize = k.parse().map_err(|_| Error::Parse(format!("bad coefficient index in {s:?}")))?;
            if k > 2 {
                return Err(Error::Unsupported(format!("only c0, c1, c2 can be pinned, got c{k}")));
            }
            return Ok(OmegaSpec::Pin(k, parse_rational(v)?));
        }
        Ok(OmegaSpec::Value(parse_complex(&s)?))
    }

    /// `ω0²` at `τ0`.
    pub fn omega_sq(&self, tau: &Point) -> Result<ApproxComplex> {
        let w = match self {
            OmegaSpec::Value(z) => *z,
            OmegaSpec::GammaQuarter(r) => (omega_gamma_quarter() * rat_to_ball(r)).square(),
            OmegaSpec::GammaThird(r) => (omega_gamma_third() * rat_to_ball(r)).square(),
            OmegaSpec::Pin(k, c) => omega_sq_from_coefficient(*k, c, &EisensteinTriple::at(tau)?.star_vars())?,
        };
        if !w.is_nonzero() {
            return Err(Error::Unsupported(format!("omega0^2 = {w} is not certainly nonzero")));
        }
        Ok(w)
    }
}

/// `ω0` (not squared): the `gamma` normalizations or a complex value.
fn parse_omega(s: &str) -> Result<ApproxComplex> {
    match OmegaSpec::parse(s)? {
        OmegaSpec::GammaQuarter(r) => Ok(omega_gamma_quarter() * rat_to_ball(&r)),
        OmegaSpec::GammaThird(r) => Ok(omega_gamma_third() * rat_to_ball(&r)),
        OmegaSpec::Value(z) => Ok(z),
        OmegaSpec::Pin(..) => Err(Error::Unsupported("pin: specifies omega0^2; use it with --omega-sq".into())),
    }
}

fn recursion_ceiling() -> Result<usize> {
    match std::env::var(CEILING_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("{CEILING_ENV}={v:?} is not a count"))),
        Err(_) => Ok(DEFAULT_CEILING),
    }
}

/// A coefficient either known exactly or as a ball.
enum Coeff {
    Exact(BigRational),
    Approx(ApproxComplex),
}

impl Coeff {
    fn value(&self) -> Value {
        match self {
            Coeff::Exact(q) => Value::Rational(q.clone()),
            Coeff::Approx(b) => Value::Ball(*b),
        }
    }

    fn matches(&self, e: &BigRational, tol: f64) -> bool {
        match self {
            Coeff::Exact(q) => q == e,
            Coeff::Approx(b) => {
                let e = rat_to_ball(e);
                (b.mid - e.mid).norm() <= tol * e.abs_mid().max(1.0) + b.err + e.err
            }
        }
    }
}

fn cmd_coeffs(a: &CoeffsArgs) -> Result<Report> {
    check_tol(a.tol)?;
    let ceiling = recursion_ceiling()?;
    let mut r = Report::new("coeffs");
    let direct = a.c0.is_some() || a.c1.is_some() || a.c2.is_some();
    let coeffs: Vec<Coeff> = if direct {
        if a.tau.is_some() || a.omega_sq.is_some() {
            return Err(Error::Unsupported("give either --c0/--c1/--c2 or --tau with --omega-sq".into()));
        }
        let get =
            |s: &Option<String>| s.as_deref().map_or_else(|| Ok(BigRational::from_integer(0.into())), parse_rational);
        let (c0, c1, c2) = (get(&a.c0)?, get(&a.c1)?, get(&a.c2)?);
        r.input("c0", Value::Rational(c0.clone()))
            .input("c1", Value::Rational(c1.clone()))
            .input("c2", Value::Rational(c2.clone()));
        let t = extend_coefficients_with_ceiling(&c0, &c1, &c2, a.terms.max(2), ceiling)?;
        t.coeffs().iter().cloned().map(Coeff::Exact).collect()
    } else {
        let (tau_s, omega_s) = match (&a.tau, &a.omega_sq) {
            (Some(t), Some(w)) => (t, w),
            _ => return Err(Error::Unsupported("--tau and --omega-sq are required".into())),
        };
        let (m, tau) = parse_point(tau_s)?;
        let spec = OmegaSpec::parse(omega_s)?;
        let w2 = spec.omega_sq(&tau)?;
        r.input("tau", Value::Text(m.to_string())).input("omega_sq", Value::Text(omega_s.trim().to_string()));
        let p = FrobeniusPoint::from_omega_sq(tau, w2)?;
        let verdict = rationality_verdict(&p, a.max_den, a.tol)?;
        r.output("omega_sq", Value::Ball(w2));
        r.output("defined_over_q", Value::Bool(verdict.is_defined_over_q()));
        match verdict {
            RationalityVerdict::DefinedOverQ([c0, c1, c2]) => {
                let t = extend_coefficients_with_ceiling(&c0, &c1, &c2, a.terms.max(2), ceiling)?;
                t.coeffs().iter().cloned().map(Coeff::Exact).collect()
            }
            RationalityVerdict::NotRecognized(triple) => {
                let balls = extend_coefficients_approx(triple.c, a.terms.max(2), ceiling)?;
                balls
                    .into_iter()
                    .enumerate()
                    .map(|(n, b)| match triple.recognized.get(n).cloned().flatten() {
                        Some(q) => Coeff::Exact(q),
                        None => Coeff::Approx(b),
                    })
                    .collect()
            }
        }
    };
    r.input("terms", Value::Int(a.terms as i64));
    for (n, c) in coeffs.iter().take(a.terms + 1).enumerate() {
        r.output(&format!("c{n}"), c.value());
    }
    if let Some(exp) = &a.expect {
        let expected: Vec<BigRational> = exp.split(',').map(parse_rational).collect::<Result<_>>()?;
        if expected.len() > a.terms + 1 {
            return Err(Error::Unsupported(format!(
                "{} expectations for {} coefficients",
                expected.len(),
                a.terms + 1
            )));
        }
        let failed: Vec<Value> = expected
            .iter()
            .enumerate()
            .filter(|(n, e)| !coeffs[*n].matches(e, a.tol))
            .map(|(n, _)| Value::Text(format!("c{n}")))
            .collect();
        r.input("expect", Value::List(expected.into_iter().map(Value::Rational).collect()));
        r.output("expect_ok", Value::Bool(failed.is_empty()));
        if !failed.is_empty() {
            r.output("expect_failed", Value::List(failed));
            r.exit_status = EXIT_FAILED;
        }
    }
    Ok(r)
}

fn cmd_classify(a: &ClassifyArgs) -> Result<Report> {
    let (m, tau) = parse_point(&a.tau)?;
    let exact = m
        .as_exact()
        .ok_or_else(|| Error::Unsupported(format!("CM queries need an exact modulus, got {}", a.tau.trim())))?;
    let mut r = Report::new("classify");
    r.input("tau", Value::Text(m.to_string()));
    r.output("symmetric", Value::Bool(has_symmetry(&tau)?));
    let cm = classify_cm(exact)?;
    r.output("cm", Value::Bool(true));
    r.output("cm_over_q", Value::Bool(cm.is_matched()));
    if let Some(e) = cm.entry() {
        r.output("row", Value::Int(e.row as i64))
            .output("row_modulus", Value::Text(e.label()))
            .output("j", Value::Rational(e.j.clone()));
    }
    r.output("classification", Value::Text(cm.to_string()));
    if let Some(w) = &a.omega_sq {
        check_tol(a.tol)?;
        r.input("omega_sq", Value::Text(w.trim().to_string()));
        let w2 = OmegaSpec::parse(w)?.omega_sq(&tau)?;
        let ws = weak_symmetry(&FrobeniusPoint::from_omega_sq(tau, w2)?, a.max_den, a.tol)?;
        r.output("weak_symmetry", Value::Bool(ws.holds));
        r.output("rationality", Value::Text(ws.verdict.to_string()));
    }
    Ok(r)
}

fn cmd_verify_catalog(a: &VerifyArgs) -> Result<Report> {
    check_tol(a.tol)?;
    let all = load_catalog();
    let entries = match a.row {
        None => all,
        Some(n) if (1..=all.len()).contains(&n) => vec![all[n - 1].clone()],
        Some(n) => return Err(Error::Unsupported(format!("row must be between 1 and {}, got {n}", all.len()))),
    };
    let report = verify_entries(&entries, a.tol);
    let mut r = Report::new("verify-catalog");
    if let Some(n) = a.row {
        r.input("row", Value::Int(n as i64));
    }
    r.input("tol", Value::Float(a.tol));
    let mut text: String = report.rows.iter().map(|row| row.to_string()).collect();
    text.push_str(&report.summary.to_string());
    text.push('\n');
    let json = serde_json::to_value(&report).expect("catalog report serializes");
    r.output("catalog", Value::Block { text, json });
    r.exit_status = if report.summary.acceptance_ok { EXIT_OK } else { EXIT_FAILED };
    Ok(r)
}

fn parse_matrix(s: &str) -> Result<Moebius> {
    let parts: Vec<BigRational> = s.split(',').map(parse_rational).collect::<Result<_>>()?;
    let [a, b, c, d]: [BigRational; 4] =
        parts.try_into().map_err(|_| Error::Parse(format!("expected four entries a,b,c,d in {s:?}")))?;
    Ok(Moebius::from_rationals(a, b, c, d))
}

fn parse_solution(a: &Gl2Args) -> Result<AnalyticSolution> {
    let name = a.solution.trim();
    if let Some(rest) = name.strip_prefix("constant:") {
        let (al, be) =
            rest.split_once(',').ok_or_else(|| Error::Parse(format!("expected constant:ALPHA,BETA, got {name:?}")))?;
        return Ok(constant_solution(ConstantSolutionParams::exact(parse_rational(al)?, parse_rational(be)?)));
    }
    Ok(match name {
        "finf" => AnalyticSolution::FInfinity(FInfinityChart::Tau),
        "finf-t" => AnalyticSolution::FInfinity(FInfinityChart::T),
        "modular" => AnalyticSolution::FInfinity(FInfinityChart::Modular),
        "frobenius" => {
            let (tau_s, w_s) = match (&a.tau0, &a.omega_sq) {
                (Some(t), Some(w)) => (t, w),
                _ => return Err(Error::Unsupported("frobenius needs --tau0 and --omega-sq".into())),
            };
            let (_, tau) = parse_point(tau_s)?;
            let w2 = OmegaSpec::parse(w_s)?.omega_sq(&tau)?;
            frobenius_solution(&FrobeniusPoint::from_omega_sq(tau, w2)?)
        }
        other => return Err(Error::Parse(format!("unknown solution {other:?}"))),
    })
}

fn cmd_gl2(a: &Gl2Args) -> Result<Report> {
    check_tol(a.tol)?;
    let m = parse_matrix(&a.matrix)?;
    let f = parse_solution(a)?;
    let t = parse_complex(&a.at)?;
    let fa = gl2_apply(&m, &f)?;
    let mut r = Report::new("gl2");
    r.input("matrix", Value::Text(m.to_string()))
        .input("solution", Value::Text(a.solution.trim().to_string()))
        .input("at", Value::Text(a.at.trim().to_string()));
    r.output("f", Value::Ball(f.eval(&t)?)).output("f_transformed", Value::Ball(fa.eval(&t)?));
    if let Some(bs) = &a.compose {
        let b = parse_matrix(bs)?;
        let sequential = gl2_apply(&m, &gl2_apply(&b, &f)?)?.eval(&t)?;
        let product = &b * &m;
        let direct = gl2_apply(&product, &f)?.eval(&t)?;
        let diff = (sequential.mid - direct.mid).norm();
        let ok = diff <= a.tol + sequential.err + direct.err;
        r.input("compose", Value::Text(b.to_string())).input("tol", Value::Float(a.tol));
        r.output("sequential", Value::Ball(sequential))
            .output("product_matrix", Value::Text(product.to_string()))
            .output("product", Value::Ball(direct))
            .output("difference", Value::Float(diff))
            .output("composition_ok", Value::Bool(ok));
        if !ok {
            r.exit_status = EXIT_FAILED;
        }
    }
    Ok(r)
}

fn cmd_isomorphic(a: &IsoArgs) -> Result<Report> {
    check_tol(a.tol)?;
    let (m0, t0) = parse_point(&a.tau0)?;
    let (m1, t1) = parse_point(&a.tau1)?;
    let (w0, w1) = (parse_omega(&a.omega0)?, parse_omega(&a.omega1)?);
    let p0 = FrobeniusPoint::new(t0, w0)?;
    let p1 = FrobeniusPoint::new(t1, w1)?;
    let v = are_isomorphic(&p0, &p1, a.tol)?;
    let mut r = Report::new("isomorphic");
    r.input("tau0", Value::Text(m0.to_string()))
        .input("omega0", Value::Ball(w0))
        .input("tau1", Value::Text(m1.to_string()))
        .input("omega1", Value::Ball(w1))
        .input("tol", Value::Float(a.tol));
    r.output("isomorphic", Value::Bool(v.isomorphic));
    if let Some(k) = v.k {
        r.output("k", Value::Int(k as i64));
    }
    if let Some(w) = &v.witness {
        r.output("witness", Value::Text(w.to_string()));
    }
    r.output("diffs", Value::List(v.diffs.iter().map(|d| Value::Float(*d)).collect()));
    Ok(r)
}
