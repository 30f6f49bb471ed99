use std::process::{Command, Output};

use rank3_frobenius::catalog::load_catalog;
use rank3_frobenius::cli::{ModulusExpr, ModulusValue, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use rank3_frobenius::exactnum::{rat, ApproxComplex, QuadraticPoint};
use rank3_frobenius::modform::{eisenstein_q_series, Weight, DEFAULT_TERM_BUDGET};
use rank3_frobenius::wdvv::extend_coefficients;
use serde_json::Value as Json;

fn rank3(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rank3")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Json) {
    let mut v = vec!["--json"];
    v.extend_from_slice(args);
    let o = rank3(&v);
    (code(&o), serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o))))
}

fn ball(v: &Json) -> (f64, f64, f64) {
    (v["re"].as_f64().unwrap(), v["im"].as_f64().unwrap(), v["err"].as_f64().unwrap())
}

#[test]
fn e2_at_i() {
    let o = rank3(&["eisenstein", "--k", "2", "--tau", "i"]);
    assert_eq!(code(&o), EXIT_OK);
    assert!(stdout(&o).contains("value: 0.954929658551372"), "{}", stdout(&o));
}

#[test]
fn e2_star_vanishes_at_rho() {
    let (c, j) = json(&["eisenstein", "--k", "star", "--tau", "(-1+sqrt(-3))/2"]);
    assert_eq!(c, EXIT_OK);
    let (re, im, err) = ball(&j["outputs"]["value"]);
    assert!(re.hypot(im) <= err && err < 1e-12);
}

#[test]
fn e4_below_the_fundamental_domain() {
    // E4(i/2) = (2i)^4 E4(2i) = 16 E4(2i), summed directly at 2i as the oracle.
    let (c, j) = json(&["eisenstein", "--k", "4", "--tau", "0.0+0.5i"]);
    assert_eq!(c, EXIT_OK);
    let direct = eisenstein_q_series(Weight::Four, &ApproxComplex::exact(0.0, 2.0), 0, DEFAULT_TERM_BUDGET).unwrap();
    let (re, im, err) = ball(&j["outputs"]["value"]);
    assert!((re - 16.0 * direct.re()).abs() <= err + 16.0 * direct.err + 1e-13 && im.abs() <= err);
}

#[test]
fn coeffs_gamma_quarter_follow_the_recursion() {
    let (c, j) = json(&["coeffs", "--tau", "i", "--omega-sq", "gamma4", "--terms", "6"]);
    assert_eq!(c, EXIT_OK);
    let want = extend_coefficients(&rat(0, 1), &rat(1, 24), &rat(0, 1), 6).unwrap();
    for (n, q) in want.coeffs().iter().enumerate() {
        assert_eq!(j["outputs"][format!("c{n}")].as_str().unwrap(), q.to_string());
    }
}

#[test]
fn coeffs_pinned_at_sqrt_minus_three() {
    let o = rank3(&["coeffs", "--tau", "sqrt(-3)", "--omega-sq", "pin:c0=1/16", "--terms", "3"]);
    assert_eq!(code(&o), EXIT_OK);
    assert!(stdout(&o).contains("c1: 1/32"));
    let o = rank3(&["coeffs", "--tau", "sqrt(-3)", "--omega-sq", "pin:c0=1/16", "--expect", "1/16,-21/128,-1/64"]);
    assert_eq!(code(&o), EXIT_FAILED);
    let o = rank3(&["coeffs", "--tau", "sqrt(-3)", "--omega-sq", "pin:c0=1/16", "--expect", "1/16,1/32"]);
    assert_eq!(code(&o), EXIT_OK);
}

#[test]
fn coeffs_all_zero_start() {
    let (c, j) = json(&["coeffs", "--c0", "0", "--c1", "0", "--c2", "0", "--terms", "0"]);
    assert_eq!(c, EXIT_OK);
    assert_eq!(j["outputs"]["c0"], "0");
    assert!(j["outputs"].get("c1").is_none());
}

#[test]
fn recursion_ceiling_from_environment() {
    let args = ["coeffs", "--c0", "1", "--c1", "0", "--c2", "0", "--terms", "20"];
    let o = Command::new(env!("CARGO_BIN_EXE_rank3")).args(args).env("RANK3_RECURSION_CEILING", "10").output().unwrap();
    assert_eq!(code(&o), EXIT_USAGE);
    assert!(String::from_utf8_lossy(&o.stderr).contains("ceiling"));
    assert_eq!(code(&rank3(&args)), EXIT_OK);
}

#[test]
fn classify_examples() {
    let (c, j) = json(&["classify", "--tau", "(-1+sqrt(-7))/2"]);
    assert_eq!(c, EXIT_OK);
    assert_eq!(j["outputs"]["symmetric"], false);
    assert_eq!(j["outputs"]["cm_over_q"], true);
    assert_eq!(j["outputs"]["j"], "-3375");
    let (_, j) = json(&["classify", "--tau", "i"]);
    assert_eq!(j["outputs"]["symmetric"], true);
    let (_, j) = json(&["classify", "--tau", "sqrt(-5)"]);
    assert_eq!((j["outputs"]["cm"].clone(), j["outputs"]["cm_over_q"].clone()), (Json::Bool(true), Json::Bool(false)));
    assert_eq!(code(&rank3(&["classify", "--tau", "0.3+1.1i"])), EXIT_USAGE);
}

#[test]
fn verify_catalog_single_row() {
    let (c, j) = json(&["verify-catalog", "--row", "2"]);
    assert_eq!(c, EXIT_OK);
    let row = &j["outputs"]["catalog"]["rows"][0];
    assert_eq!(row["modulus"], "sqrt(-3)");
    assert_eq!(row["psi_c_identity"]["computed"], "15/22");
    assert_eq!(row["psi_c_identity"]["ok"], true);
}

#[test]
fn verify_catalog_full_run_reports_the_inconsistent_row() {
    let (c, j) = json(&["verify-catalog"]);
    let rows = j["outputs"]["catalog"]["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 13);
    let failing: Vec<_> =
        rows.iter().filter(|r| r["j_from_curve"]["ok"] == false).map(|r| r["row"].as_u64().unwrap()).collect();
    // The 2√−1 row prints g3 = −64, whose j is −2299968/397 rather than the printed 287496.
    assert_eq!(failing, vec![5]);
    assert_eq!(c, EXIT_FAILED);
}

#[test]
fn verify_catalog_json_field_list() {
    let (_, j) = json(&["verify-catalog", "--row", "1"]);
    let keys = |v: &Json| v.as_object().unwrap().keys().cloned().collect::<Vec<_>>();
    assert_eq!(keys(&j), ["command", "inputs", "outputs", "exit_status"]);
    let row = &j["outputs"]["catalog"]["rows"][0];
    assert_eq!(
        keys(row),
        [
            "row",
            "modulus",
            "j_from_curve",
            "j_numeric",
            "delta_comparison",
            "psi_numeric",
            "psi_c_identity",
            "c_closed_form",
            "notes"
        ]
    );
    assert_eq!(
        keys(&row["c_closed_form"]),
        ["pinned_from", "omega_sq", "predicted", "predicted_recognized", "expected", "ratios", "status"]
    );
    assert_eq!(keys(&row["delta_comparison"]), ["delta_w", "delta_e", "ratio", "relation"]);
}

#[test]
fn gl2_examples() {
    let (c, j) = json(&["gl2", "--matrix", "1,0,0,1", "--solution", "finf", "--at", "1.1i"]);
    assert_eq!(c, EXIT_OK);
    let (f, g) = (ball(&j["outputs"]["f"]), ball(&j["outputs"]["f_transformed"]));
    assert_eq!((f.0, f.1), (g.0, g.1));
    let (c, j) = json(&["gl2", "--matrix", "0,-1,1,0", "--solution", "finf", "--at", "1.1i", "--compose", "1,1,0,1"]);
    assert_eq!(c, EXIT_OK);
    let (a, b) = (ball(&j["outputs"]["sequential"]), ball(&j["outputs"]["product"]));
    assert_eq!(j["outputs"]["composition_ok"], true);
    assert!((a.0 - b.0).hypot(a.1 - b.1) <= 1e-10);
    assert_eq!(code(&rank3(&["gl2", "--matrix", "1,2,2,4", "--solution", "finf", "--at", "1.1i"])), EXIT_USAGE);
}

#[test]
fn isomorphic_i_and_rotated_omega() {
    let (c, j) = json(&["isomorphic", "--tau0", "i", "--omega0", "1", "--tau1", "i", "--omega1", "0+1i"]);
    assert_eq!(c, EXIT_OK);
    assert_eq!(j["outputs"]["isomorphic"], true);
    assert_eq!(j["outputs"]["k"], 4);
}

#[test]
fn identical_argv_gives_identical_bytes() {
    let runs: [&[&str]; 5] = [
        &["eisenstein", "--k", "d2star", "--tau", "(-1+sqrt(-7))/2"],
        &["coeffs", "--tau", "rho", "--omega-sq", "gamma3", "--terms", "8"],
        &["--json", "classify", "--tau", "(-1+sqrt(-163))/2"],
        &["--json", "verify-catalog"],
        &["isomorphic", "--tau0", "sqrt(-2)", "--omega0", "1", "--tau1", "5+sqrt(-2)", "--omega1", "1"],
    ];
    for args in runs {
        let (a, b) = (rank3(args), rank3(args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.status, b.status);
        assert!(!a.stdout.is_empty());
    }
}

#[test]
fn exit_code_contract() {
    let cases: [(&[&str], i32); 12] = [
        (&["eisenstein", "--k", "6", "--tau", "i"], EXIT_OK),
        (&["eisenstein", "--k", "6", "--tau", "-i"], EXIT_USAGE),
        (&["eisenstein", "--k", "3", "--tau", "i"], EXIT_USAGE),
        (&["eisenstein", "--k", "2", "--tau", "sqrt(-1"], EXIT_USAGE),
        (&["eisenstein", "--k", "2", "--tau", "i", "--tol", "1e-30"], EXIT_USAGE),
        (&["coeffs", "--tau", "i", "--omega-sq", "pin:c0=0"], EXIT_USAGE),
        (&["coeffs", "--tau", "i", "--omega-sq", "gamma4", "--expect", "0,1/24,0"], EXIT_OK),
        (&["coeffs", "--tau", "i", "--omega-sq", "gamma4", "--expect", "0,1/12"], EXIT_FAILED),
        (&["verify-catalog", "--row", "14"], EXIT_USAGE),
        (&["verify-catalog", "--row", "5"], EXIT_FAILED),
        (&["frobnicate"], EXIT_USAGE),
        (&["--help"], EXIT_OK),
    ];
    for (args, want) in cases {
        let o = rank3(args);
        assert_eq!(code(&o), want, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        if want == EXIT_USAGE {
            assert!(!o.stderr.is_empty(), "{args:?} should explain itself on stderr");
        }
    }
}

#[test]
fn parser_round_trip_on_catalog_spellings() {
    let spellings = [
        "(-1+sqrt(-3))/2",
        "sqrt(-3)",
        "(-1+3*sqrt(-3))/2",
        "i",
        "2*sqrt(-1)",
        "(-1+sqrt(-7))/2",
        "sqrt(-7)",
        "sqrt(-2)",
        "(-1+sqrt(-11))/2",
        "(-1+sqrt(-19))/2",
        "(-1+sqrt(-43))/2",
        "(-1+sqrt(-67))/2",
        "(-1+sqrt(-163))/2",
    ];
    let moduli: Vec<QuadraticPoint> = load_catalog().into_iter().map(|e| e.modulus).collect();
    for s in spellings {
        let m = ModulusExpr::parse(s).unwrap();
        let ModulusValue::Exact(q) = &m.value else { panic!("{s} parsed as approximate") };
        assert!(moduli.contains(q), "{s} is not a catalog modulus");
        let again = ModulusExpr::parse(&m.to_string()).unwrap();
        assert_eq!(again.value, m.value, "{s} -> {m}");
        let from_display = ModulusExpr::parse(&q.to_string()).unwrap();
        assert_eq!(from_display.value, m.value);
    }
}
