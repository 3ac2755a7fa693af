use std::path::PathBuf;
use std::process::Command;

use evolkit::{Element, GScalar};
use evolkit_cli::{emit_document, parse_algebra_document, parse_document, run};
use serde_json::{json, Value};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name).to_string_lossy().into_owned()
}

fn json_run(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["evolkit"];
    argv.extend_from_slice(args);
    let out = run(argv);
    let v = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", out.stdout));
    (out.code, v)
}

fn strs(xs: &[&str]) -> Value {
    json!(xs)
}

#[test]
fn classify_radical_but_m_semisimple() {
    let (code, v) = json_run(&["classify", &data("exafinal.json")]);
    assert_eq!(code, 0);
    let r = &v["results"];
    assert_eq!(r["classification"], "radical");
    assert_eq!(r["radical_support"], json!([1, 2]));
    assert_eq!(r["m_semisimple"]["value"], "yes");
    assert_eq!(r["spectrally_semisimple"]["value"], "yes");
    assert_eq!(r["m_semisimple"]["witnesses"][0]["eigenvalue"], "1/12");
    assert_eq!(r["m_semisimple"]["witnesses"][1]["eigenvalue"], "-1/8");
    assert_eq!(v["certainty"]["m_semisimple"], "exact");
}

#[test]
fn spectrum_of_a_square() {
    let (code, v) = json_run(&["spectrum", &data("exafinal.json"), "--element", "-1/2,-1/3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["m_spectrum"]["points"], strs(&["0", "1/12"]));
    assert_eq!(v["results"]["spectrum"]["points"], strs(&["0", "1/12"]));
    assert_eq!(v["certainty"]["spectrum"], "exact");
    let (_, v) = json_run(&["spectrum", &data("exafinal.json"), "--element", "3,2", "--m-only"]);
    assert_eq!(v["results"]["m_spectrum"]["points"], strs(&["-1/2", "0"]));
    assert!(v["results"].get("spectrum").is_none());
}

#[test]
fn numeric_mode_reports_irrational_points() {
    // e1^2 = e1 + e2, e2^2 = e1: eigenvalues of L_(e1+e2) are the golden ratios.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fib.json");
    std::fs::write(&path, r#"{"dimension":2,"matrix":[["1","1"],["1","0"]]}"#).unwrap();
    let p = path.to_string_lossy();
    let (code, v) = json_run(&["spectrum", &p, "--element", "1,1", "--mode", "numeric"]);
    assert_eq!(code, 0);
    let pts = v["results"]["m_spectrum"]["numeric_points"].as_array().unwrap();
    assert_eq!(pts.len(), 2);
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    assert!((pts[1]["re"].as_f64().unwrap() - phi).abs() < 1e-9);
    assert_eq!(v["certainty"]["m_spectrum"], "mixed");
    assert!(!v["warnings"].as_array().unwrap().is_empty());
    let (_, exact) = json_run(&["spectrum", &p, "--element", "1,1"]);
    assert_eq!(exact["results"]["m_spectrum"]["residual"], "x^2 - x - 1");
}

#[test]
fn radical_of_block_example() {
    let (code, v) = json_run(&["radical", &data("ejemrado.json")]);
    assert_eq!(code, 0);
    assert_eq!(v["results"]["radical_support"], json!([1, 2, 3, 4, 5]));
    assert_eq!(v["results"]["modular_indexes"], json!([6, 7]));
    assert_eq!(v["results"]["quotient_diag"], strs(&["1", "1"]));
}

#[test]
fn ideals_and_support_validation() {
    let (_, v) = json_run(&["ideals", &data("ejemrado.json"), "--validate-support", "1,2,3,4,5,7"]);
    let r = &v["results"];
    assert_eq!(r["maximal_modular_ideals"].as_array().unwrap().len(), 2);
    assert_eq!(r["maximal_modular_ideals"][0]["modular_unit"], strs(&["0", "0", "0", "0", "0", "1", "0"]));
    assert_eq!(r["validation"]["is_modular_ideal"], true);
    let (_, v) = json_run(&["ideals", &data("ejemrado.json"), "--validate-support", "2,3,4,5,6,7"]);
    assert_eq!(v["results"]["validation"]["is_modular_ideal"], false);
    assert_eq!(v["results"]["validation"]["modular_unit"], Value::Null);
}

#[test]
fn descendants_products_and_quasi_inverses() {
    let (_, v) = json_run(&["descendants", &data("ejemrado.json"), "--index", "7"]);
    assert_eq!(v["results"]["descendants"], json!([1, 2, 3, 7]));
    assert_eq!(v["results"]["on_cycle"], true);
    let (_, v) = json_run(&["descendants", &data("chain.json"), "--index", "1", "--generation", "2"]);
    assert_eq!(v["results"]["descendants"], json!([3]));

    let (_, v) = json_run(&["product", &data("exafinal.json"), "--a", "1,0", "--b", "1,0"]);
    assert_eq!(v["results"]["product"], strs(&["-1/2", "-1/3"]));

    let (_, v) = json_run(&["quasi-inverse", &data("radical_e1.json"), "--element", "1,0"]);
    assert_eq!(v["results"]["quasi_invertible"], false);
    // -a/2 for a = 3e1 + 2e2 has quasi-inverse 2e1 + 4/3 e2.
    let (_, v) = json_run(&["quasi-inverse", &data("exafinal.json"), "--element", "-3/2,-1"]);
    assert_eq!(v["results"]["quasi_inverse"], strs(&["2", "4/3"]));
}

#[test]
fn documents_round_trip() {
    for entry in std::fs::read_dir(data("")).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        let doc = parse_document(&text).unwrap();
        let again = parse_document(&emit_document(&doc)).unwrap();
        assert_eq!(again, doc, "{}", path.display());
    }
    let g = parse_algebra_document(&std::fs::read_to_string(data("gaussian.json")).unwrap()).unwrap();
    assert_eq!(g.omega(0, 0), GScalar::i());
    assert_eq!(g.square_of_basis(1).unwrap(), Element::new(vec![GScalar::one(), -GScalar::i()]));
}

#[test]
fn text_and_json_carry_the_same_scalars() {
    let args = ["spectrum", &data("exafinal.json"), "--element", "3,2"];
    let (_, v) = json_run(&args);
    let mut argv = vec!["evolkit"];
    argv.extend_from_slice(&args);
    argv.extend_from_slice(&["--format", "text"]);
    let text = run(argv).stdout;
    for p in v["results"]["spectrum"]["points"].as_array().unwrap() {
        assert!(text.contains(p.as_str().unwrap()), "{text}");
    }
    assert!(text.contains("spectrum.points = [-1/2, 0]"), "{text}");
    assert!(text.contains(&format!("input_digest: {}", v["input_digest"].as_str().unwrap())));
}

#[test]
fn fixed_seed_gives_identical_output() {
    let path = data("irrational.json");
    let a = run(["evolkit", "classify", &path, "--seed", "5"]).stdout;
    let b = run(["evolkit", "classify", &path, "--seed", "5"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn input_errors_exit_with_one() {
    let (code, v) = json_run(&["radical", "/nonexistent/algebra.json"]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().contains("cannot read"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"dimension":2,"matrix":[["1","1/0"],["0","1"]]}"#).unwrap();
    let (code, v) = json_run(&["radical", &bad.to_string_lossy()]);
    assert_eq!(code, 1);
    assert!(v["error"].as_str().unwrap().starts_with("matrix[0][1]"), "{v}");
    assert!(v["results"].as_object().unwrap().is_empty());

    let (code, _) = json_run(&["spectrum", &data("exafinal.json"), "--element", "1,2,3"]);
    assert_eq!(code, 1);
    let (code, _) = json_run(&["descendants", &data("exafinal.json"), "--index", "3"]);
    assert_eq!(code, 1);
    assert_eq!(run(["evolkit", "bogus"]).code, 1);
    assert_eq!(run(["evolkit", "--help"]).code, 0);
}

#[test]
fn strict_flags_uncertain_verdicts() {
    let path = data("irrational.json");
    let relaxed = run(["evolkit", "classify", &path]);
    assert_eq!(relaxed.code, 0);
    let strict = run(["evolkit", "classify", &path, "--strict"]);
    assert_eq!(strict.code, 3);
    let v: Value = serde_json::from_str(&strict.stdout).unwrap();
    assert_eq!(v["results"]["spectrally_semisimple"]["value"], "probably_yes");
    assert_eq!(run(["evolkit", "classify", &data("exafinal.json"), "--strict"]).code, 0);
}

#[test]
fn binary_honours_the_seed_variable() {
    let bin = env!("CARGO_BIN_EXE_evolkit");
    let path = data("irrational.json");
    let out = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(bin);
        c.arg("classify").arg(&path).args(extra).env_remove("EVOLKIT_SEED");
        if let Some(s) = env {
            c.env("EVOLKIT_SEED", s);
        }
        let o = c.output().unwrap();
        (o.status.code().unwrap(), String::from_utf8(o.stdout).unwrap())
    };
    let (code, from_env) = out(Some("9"), &[]);
    assert_eq!(code, 0);
    let (_, from_flag) = out(None, &["--seed", "9"]);
    assert_eq!(from_env, from_flag);
    assert!(from_flag.contains("\"seed\": 9"));
    let (code, _) = out(Some("nine"), &[]);
    assert_eq!(code, 1);
}
