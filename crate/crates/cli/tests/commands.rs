use adlie::catalog;
use adlie::construct::{block_derivation, modified_cotangent};
use adlie::exactla::Mat;
use adlie::rhoform::primitive;
use adlie_cli::document::matrix_to_strings;
use adlie_cli::{run, AlgebraDocument, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use serde_json::{json, Value};
use std::path::{Path, PathBuf};
use tempfile::TempDir;

struct Outcome {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Outcome {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("{e}: {}", self.stdout))
    }
}

fn adlie(args: &[&str]) -> Outcome {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("adlie").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Outcome { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn write(dir: &TempDir, name: &str, value: &impl serde::Serialize) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, serde_json::to_string_pretty(value).unwrap()).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn assert_verifies(dir: &TempDir, value: &Value) {
    let path = write(dir, "reverify.json", value);
    let o = adlie(&["verify", "--algebra", s(&path)]);
    assert_eq!(o.code, EXIT_OK, "{}{}", o.stdout, o.stderr);
    assert_eq!(o.json()["valid"], json!(true));
}

#[test]
fn generate_then_verify() {
    let dir = TempDir::new().unwrap();
    let rho = dir.path().join("rho.json");
    let o = adlie(&["generate", "--dim", "9", "--out", s(&rho)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert!(o.stdout.is_empty());
    assert!(o.stderr.contains("dimension 9"));
    let v = adlie(&["verify", "--rho", s(&rho)]);
    assert_eq!(v.code, EXIT_OK, "{}", v.stdout);
    let doc = &v.json()["documents"][0];
    assert_eq!(doc["skew"], json!(true));
    assert_eq!(doc["ss"], json!(true));
    assert_eq!(doc["injective"], json!(true));
}

#[test]
fn generate_in_dimension_four_prints_a_certificate() {
    let o = adlie(&["--json", "generate", "--dim", "4", "--samples", "20"]);
    assert_eq!(o.code, EXIT_FAILED);
    assert!(o.stderr.is_empty());
    let c = o.json();
    assert_eq!(c["kind"], json!("nonexistence_certificate"));
    assert_eq!(c["dim"], json!(4));
    assert_eq!(c["all_samples_passed"], json!(true));
}

#[test]
fn heisenberg_fails_condition_one() {
    let dir = TempDir::new().unwrap();
    let h3 = write(&dir, "h3.json", &AlgebraDocument::from_lie(&catalog::heisenberg3()));
    let o = adlie(&["decide", "--algebra", s(&h3), "--inner", "identity"]);
    assert_eq!(o.code, EXIT_FAILED);
    assert_eq!(o.json(), json!({"admits": false, "failed": "i"}));
}

#[test]
fn decided_metric_verifies() {
    let dir = TempDir::new().unwrap();
    let m = modified_cotangent(&primitive(3).unwrap()).unwrap();
    let lie = AlgebraDocument::from_lie(m.algebra());
    let path = write(&dir, "n3.json", &lie);
    let o = adlie(&["decide", "--algebra", s(&path)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v = o.json();
    assert_eq!(v["admits"], json!(true));
    let gram = serde_json::from_value(v["metric"].clone()).unwrap();
    let doc = AlgebraDocument { kind: adlie_cli::Kind::MetricLie, gram: Some(gram), ..lie };
    assert_verifies(&dir, &serde_json::to_value(doc).unwrap());
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(adlie(&[]).code, EXIT_USAGE);
    assert_eq!(adlie(&["decide"]).code, EXIT_USAGE);
    assert_eq!(adlie(&["generate", "--dim", "x"]).code, EXIT_USAGE);
    assert_eq!(adlie(&["verify", "--algebra", "a.json", "--rho", "b.json"]).code, EXIT_USAGE);
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"schema_version\": \"1\",\n \"kind\": \"lie\", \"dim\": 2, \"brackets\": [{\"i\": 1, \"j\": 0, \"coeffs\": {}}]}").unwrap();
    let o = adlie(&["--json", "verify", "--algebra", s(&bad)]);
    assert_eq!(o.code, EXIT_USAGE);
    assert_eq!(o.json()["exit_code"], json!(EXIT_USAGE));
    assert!(o.json()["error"].as_str().unwrap().contains("brackets[0].j"));
    let missing = adlie(&["geom", "--algebra", s(&dir.path().join("missing.json"))]);
    assert_eq!(missing.code, EXIT_USAGE);
}

#[test]
fn help_exits_zero() {
    let o = adlie(&["--help"]);
    assert_eq!(o.code, EXIT_OK);
    assert!(o.stdout.contains("modified-cotangent"));
}

#[test]
fn constructions_reverify() {
    let dir = TempDir::new().unwrap();
    let so3 = write(&dir, "so3.json", &AlgebraDocument::from_lie(&catalog::so3()));
    let o = adlie(&["cotangent", "--algebra", s(&so3)]);
    assert_eq!(o.code, EXIT_OK);
    assert_verifies(&dir, &o.json());

    let rho = write(&dir, "rho.json", &AlgebraDocument::from_rho(&primitive(5).unwrap()).unwrap());
    let n5 = dir.path().join("n5.json");
    assert_eq!(adlie(&["modified-cotangent", "--rho", s(&rho), "--out", s(&n5)]).code, EXIT_OK);
    assert_verifies(&dir, &serde_json::from_str(&std::fs::read_to_string(&n5).unwrap()).unwrap());

    let n3 = write(&dir, "n3.json", &AlgebraDocument::from_metric_lie(&modified_cotangent(&primitive(3).unwrap()).unwrap()));
    let c = Mat::from_ints(&[[0, 1, 0], [-1, 0, 2], [0, -2, 0]]);
    let d = matrix_to_strings(&block_derivation(&Mat::zeros(3, 3), &c).unwrap());
    let der = write(&dir, "der.json", &d);
    let o = adlie(&["double-extend", "--algebra", s(&n3), "--derivation", s(&der)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(o.json()["dim"], json!(8));
    assert_verifies(&dir, &o.json());

    let o = adlie(&["normal-form", "--algebra", s(&n3)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    assert_eq!(o.json()["corank"], json!(0));
    assert_verifies(&dir, &o.json());
}

#[test]
fn geometry_of_so3() {
    let dir = TempDir::new().unwrap();
    let so3 = write(&dir, "so3.json", &AlgebraDocument::from_metric_lie(&catalog::so3_metric()));
    let o = adlie(&["geom", "--algebra", s(&so3)]);
    assert_eq!(o.code, EXIT_OK);
    let v = o.json();
    assert_eq!(v["is_flat"], json!(false));
    assert_eq!(v["ricci"], json!([["1/2", "0", "0"], ["0", "1/2", "0"], ["0", "0", "1/2"]]));
}

#[test]
fn r_matrix_lift_reverifies() {
    let dir = TempDir::new().unwrap();
    let so3 = write(&dir, "so3.json", &AlgebraDocument::from_metric_lie(&catalog::so3_metric()));
    let o = adlie(&["rmatrix", "--algebra", s(&so3), "--r", "zero"]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v = o.json();
    assert_eq!(v["classical"], json!(true));
    assert_eq!(v["cobracket"]["cocycle"], json!(true));
    assert_verifies(&dir, &v["lift"]);
}

#[test]
fn isometries_between_cotangents() {
    let dir = TempDir::new().unwrap();
    let m = modified_cotangent(&primitive(3).unwrap()).unwrap();
    let a = write(&dir, "a.json", &AlgebraDocument::from_metric_lie(&m));
    let o = adlie(&["isometry", "--algebra", s(&a), "--other", s(&a)]);
    assert_eq!(o.code, EXIT_OK, "{}", o.stderr);
    let v = o.json();
    assert_eq!(v["descriptor"], json!("O(3,3)"));
    let map = write(&dir, "map.json", &v["cross_isometry"]);
    let o = adlie(&["isometry", "--algebra", s(&a), "--other", s(&a), "--map", s(&map)]);
    assert_eq!(o.json()["muller"], json!(true));

    let mut scaled = vec![vec!["0".to_string(); 6]; 6];
    for (i, row) in scaled.iter_mut().enumerate() {
        row[i] = "2".into();
    }
    let bad = write(&dir, "scaled.json", &scaled);
    let o = adlie(&["isometry", "--algebra", s(&a), "--map", s(&bad)]);
    assert_eq!(o.code, EXIT_FAILED);
    assert_eq!(o.json()["muller"], json!(false));
}

#[test]
fn binary_runs() {
    let o = std::process::Command::new(env!("CARGO_BIN_EXE_adlie")).args(["generate", "--dim", "3"]).output().unwrap();
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["kind"], json!("rho"));
    assert!(!o.stderr.is_empty());
    let o = std::process::Command::new(env!("CARGO_BIN_EXE_adlie")).arg("bogus").output().unwrap();
    assert_eq!(o.status.code(), Some(EXIT_USAGE));
}
