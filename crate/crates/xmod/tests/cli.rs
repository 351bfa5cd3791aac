use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use xmod::input::{BraidDesc, TangleDesc, XmodDesc};
use xmod::output::{ErrorJson, InvariantJson, ScalarJson};
use xmod_core::Cyclotomic;

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
}

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_xmod"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn run_data(cmd: &str, file: &str, extra: &[&str]) -> (i32, String) {
    let path = data(file);
    let mut args = vec![cmd, path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn json(text: &str) -> Value {
    serde_json::from_str(text).unwrap()
}

#[test]
fn chartable_text_layout() {
    let (code, out) = run_data("chartable", "s3conj.json", &[]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 2 + 3 + 8);
    assert!(lines[1].contains("[e] [(12)] [(123)] | [e] [(12)] | [e] [(123)] [(132)]"));
    assert_eq!(lines.iter().filter(|l| l.starts_with("---")).count(), 3);
    assert!(lines.last().unwrap().ends_with("| 1   ω²      ω"));
}

#[test]
fn chartable_json_roundtrips() {
    let (code, out) = run_data("chartable", "s3conj.json", &["--format", "json"]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["blocks"], json("[3, 2, 3]"));
    let entries: Vec<Vec<ScalarJson>> = serde_json::from_value(v["entries"].clone()).unwrap();
    let omega = Cyclotomic::root_of_unity(3, 1);
    assert_eq!(entries[6][6].to_cyclotomic().unwrap(), omega);
    for row in &entries {
        for e in row {
            let back = ScalarJson::new(&e.to_cyclotomic().unwrap());
            assert_eq!(&back, e);
        }
    }
}

#[test]
fn fusion_all_methods_agree_on_z2() {
    let (code, out) = run_data("fusion", "z2triv.json", &["--method", "all"]);
    assert_eq!(code, 0, "{}", out);
    let v = json(&out);
    assert_eq!(v["labels"].as_array().unwrap().len(), 4);
    // Z/2 x Z/2 fusion: every product is a single simple.
    assert_eq!(v["entries"].as_array().unwrap().len(), 16);
    for method in ["char", "reduced", "explicit"] {
        let (_, other) = run_data("fusion", "z2triv.json", &["--method", method]);
        assert_eq!(json(&other)["entries"], v["entries"]);
    }
}

#[test]
fn hopf_link_table_is_symmetric() {
    let (code, out) = run_data(
        "invariant",
        "s3conj.json",
        &["--braid", data("hopf_link.json").to_str().unwrap()],
    );
    assert_eq!(code, 0);
    let v = json(&out);
    let table = v["table"].as_array().unwrap();
    assert_eq!(table.len(), 64);
    let value = |a: &Value, b: &Value| {
        let row = table
            .iter()
            .find(|r| r["colors"][0] == *a && r["colors"][1] == *b)
            .unwrap();
        serde_json::from_value::<InvariantJson>(row["scalar"].clone())
            .unwrap()
            .float
    };
    for r in table {
        let (a, b) = (&r["colors"][0], &r["colors"][1]);
        let (x, y) = (value(a, b), value(b, a));
        assert!((x.re - y.re).abs() < 1e-9 && (x.im - y.im).abs() < 1e-9);
    }
}

#[test]
fn twisted_unknot() {
    let (code, out) = run_data(
        "invariant",
        "s3conj.json",
        &["--tangle", data("unknot_twist.json").to_str().unwrap()],
    );
    assert_eq!(code, 0);
    let s: InvariantJson = serde_json::from_value(json(&out)["scalar"].clone()).unwrap();
    // 2 omega^2
    assert!((s.float.re + 1.0).abs() < 1e-9 && (s.float.im + 3f64.sqrt()).abs() < 1e-9);
}

#[test]
fn exact_braid_scalar() {
    let (code, out) = run_data(
        "invariant",
        "s3conj.json",
        &["--braid", data("trefoil.json").to_str().unwrap()],
    );
    assert_eq!(code, 0);
    let s: InvariantJson = serde_json::from_value(json(&out)["scalar"].clone()).unwrap();
    assert_eq!(s.exact.unwrap().to_cyclotomic().unwrap(), Cyclotomic::one());
}

#[test]
fn validate_reports_witness() {
    let (code, out) = run_data("validate", "bad_peiffer.json", &[]);
    assert_eq!(code, 1);
    let v = json(&out);
    assert_eq!(v["equivariance"]["pass"], Value::Bool(true));
    assert_eq!(v["peiffer"]["pass"], Value::Bool(false));
    assert!(v["peiffer"]["witness"].is_string());
    let (code, _) = run_data("validate", "a3_in_s3.json", &[]);
    assert_eq!(code, 0);
}

#[test]
fn verify_axiom_families() {
    let (code, out) = run_data(
        "verify",
        "s3conj.json",
        &["--axioms", "hopf,rmatrix,ribbon"],
    );
    assert_eq!(code, 0);
    let v = json(&out);
    for key in ["antipode", "yang_baxter", "ribbon_coproduct"] {
        assert_eq!(v[key]["pass"], Value::Bool(true), "{}", key);
    }
    let (_, hopf_only) = run_data("verify", "s3conj.json", &["--axioms", "hopf"]);
    assert!(json(&hopf_only).get("yang_baxter").is_none());
}

#[test]
fn simples_and_center() {
    let (code, out) = run_data("simples", "d4aut.json", &[]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["simples"].as_array().unwrap().len(), 16);
    let total: u64 = v["wedderburn"]
        .as_array()
        .unwrap()
        .iter()
        .map(|b| b["size"].as_u64().unwrap().pow(2))
        .sum();
    assert_eq!(total, 64);
    let (code, out) = run_data("center", "z2triv.json", &[]);
    assert_eq!(code, 0);
    let v = json(&out);
    assert_eq!(v["dimension"], 4);
    assert_eq!(v["idempotents"].as_array().unwrap().len(), 4);
}

#[test]
fn domain_and_io_errors() {
    let (code, out) = run_data(
        "invariant",
        "s3conj.json",
        &[
            "--braid",
            data("hopf_link.json").to_str().unwrap(),
            "--ribbon",
            "3",
        ],
    );
    assert_eq!(code, 1);
    let e: ErrorJson = serde_json::from_str(&out).unwrap();
    assert_eq!(e.code, "InvalidRibbonChoice");

    let (code, out) = run_data("chartable", "does_not_exist.json", &[]);
    assert_eq!(code, 2);
    assert_eq!(serde_json::from_str::<ErrorJson>(&out).unwrap().code, "Io");

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{\"G\": 3}").unwrap();
    let (code, out) = run(&["simples", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert_eq!(
        serde_json::from_str::<ErrorJson>(&out).unwrap().code,
        "Parse"
    );

    let (code, _) = run_data("simples", "s3conj.json", &["--max-dim", "30"]);
    assert_eq!(code, 1);
}

#[test]
fn type_errors_are_domain_errors() {
    let dir = tempfile::tempdir().unwrap();
    let t = dir.path().join("t.json");
    std::fs::write(
        &t,
        r#"{"boundary_in": [{"color": [0, 0], "orientation": "up"}, {"color": [0, 1], "orientation": "down"}], "slices": [[{"atom": "cap"}]]}"#,
    )
    .unwrap();
    let (code, out) = run_data(
        "invariant",
        "s3conj.json",
        &["--tangle", t.to_str().unwrap()],
    );
    assert_eq!(code, 1);
    let e: ErrorJson = serde_json::from_str(&out).unwrap();
    assert_eq!(e.code, "TypeMismatch");
    assert!(e.witness.is_some());
}

#[test]
fn deterministic_output() {
    for (cmd, file, extra) in [
        ("chartable", "d4aut.json", vec!["--format", "json"]),
        ("simples", "s3conj.json", vec!["--seed", "7"]),
        ("fusion", "s3conj.json", vec!["--method", "explicit"]),
        ("center", "s3conj.json", vec![]),
    ] {
        let a = run_data(cmd, file, &extra);
        let b = run_data(cmd, file, &extra);
        assert_eq!(a, b, "{}", cmd);
    }
}

#[test]
fn schema_flag_and_inputs_roundtrip() {
    let (code, out) = run(&["--schema"]);
    assert_eq!(code, 0);
    let v = json(&out);
    for key in ["group", "xmod", "tangle", "braid", "scalar", "error"] {
        assert!(v.get(key).is_some(), "{}", key);
    }
    for f in ["s3conj.json", "z2triv.json", "d4aut.json", "a3_in_s3.json"] {
        let text = std::fs::read_to_string(data(f)).unwrap();
        let d: XmodDesc = serde_json::from_str(&text).unwrap();
        let again: XmodDesc = serde_json::from_str(&serde_json::to_string(&d).unwrap()).unwrap();
        assert_eq!(d, again);
    }
    let t: TangleDesc =
        serde_json::from_str(&std::fs::read_to_string(data("unknot_twist.json")).unwrap()).unwrap();
    assert_eq!(t.slices.len(), 3);
    let b: BraidDesc =
        serde_json::from_str(&std::fs::read_to_string(data("hopf_link.json")).unwrap()).unwrap();
    assert!(b.colors.is_none());
}
