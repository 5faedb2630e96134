use std::path::Path;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_weiljet"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    (out.status.code().expect("exit code"), String::from_utf8(out.stdout).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, text) = run(&all);
    let mut v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{e}: {text}"));
    assert!(v["timing_ms"].is_number());
    v.as_object_mut().unwrap().remove("timing_ms");
    (code, v)
}

/// Compares against `tests/golden/<name>.json`; set `WEILJET_BLESS=1` to
/// rewrite the file.
fn golden(name: &str, v: &Value) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.json"));
    let text = serde_json::to_string_pretty(v).unwrap() + "\n";
    if std::env::var_os("WEILJET_BLESS").is_some() {
        std::fs::write(&path, &text).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("missing golden {}", path.display()));
    assert_eq!(text, want, "golden {name} changed");
}

fn entry<'a>(v: &'a Value, name: &str) -> &'a Value {
    v["entries"].as_array().unwrap().iter().find(|e| e["name"] == name).unwrap_or_else(|| panic!("no entry {name}"))
}

#[test]
fn qcr_fat_square() {
    let (code, v) = run_json(&["qcr", "D{3}_2"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"]["expr"], "D{3}_2");
    assert_eq!(v["output"]["pieces"].as_array().unwrap().len(), 3);
    assert_eq!(v["output"]["overlaps"].as_array().unwrap().len(), 3);
    assert!(v["output"]["pieces"].as_array().unwrap().iter().all(|p| p["object"] == "D^2"));
    assert!(v["output"]["overlaps"].as_array().unwrap().iter().all(|p| p["object"] == "D"));
    assert_eq!(v["output"]["certificate"]["verdict"], "LIMIT");
    golden("qcr_fat_square", &v);
}

#[test]
fn qcr_small_objects() {
    let (code, v) = run_json(&["qcr", "D^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["pieces"].as_array().unwrap().len(), 1);
    assert!(v["output"]["overlaps"].as_array().unwrap().is_empty());
    let (code, v) = run_json(&["qcr", "D(2)"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["pieces"].as_array().unwrap().len(), 2);
    let overlaps = v["output"]["overlaps"].as_array().unwrap();
    assert_eq!(overlaps.len(), 1);
    assert_eq!(overlaps[0]["object"], "D^0");
    golden("qcr_d2_first_order", &v);
}

#[test]
fn qcr_errors() {
    let (code, v) = run_json(&["qcr", "D{3"]);
    assert_eq!(code, 2);
    assert_eq!(v["pass"], false);
    assert!(v["error"].as_str().unwrap().contains("parse"));
    let (code, _) = run_json(&["qcr", "D^40"]);
    assert_eq!(code, 3);
}

#[test]
fn identities_default_run_shows_the_failing_family() {
    let (code, v) = run_json(&["verify-identities"]);
    assert_eq!(code, 1);
    let failed: Vec<&str> = v["entries"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|e| e["passed"] == false)
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed.len(), 3);
    assert!(failed.iter().all(|f| f.ends_with("d_(j+1) s_j = id")));
    assert_eq!(entry(&v, "inclusions: D(1)_2 in D(1)_3")["passed"], true);
}

#[test]
fn identities_subsets() {
    let (code, v) = run_json(&["verify-identities", "--only", "limits", "--n", "4"]);
    assert_eq!(code, 0);
    assert!(v["entries"].as_array().unwrap().iter().all(|e| e["name"].as_str().unwrap().starts_with("limits: ")));
    assert_eq!(entry(&v, "limits: product equalizer n=4")["passed"], true);
    golden("identities_limits_n4", &v);
    let (code, _) = run_json(&["verify-identities", "--only", "nope"]);
    assert_eq!(code, 2);
    let (code, _) = run_json(&["verify-identities", "--n", "9"]);
    assert_eq!(code, 3);
}

#[test]
fn holonomic_sample_passes() {
    let (code, v) = run_json(&["check-jet", "tests/data/holonomic_d2.json", "--tangential"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    golden("check_holonomic_d2", &v);
    let (code, _) = run_json(&["check-jet", "tests/data/third_d2.json", "--tangential"]);
    assert_eq!(code, 0);
    let (code, v) = run_json(&["check-jet", "tests/data/tower.json"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["class"], "holonomic");
}

#[test]
fn semi_holonomic_sample_fails_only_when_tangential() {
    let (code, _) = run_json(&["check-jet", "tests/data/semi_holonomic_d2.json"]);
    assert_eq!(code, 0);
    let (code, v) = run_json(&["check-jet", "tests/data/semi_holonomic_d2.json", "--tangential"]);
    assert_eq!(code, 1);
    let bad = entry(&v, "D^2 product");
    assert_eq!(bad["passed"], false);
    assert!(bad["witness"].as_str().unwrap().contains("X1*X2"));
    golden("check_semi_holonomic_d2", &v);
    let (code, v) = run_json(&["check-jet", "tests/data/semi_holonomic_tower.json"]);
    assert_eq!(code, 1);
    assert_eq!(v["output"]["class"], "semi-holonomic");
}

#[test]
fn transmogrify_psi_and_phi() {
    let (code, v) = run_json(&["transmogrify", "tests/data/holonomic_d2.json", "--map", "psi"]);
    assert_eq!(code, 0);
    assert_eq!(v["output"]["kind"], "candidate");
    assert_eq!(v["output"]["approach"], "D_2");
    // The image is the third-approach jet of the same section.
    let third: Value = serde_json::from_str(
        &std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/third_d2.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["output"], third);
    golden("transmogrify_psi", &v);

    let (code, v) = run_json(&["transmogrify", "tests/data/tower.json", "--map", "phi"]);
    assert_eq!(code, 0);
    let second: Value = serde_json::from_str(
        &std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/holonomic_d2.json")).unwrap(),
    )
    .unwrap();
    assert_eq!(v["output"], second);

    let (code, v) = run_json(&["transmogrify", "tests/data/semi_holonomic_tower.json", "--map", "phi"]);
    assert_eq!(code, 1);
    assert_eq!(entry(&v, "phi defined")["passed"], false);
}

#[test]
fn wrong_file_kinds() {
    assert_eq!(run_json(&["transmogrify", "tests/data/tower.json", "--map", "psi"]).0, 2);
    assert_eq!(run_json(&["transmogrify", "tests/data/holonomic_d2.json", "--map", "phi"]).0, 2);
    assert_eq!(run_json(&["check-jet", "Cargo.toml"]).0, 2);
    assert_eq!(run_json(&["check-jet", "tests/data/missing.json"]).0, 2);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["qcr", "D{3;(1,3),(2,3)}"][..],
        &["verify-identities", "--only", "simplicial"],
        &["transmogrify", "tests/data/holonomic_d2.json", "--map", "psi"],
    ] {
        let a = run_json(args);
        let b = run_json(args);
        assert_eq!(a, b, "{args:?}");
    }
    let mut seq = vec!["--sequential"];
    seq.extend_from_slice(&["verify-identities", "--only", "limits"]);
    assert_eq!(run_json(&seq).1["entries"], run_json(&["verify-identities", "--only", "limits"]).1["entries"]);
}

#[test]
fn text_rendering() {
    let (code, text) = run(&["check-jet", "tests/data/semi_holonomic_d2.json", "--tangential"]);
    assert_eq!(code, 1);
    assert!(text.lines().any(|l| l.trim_start().starts_with("FAIL  D^2 product")));
    assert!(text.lines().last().unwrap().starts_with("FAIL (9/10 checks)"));
    let (_, text) = run(&["qcr", "D{3}_2"]);
    assert!(text.contains("P1 = D^2 --(1,2)--> D{3}_2"));
    assert!(text.contains("certificate: LIMIT"));
}

#[test]
fn samples_are_current() {
    for (file, args) in [
        ("holonomic_d2.json", &["sample", "holonomic"][..]),
        ("third_d2.json", &["sample", "third"]),
        ("tower.json", &["sample", "tower"]),
        ("semi_holonomic_d2.json", &["sample", "semi-holonomic"]),
        ("semi_holonomic_tower.json", &["sample", "semi-holonomic-tower"]),
    ] {
        let (code, text) = run(args);
        assert_eq!(code, 0);
        let want =
            std::fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(file)).unwrap();
        assert_eq!(text, want, "{file}");
    }
}
