use std::path::{Path, PathBuf};
use std::process::Command;

use elastic_cli::{parse_document, parse_documents, run, GeometryDocument, Payload};
use proptest::prelude::*;
use serde_json::Value;

fn dir() -> PathBuf {
    let d = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn write(name: &str, text: &str) -> String {
    let path = dir().join(name);
    std::fs::write(&path, text).unwrap();
    path.display().to_string()
}

fn curve(name: &str, pts: &[(f64, f64)]) -> String {
    let payload: Vec<[f64; 2]> = pts.iter().map(|&(x, y)| [x, y]).collect();
    write(
        name,
        &serde_json::json!({"kind": "curve", "dimension": 2, "id": name, "payload": payload}).to_string(),
    )
}

fn square(name: &str, x0: f64, y0: f64, x1: f64, y1: f64) -> String {
    write(
        name,
        &serde_json::json!({
            "kind": "region", "dimension": 2, "id": name,
            "payload": {"outer": [[x0, y0], [x1, y0], [x1, y1], [x0, y1]], "holes": []}
        })
        .to_string(),
    )
}

fn elastic(args: &[&str]) -> (i32, Value) {
    let mut argv = vec!["elastic"];
    argv.extend_from_slice(args);
    let out = run(argv);
    let report = if out.stdout.trim().is_empty() {
        Value::Null
    } else {
        serde_json::from_str(&out.stdout).unwrap()
    };
    (out.code, report)
}

#[test]
fn decide_exit_codes() {
    let a = curve("seg_a.json", &[(0.0, 0.0), (1.0, 0.0)]);
    let b = curve("seg_b.json", &[(0.0, 1.0), (1.0, 1.0)]);
    let (code, report) = elastic(&["decide", "hausdorff", &a, &a, "0"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["verdict"], true);
    let (code, report) = elastic(&["decide", "frechet", &a, &b, "0.99"]);
    assert_eq!(code, 1);
    assert_eq!(report["result"]["verdict"], false);
    assert_eq!(report["margin"], "robust");
    let (code, _) = elastic(&["decide", "frechet", &a, &b, "1"]);
    assert_eq!(code, 0);
}

#[test]
fn region_decide_and_compute() {
    let p = square("sq.json", 0.0, 0.0, 1.0, 1.0);
    let q = square("sq_shift.json", 0.5, 0.0, 1.5, 1.0);
    let (code, _) = elastic(&["decide", "hausdorff-region", &p, &q, "0.5"]);
    assert_eq!(code, 0);
    let (code, _) = elastic(&["decide", "hausdorff-region", &p, &q, "0.49"]);
    assert_eq!(code, 1);
    let far = square("sq_far.json", 2.0, 0.0, 3.0, 1.0);
    let (code, report) = elastic(&["compute", "hausdorff-region", &p, &far]);
    assert_eq!(code, 0);
    assert!((report["result"]["value"].as_f64().unwrap() - 2.0).abs() < 1e-8);
}

#[test]
fn compute_examples() {
    let p = curve("pt_origin.json", &[(0.0, 0.0)]);
    let q = curve("pt_34.json", &[(3.0, 4.0)]);
    let (_, report) = elastic(&["compute", "discrete-hausdorff", &p, &q]);
    assert_eq!(report["result"]["value"], 5.0);
    let c = curve("zig.json", &[(0.0, 0.0), (1.0, 1.0), (2.0, 0.0)]);
    let (_, report) = elastic(&["compute", "dtw", &c, &c]);
    assert_eq!(report["result"]["value"], 0.0);
    assert_eq!(report["result"]["path"], serde_json::json!([[1, 1], [2, 2], [3, 3]]));
}

#[test]
fn compute_brackets_decide() {
    let a = curve("br_a.json", &[(0.0, 0.0), (1.0, 0.3), (2.0, -0.2), (3.0, 0.1)]);
    let b = curve("br_b.json", &[(0.2, 0.5), (1.4, -0.4), (2.9, 0.6)]);
    for m in ["hausdorff", "frechet", "weak-frechet", "directed-hausdorff"] {
        let (_, report) = elastic(&["compute", m, &a, &b]);
        let v = report["result"]["value"].as_f64().unwrap();
        let above = (v + 1e-6).to_string();
        let below = (v - 1e-6).to_string();
        assert_eq!(elastic(&["decide", m, &a, &b, &above]).0, 0, "{m}");
        assert_eq!(elastic(&["decide", m, &a, &b, &below]).0, 1, "{m}");
    }
}

#[test]
fn input_errors_exit_2() {
    let a = curve("err_a.json", &[(0.0, 0.0), (1.0, 0.0)]);
    let sq = square("err_sq.json", 0.0, 0.0, 1.0, 1.0);
    let d3 = write(
        "err_3d.json",
        r#"{"kind": "curve", "dimension": 3, "payload": [[0, 0, 0], [1, 1, 1]]}"#,
    );
    let broken = write(
        "err_broken.json",
        "{\"kind\": \"curve\",\n \"dimension\": 2, \"payload\": [[0, 0]",
    );
    let badfield = write(
        "err_field.json",
        r#"{"kind": "curve", "dimension": 2, "payload": [[0, 0], [1, null]]}"#,
    );
    let cases: Vec<Vec<&str>> = vec![
        vec!["decide", "frechet", &a, &sq, "1"],
        vec!["decide", "hausdorff-region", &a, &sq, "1"],
        vec!["decide", "frechet", &a, &d3, "1"],
        vec!["decide", "frechet", &a, &broken, "1"],
        vec!["decide", "frechet", &a, &badfield, "1"],
        vec!["decide", "frechet", &a, "/nonexistent/file.json", "1"],
        vec!["decide", "frechet", &a, &a, "-1"],
        vec!["decide", "frechet", &a, &a, "nan"],
        vec!["decide", "nope", &a, &a, "1"],
        vec!["decide", "frechet", &a, &a, "1", "--tol", "2"],
        vec!["vc-bound", "dtw", "--d", "2"],
        vec!["vc-bound", "generic", "--d", "0", "--t", "1", "--l", "1"],
        vec!["voronoi-candidates", &a],
        vec!["shatter", &a, "hausdorff-region"],
        vec!["frobnicate"],
        vec![],
    ];
    for args in cases {
        assert_eq!(elastic_code(&args), 2, "{args:?}");
    }
    let (_, report) = elastic(&["decide", "frechet", &a, &badfield, "1"]);
    assert!(report["error"].as_str().unwrap().contains("$.payload[1][1]"));
    let (_, report) = elastic(&["decide", "frechet", &a, &broken, "1"]);
    assert!(report["error"].as_str().unwrap().contains("line 2"));
}

fn elastic_code(args: &[&str]) -> i32 {
    let mut argv = vec!["elastic"];
    argv.extend_from_slice(args);
    run(argv).code
}

#[test]
fn vc_bound_values() {
    let (code, report) = elastic(&["vc-bound", "discrete-hausdorff", "--d", "2", "--k", "2", "--m", "3"]);
    assert_eq!(code, 0);
    assert!((report["result"]["value"].as_f64().unwrap() - 10.0 * 144f64.log2()).abs() < 1e-12);
    let (_, report) = elastic(&["vc-bound", "dtw", "--d", "2", "--k", "1", "--m", "9"]);
    assert!((report["result"]["value"].as_f64().unwrap() - 6.0 * 24f64.log2()).abs() < 1e-12);
    let (_, report) = elastic(&["vc-bound", "generic", "--d", "1", "--t", "1", "--l", "1"]);
    assert!((report["result"]["value"].as_f64().unwrap() - 7.1699).abs() < 1e-4);
}

#[test]
fn voronoi_candidates_command() {
    let h = 3f64.sqrt() / 2.0;
    let text = serde_json::json!([
        {"kind": "curve", "dimension": 2, "payload": [[0.0, 0.0], [1.0, 0.0]]},
        {"kind": "curve", "dimension": 2, "payload": [[1.0, 0.0], [0.5, h]]},
        {"kind": "curve", "dimension": 2, "payload": [[0.5, h], [0.0, 0.0]]},
    ]);
    let f = write("tri.json", &text.to_string());
    let (code, report) = elastic(&["voronoi-candidates", &f]);
    assert_eq!(code, 0);
    let found = report["result"]["candidates"].as_array().unwrap().iter().any(|c| {
        let x = c["location"][0].as_f64().unwrap();
        let y = c["location"][1].as_f64().unwrap();
        (x - 0.5).abs() < 1e-9
            && (y - 3f64.sqrt() / 6.0).abs() < 1e-9
            && c["cases"].as_array().unwrap().iter().any(|k| k == "three-lines")
    });
    assert!(found);
}

#[test]
fn shatter_command() {
    let ground = write(
        "ground2.json",
        r#"[{"kind": "curve", "dimension": 2, "id": "a", "payload": [[0, 0], [1, 0]]},
            {"kind": "curve", "dimension": 2, "id": "b", "payload": [[10, 0], [11, 0]]}]"#,
    );
    let (code, report) = elastic(&["shatter", &ground, "frechet", "--budget", "200", "--seed", "4"]);
    assert_eq!(code, 0);
    assert_eq!(report["result"]["witnesses"].as_array().unwrap().len(), 4);
    assert_eq!(report["result"]["verified"], true);
    assert_eq!(report["seed"], 4);

    let same = write(
        "ground_same.json",
        r#"[{"kind": "curve", "dimension": 2, "id": "a", "payload": [[0, 0], [1, 0]]},
            {"kind": "curve", "dimension": 2, "id": "b", "payload": [[0, 0], [1, 0]]}]"#,
    );
    let (code, report) = elastic(&["shatter", &same, "frechet", "--budget", "200"]);
    assert_eq!(code, 1);
    assert!(!report["result"]["missing_subsets"].as_array().unwrap().is_empty());
}

#[test]
fn reports_are_reproducible() {
    let ground = write(
        "ground3.json",
        r#"[{"kind": "curve", "dimension": 2, "id": "a", "payload": [[0, 0], [1, 0]]},
            {"kind": "curve", "dimension": 2, "id": "b", "payload": [[0, 1], [1, 1.5]]},
            {"kind": "curve", "dimension": 2, "id": "c", "payload": [[0.5, -1], [0.2, 2]]}]"#,
    );
    let args = ["shatter", ground.as_str(), "dtw", "--budget", "300", "--seed", "9"];
    let (c1, r1) = elastic(&args);
    let (c2, r2) = elastic(&args);
    assert_eq!(c1, c2);
    assert_eq!(r1["result"].to_string(), r2["result"].to_string());
    assert_eq!(r1["inputs_sha256"], r2["inputs_sha256"]);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_elastic");
    let a = curve("bin_a.json", &[(0.0, 0.0), (1.0, 0.0)]);
    let b = curve("bin_b.json", &[(0.0, 1.0), (1.0, 1.0)]);
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap().status.code().unwrap();
    assert_eq!(status(&["decide", "frechet", &a, &b, "1.5"]), 0);
    assert_eq!(status(&["decide", "frechet", &a, &b, "0.5"]), 1);
    assert_eq!(status(&["decide", "frechet", &a, "missing.json", "0.5"]), 2);
    assert_eq!(status(&["--help"]), 0);
    let out = Command::new(bin)
        .args(["--json", "false", "decide", "frechet", &a, &b, "1.5"])
        .output()
        .unwrap();
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "true (robust)");
}

fn vertices(dim: usize, min: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    prop::collection::vec(prop::collection::vec(-1e6..1e6f64, dim), min..8)
}

fn document() -> impl Strategy<Value = GeometryDocument> {
    let curve = (1usize..5, "[a-z0-9_]{0,8}")
        .prop_flat_map(|(d, id)| vertices(d, 1).prop_map(move |v| (d, id.clone(), v)))
        .prop_map(|(dimension, id, v)| GeometryDocument {
            id,
            dimension,
            payload: Payload::Curve(v),
        });
    let region = (
        "[a-z]{0,5}",
        vertices(2, 3),
        prop::collection::vec(vertices(2, 3), 0..3),
    )
        .prop_map(|(id, outer, holes)| GeometryDocument {
            id,
            dimension: 2,
            payload: Payload::Region { outer, holes },
        });
    prop_oneof![curve, region]
}

proptest! {
    #[test]
    fn documents_round_trip(doc in document()) {
        let text = doc.to_json().to_string();
        prop_assert_eq!(parse_document(&text, "rt").unwrap(), doc.clone());
        let pretty = serde_json::to_string_pretty(&serde_json::json!([doc.to_json(), doc.to_json()])).unwrap();
        prop_assert_eq!(parse_documents(&pretty, "rt").unwrap(), vec![doc.clone(), doc]);
    }

    #[test]
    fn exit_codes_are_total(args in prop::collection::vec(
        prop::sample::select(vec!["decide", "compute", "frechet", "dtw", "0.5", "-3", "--tol", "x", "--json", "vc-bound", "--k", "2", "shatter"]),
        0..6,
    )) {
        let code = elastic_code(&args);
        prop_assert!(code == 0 || code == 1 || code == 2, "{:?} -> {}", args, code);
    }
}
