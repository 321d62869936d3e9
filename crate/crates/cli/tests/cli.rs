use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

fn clcc(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_clcc"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn clcc");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn ok(args: &[&str], stdin: &str) -> String {
    let out = clcc(args, stdin);
    assert!(out.status.success(), "clcc {args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn json_of(s: &str) -> Value {
    serde_json::from_str(s).expect("stdout is JSON")
}

fn c4_c6() -> String {
    let a = json_of(&ok(&["generate", "cycle", "--k", "2", "--prefix", "a"], ""));
    let b = json_of(&ok(&["generate", "cycle", "--k", "3", "--prefix", "b"], ""));
    json!({"a": a, "b": b}).to_string()
}

#[test]
fn surface_pipeline_gives_genus_two() {
    let pair = ok(&["generate", "surface", "--ka", "2", "--kb", "3"], "");
    let complex = ok(&["build", "-"], &pair);
    let report = json_of(&ok(&["homology", "-"], &complex));
    assert_eq!(report["betti"], json!([1, 4, 1]));
    assert_eq!(report["reduced_betti"], json!([0, 4, 1]));
}

#[test]
fn certify_c4_c6() {
    let report = json_of(&ok(&["certify", "-"], &c4_c6()));
    assert_eq!(report["verdict"], "Hyperbolic");
    assert_eq!(report["rule"], "pairwise-5-large+obes");
    assert!(report["witness"].is_object());
}

#[test]
fn moussong_on_cycles() {
    let c4 = json!({"vertices": ["1", "2", "3", "4"], "maximal_simplices": [["1", "2"], ["2", "3"], ["3", "4"], ["1", "4"]]});
    let report = json_of(&ok(&["certify", "--moussong", "-"], &c4.to_string()));
    assert_eq!(report["verdict"], "NotHyperbolic");
}

#[test]
fn check_flag_fails_with_clique_witness() {
    let hollow = json!({"vertices": ["x", "y", "z"], "maximal_simplices": [["x", "y"], ["y", "z"], ["x", "z"]]});
    let out = clcc(&["check", "--flag", "-"], &hollow.to_string());
    assert_eq!(out.status.code(), Some(1));
    let report = json_of(std::str::from_utf8(&out.stdout).unwrap());
    assert_eq!(report["holds"], false);
    assert_eq!(report["witness"]["clique"], json!(["x", "y", "z"]));
}

#[test]
fn checks_on_a_good_pair_pass() {
    let pair = c4_c6();
    for flag in ["--flag", "--obes", "--pairwise", "--smart", "--double-smart", "--npc"] {
        let report = json_of(&ok(&["check", flag, "-"], &pair));
        assert_eq!(report["holds"], true, "{flag}");
    }
    // C4 has an empty square
    let out = clcc(&["check", "--5large", "-"], &pair);
    assert_eq!(out.status.code(), Some(1));
    let report = json_of(std::str::from_utf8(&out.stdout).unwrap());
    assert_eq!(report["witness"]["side"], "A");
    assert_eq!(report["witness"]["witness"]["square"].as_array().unwrap().len(), 4);
}

#[test]
fn export_is_byte_identical_on_canonical_input() {
    let pair = ok(&["generate", "surface"], "");
    assert_eq!(ok(&["export", "-"], &pair), pair);
    let complex = ok(&["build", "-"], &pair);
    assert_eq!(ok(&["export", "-"], &complex), complex);
    let cells = ok(&["export", "--cells", "-"], &complex);
    assert_eq!(ok(&["export", "-"], &cells), cells);
    // non-canonical key order and whitespace are normalized
    let messy = json_of(&pair).to_string();
    assert_eq!(ok(&["export", "-"], &messy), pair);
}

#[test]
fn usage_and_domain_errors() {
    assert_eq!(clcc(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(clcc(&["homology", "-"], "{not json").status.code(), Some(2));
    assert_eq!(clcc(&["homology", "/nonexistent/file.json"], "").status.code(), Some(2));
    assert_eq!(clcc(&["check", "-"], "{}").status.code(), Some(2));
    // mismatched colour counts are a domain error with a structured report
    let a = json_of(&ok(&["generate", "cycle", "--n", "2"], ""));
    let b = json_of(&ok(&["generate", "crosspolytope", "--n", "3", "--prefix", "b"], ""));
    let out = clcc(&["build", "-"], &json!({"a": a, "b": b}).to_string());
    assert_eq!(out.status.code(), Some(1));
    let report = json_of(std::str::from_utf8(&out.stdout).unwrap());
    assert!(report["error"]["kind"].is_string());
}

#[test]
fn hyperplanes_sageev_and_duality() {
    let pair = ok(&["generate", "surface", "--ka", "2", "--kb", "2"], "");
    let report = json_of(&ok(&["hyperplanes", "-"], &pair));
    assert!(!report["hyperplanes"].as_array().unwrap().is_empty());
    assert_eq!(report["directions_valid"], true);

    let square = json!({"pairs": [{"id": "h"}, {"id": "k"}], "less": []});
    let cubes = json_of(&ok(&["sageev", "-"], &square.to_string()));
    assert_eq!(cubes["vertices"].as_array().unwrap().len(), 4);
    let report = json_of(&ok(&["duality", "-"], &cubes.to_string()));
    assert_eq!(report["holds"], true);
}

#[test]
fn connect_engines_agree_and_cycle_is_a_cycle() {
    let pair = c4_c6();
    for engine in ["bfs", "criterion"] {
        let report = json_of(&ok(&["connect", "--engine", engine, "-"], &pair));
        assert_eq!(report["connected"], true);
    }
    let report = json_of(&ok(&["cycle", "-"], &pair));
    assert_eq!(report["is_cycle"], true);
    assert_eq!(report["chain"]["dim"], 2);
    assert_eq!(report["cells"], 24);
}

#[test]
fn invariants_and_links() {
    let pair = ok(&["generate", "surface", "--ka", "2", "--kb", "2"], "");
    let report = json_of(&ok(&["invariants", "-"], &pair));
    assert_eq!(report["euler_characteristic"], 0);
    assert_eq!(report["cell_counts"], json!([16, 32, 16]));
    assert_eq!(report["link_types"], json!({"circle": 16}));
    let only_chi = json_of(&ok(&["invariants", "--chi", "-"], &pair));
    assert!(only_chi.get("dimension").is_none());

    let complex = ok(&["build", "-"], &pair);
    let first = json_of(&complex)["cubes"][0].clone();
    assert_eq!(first["dim"], 0);
    let k = json_of(&ok(&["link", "--cell", &cube_id(&first), "-"], &complex));
    assert_eq!(k["vertices"].as_array().unwrap().len(), 4);
}

fn cube_id(key: &Value) -> String {
    let side = |m: &Value| {
        let parts: Vec<String> =
            m.as_object().unwrap().iter().map(|(c, v)| format!("{c}:{}", v.as_str().unwrap())).collect();
        parts.join(",")
    };
    format!("A{{{}}}B{{{}}}", side(&key["a"]), side(&key["b"]))
}
