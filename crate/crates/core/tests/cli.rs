use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_isogeny-atlas"));
    c.env_remove("ISOGENY_ATLAS_SPORADIC_DATA");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn classify_prints_shape_and_configuration() {
    let o = run(&["classify", "[1,-1,1,-6,-4]"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("shape:     T4"), "{s}");
    assert!(s.contains("config:    ([2,2],[4],[4],[2])"), "{s}");
    assert!(s.contains("table row: T4/17.a-class"), "{s}");
}

#[test]
fn classify_json_follows_the_report_schema() {
    let o = run(&["classify", "--short", "--json", "[0,16]"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["shape"], "L4");
    assert_eq!(v["config"], serde_json::json!(["[3]", "[3]", "[3]", "[1]"]));
    assert_eq!(v["cm"]["dK"], -3);
    assert_eq!(v["table_row"], "L4/27.a-class");
    assert_eq!(v["vertices"].as_array().unwrap().len(), 4);
    assert_eq!(v["vertices"][0]["j"], serde_json::json!({"num": "0", "den": "1"}));
    assert!(v["edges"].as_array().unwrap().iter().all(|e| e["ell"] == 3));
    for c in v["counts"].as_array().unwrap() {
        assert_eq!(c["C"], c["C_p"]["3"]);
    }
}

#[test]
fn graph_dot_for_the_special_shape() {
    let o = run(&["graph", "[1,0,1,1,2]", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.starts_with("graph "));
    assert_eq!(s.matches(" -- ").count(), 10);
    assert_eq!(s.matches("[label=\"2\"]").count(), 6);
    assert_eq!(s.matches("[label=\"3\"]").count(), 4);
}

#[test]
fn torsion_and_isogenies_commands() {
    let o = run(&["torsion", "--short", "[0,1]"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("torsion: [6]"));

    let o = run(&["isogenies", "[1,-1,1,-6,-4]", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 3);

    let o = run(&["isogenies", "--short", "[0,16]", "--ell", "3"]);
    assert_eq!(stdout(&o).lines().count(), 2);
}

#[test]
fn verify_tables_passes_on_the_bundled_corpus_subset() {
    let lines: String = std::fs::read_to_string(data("fixtures.jsonl"))
        .unwrap()
        .lines()
        .filter(|l| l.contains("\"17.a\"") || l.contains("\"21.a\""))
        .map(|l| format!("{l}\n"))
        .collect();
    let path = scratch("subset.jsonl", &lines);
    let o = run(&["verify-tables", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("2/2 exact matches"));
}

#[test]
fn verify_tables_reports_a_wrong_expectation() {
    let line = r#"{"label":"21.a","a_invariants":[1,0,0,-4,-1],"expected_shape":"T6","expected_config":["[2,4]","[4]","[4]","[2,2]","[2]","[2]"],"source":"test"}"#;
    let path = scratch("wrong.jsonl", line);
    let o = run(&["verify-tables", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let s = stdout(&o);
    assert!(s.contains("FAIL"), "{s}");
    assert!(s.contains("computed T6 ([2,4],[8],[4],[2,2],[2],[2])"), "{s}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["classify", "[0,0,0,0,0]"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "[1,2"]).status.code(), Some(1));
    assert_eq!(run(&["nonsense"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["verify-tables", "/no/such/file.jsonl"]).status.code(), Some(3));
    let bad = scratch("malformed.jsonl", "{not json}\n");
    assert_eq!(run(&["verify-tables", bad.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn sporadic_data_override() {
    let curve = "[1,1,1,-30,-76]";
    let bundled = data("sporadic_isogenies.json");
    let o = bin()
        .env("ISOGENY_ATLAS_SPORADIC_DATA", &bundled)
        .args(["classify", curve])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("L2(11)"));

    let o = bin()
        .env("ISOGENY_ATLAS_SPORADIC_DATA", "/no/such/sporadic.json")
        .args(["classify", curve])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));

    let tampered = std::fs::read_to_string(&bundled)
        .unwrap()
        .replacen("\"partner_j\"", "\"partner\"", 1);
    let path = scratch("tampered.json", &tampered);
    let o = bin()
        .env("ISOGENY_ATLAS_SPORADIC_DATA", &path)
        .args(["classify", curve])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sporadic"));
}
