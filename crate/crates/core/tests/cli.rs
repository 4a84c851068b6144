//! End-to-end runs of the command-line binary.

use std::path::Path;
use std::process::{Command, Output};

use twistlie::io::seq_to_json;
use twistlie::models::conf_lie_model;
use twistlie::twisted::homology_with_action;

fn twistlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistlie")).args(args).env_remove("TWISTLIE_CAPS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.display().to_string()
}

#[test]
fn fb_hom_count() {
    let o = twistlie(&["projhom", "--cat", "fb", "--from", "2", "--to", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "12\n");
}

#[test]
fn braid_oracle() {
    let o = twistlie(&["oracle", "braid", "--k", "3", "--dim", "2"]);
    assert_eq!(stdout(&o), "1 + 3t + 2t^2\n");
    let o = twistlie(&["oracle", "chromatic", "--vertices", "3", "--edges", "0-1,1-2"]);
    assert_eq!(stdout(&o), "t - 2t^2 + t^3\n");
}

#[test]
fn duality_on_the_zero_coalgebra() {
    let dir = tempfile::tempdir().unwrap();
    let zero = write(dir.path(), "zero.json", r#"{"W": 3}"#);
    let o = twistlie(&["duality-check", "--coalg", &zero]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS\n"));
}

#[test]
fn duality_on_a_lie_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("model.json");
    let o = twistlie(&["conf-model", "--n", "2", "--max-weight", "3", "--format", "json", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let o = twistlie(&["duality-check", "--lie", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("PASS")).count(), 6);
}

#[test]
fn surjection_count() {
    assert_eq!(stdout(&twistlie(&["surj", "--n", "4", "--r", "2"])), "14\n");
    let listed = stdout(&twistlie(&["surj", "--n", "3", "--r", "2", "--list"]));
    assert_eq!(listed.lines().count(), 6);
}

#[test]
fn ce_of_the_configuration_model() {
    let o = twistlie(&["ce", "--conf", "2", "--max-weight", "3"]);
    let text = stdout(&o);
    assert!(text.contains("3\t1\t3\n") && text.contains("3\t2\t2\n"), "{text}");
}

#[test]
fn schema_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.json", "{\"W\": 2,\n \"weights\": {\"1\": {\"basis\": [], \"extra\": 0}}}");
    let o = twistlie(&["quillen", "--coalg", &bad]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn unknown_options_are_rejected() {
    let o = twistlie(&["projhom", "--cat", "fb", "--from", "1", "--to", "2", "--colour"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn caps_exit_with_status_two() {
    assert_eq!(twistlie(&["oracle", "braid", "--k", "9", "--dim", "2"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_twistlie"))
        .args(["projhom", "--cat", "fb", "--from", "1", "--to", "4"])
        .env("TWISTLIE_CAPS", "fb=3")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_twistlie"))
        .args(["surj", "--n", "2", "--r", "1"])
        .env("TWISTLIE_CAPS", "nonsense")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn stability_from_a_homology_file() {
    let l = conf_lie_model(2, 6, false).unwrap();
    let h = homology_with_action(&l.seq);
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "h.json", &seq_to_json(&h).to_string());
    let o = twistlie(&["stability", "--homology", &path, "--imax", "2", "--bound"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("l(2) = 5"));
    // A class in degree -1 above weight one breaks the low-degree condition.
    let bad = r#"{"W": 3, "weights": {"3": {"basis": [{"deg": -1}]}}}"#;
    let path = write(dir.path(), "bad.json", bad);
    let o = twistlie(&["stability", "--homology", &path, "--imax", "1"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn smc_table() {
    let spec = r#"{
        "objects": ["0"], "unit": "0",
        "arrows": [{"name": "id", "src": "0", "dst": "0"}],
        "identities": {"0": "id"},
        "compose": [["id", "id", "id"]],
        "tensor_objects": [["0", "0", "0"]],
        "tensor_arrows": [["id", "id", "id"]],
        "symmetry": [["0", "0", "id"]]
    }"#;
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "smc.json", spec);
    let o = twistlie(&["projhom", "--cat", "smc", "--spec", &path]);
    assert_eq!(stdout(&o), "source\ttarget\tclasses\n0\t0\t1\n");
}

#[test]
fn collision_hom_from_files() {
    let dir = tempfile::tempdir().unwrap();
    let s = write(dir.path(), "s.json", r#"{"n": 2}"#);
    let t = write(dir.path(), "t.json", r#"{"n": 2, "edges": [[0, 1]]}"#);
    assert_eq!(stdout(&twistlie(&["projhom", "--cat", "cs", "--from", &s, "--to", &t])), "2\n");
}

#[test]
fn corrupted_golden_is_a_named_failure() {
    let dir = tempfile::tempdir().unwrap();
    let goldens = Path::new(env!("CARGO_MANIFEST_DIR")).join("goldens");
    for entry in std::fs::read_dir(&goldens).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), dir.path().join(entry.file_name())).unwrap();
    }
    let path = dir.path().join("fb_hom_counts.tsv");
    let text = std::fs::read_to_string(&path).unwrap().replace("2\t4\t12", "2\t4\t13");
    std::fs::write(&path, text).unwrap();
    let o = twistlie(&["acceptance", "projcat", "--golden-dir", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("FAIL\t1\tfb-classification\tgolden fb_hom_counts.tsv mismatch"), "{text}");
    assert!(text.contains("PASS\t2\twalking-arrow"));
}

#[test]
fn acceptance_reports_are_reproducible() {
    let a = twistlie(&["acceptance", "conf", "--seed", "42"]);
    let b = twistlie(&["acceptance", "conf", "--seed", "42"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
