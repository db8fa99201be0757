use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn taulab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_taulab")).args(args).env_remove("TAULAB_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, body).unwrap();
    p
}

struct Files {
    _dir: TempDir,
    linear: String,
    cyclic: String,
    point: String,
    square: String,
    dir: PathBuf,
}

fn files() -> Files {
    let dir = TempDir::new().unwrap();
    let path = |n: &str, b: &str| write(dir.path(), n, b).to_str().unwrap().to_string();
    Files {
        linear: path("l.json", r#"{"field": 1009, "kupisch": {"series": [2,2,2,1], "cyclic": false}}"#),
        cyclic: path("c.json", r#"{"field": 1009, "kupisch": {"series": [3,3,4], "cyclic": true}}"#),
        point: path("p.json", r#"{"kupisch": {"series": [1]}}"#),
        square: concat!(env!("CARGO_MANIFEST_DIR"), "/data/commutative-square.json").to_string(),
        dir: dir.path().to_path_buf(),
        _dir: dir,
    }
}

#[test]
fn info_reports() {
    let f = files();
    let out = stdout(&taulab(&["info", &f.cyclic]));
    assert!(out.contains("dim 10, 2-Iwanaga-Gorenstein"), "{out}");
    let out = stdout(&taulab(&["info", &f.linear]));
    assert!(out.contains("dim 7, dominant dimension 3, f = {1,2,3}"), "{out}");
    let out = stdout(&taulab(&["info", &f.point]));
    assert!(out.contains("semisimple, selfinjective"), "{out}");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&taulab(&["--format", "json", "info", &f.linear]))).unwrap();
    assert_eq!(json["dominant_dimension"], 3);
    assert_eq!(json["faithful_projective_injective"], serde_json::json!([1, 2, 3]));
}

#[test]
fn compute_chains() {
    let f = files();
    let run = |op: &str, m: &str| stdout(&taulab(&["compute", op, m, &f.linear])).trim().to_string();
    assert_eq!(run("tau", "S(0)"), "PJ(1,1)");
    assert_eq!(run("omega 2 then nu", "S(0)"), "PJ(1,1)");
    assert_eq!(run("nu then omega 2", "S(0)"), "0");
    assert_eq!(run("tau_perfect", "PJ(0,1)"), "true");
    assert_eq!(run("ext 1 S(3)", "S(2)"), "1");
    assert_eq!(run("ext 2 A", "S(2)"), "0");
    let sq = stdout(&taulab(&["compute", "tau_inv", "S(3)", &f.square]));
    assert!(sq.contains("module {"), "{sq}");
}

#[test]
fn classify_table_and_json() {
    let f = files();
    let out = stdout(&taulab(&["classify", &f.linear]));
    let perfect: Vec<&str> = out
        .lines()
        .skip(1)
        .filter(|l| l.split_whitespace().nth(7) == Some("yes"))
        .map(|l| l.split_whitespace().next().unwrap())
        .collect();
    assert_eq!(perfect, ["PJ(0,1)"]);
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&taulab(&["--format", "json", "classify", &f.cyclic]))).unwrap();
    let gp: Vec<&str> = json
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["gorenstein_projective"] == true && r["projective"] == false)
        .map(|r| r["label"].as_str().unwrap())
        .collect();
    assert_eq!(gp, ["PJ(0,1)", "PJ(1,2)"]);
    let some = stdout(&taulab(&["classify", &f.square, "--module", "S(0)", "--module", "P(0)"]));
    assert_eq!(some.lines().count(), 3);
}

#[test]
fn verify_and_exit_codes() {
    let f = files();
    let ok = taulab(&["verify", "main-theorem", &f.linear]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(stdout(&ok).contains("pass, 3 modules checked"));
    let gp = taulab(&["verify", "gp-equals-tau-perfect", &f.cyclic]);
    assert!(stdout(&gp).contains("pass, 7 modules checked"));
    assert_eq!(taulab(&["verify", "selfinjective-criterion", "--corpus", "2,3"]).status.code(), Some(0));

    let bad = write(&f.dir, "bad.json", "{\"kupisch\": ");
    assert_eq!(taulab(&["info", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(taulab(&["compute", "twist", "S(0)", &f.linear]).status.code(), Some(2));
    assert_eq!(taulab(&["verify", "no-such-suite", &f.linear]).status.code(), Some(2));
    assert_eq!(taulab(&["--max-resolution", "1", "info", &f.cyclic]).status.code(), Some(3));
    assert_eq!(taulab(&["compute", "tau_perfect", "P(0)", &f.linear]).status.code(), Some(2));
}

#[test]
fn corpus_files_are_written_and_reloadable() {
    let f = files();
    let out = f.dir.join("corpus");
    let listing = taulab(&["corpus", "2", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(listing.status.code(), Some(0));
    let names: Vec<String> = stdout(&listing).lines().map(String::from).collect();
    assert_eq!(names, ["L-1", "C-2", "L-2-1", "C-2-2", "A2-path", "commutative-square", "gentle-2ig"]);
    for n in &names {
        let path = out.join(format!("{n}.json"));
        assert_eq!(taulab(&["info", path.to_str().unwrap()]).status.code(), Some(0), "{n}");
    }
    let cyclic = stdout(&taulab(&["corpus", "2", "2", "--orientation", "cyclic"]));
    assert!(cyclic.starts_with("C-2\nC-2-2\n"));
}

#[test]
fn seed_and_field_flags() {
    let f = files();
    let a = stdout(&taulab(&["--seed", "7", "--format", "json", "classify", &f.cyclic]));
    let b = Command::new(env!("CARGO_BIN_EXE_taulab"))
        .args(["--format", "json", "classify", &f.cyclic])
        .env("TAULAB_SEED", "7")
        .output()
        .unwrap();
    assert_eq!(a, stdout(&b));
    let small = stdout(&taulab(&["--field", "2", "compute", "tau", "S(0)", &f.linear]));
    assert_eq!(small.trim(), "PJ(1,1)");
    assert_eq!(taulab(&["--field", "9", "info", &f.linear]).status.code(), Some(2));
}
