mod common;

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cpmackey::cli::document::{to_json_pretty, MackeyDocument};
use cpmackey::mackey::CpMackeyFunctor;
use tempfile::TempDir;

use common::{basic, random_functor};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cpmackey"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn save(dir: &TempDir, name: &str, m: &CpMackeyFunctor) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(
        &path,
        to_json_pretty(&MackeyDocument::from_functor(m, None)),
    )
    .unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn invariants_of(args: &[&str]) -> String {
    let o = run(args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    stdout(&o).trim_end_matches('\n').to_string()
}

#[test]
fn make_writes_a_valid_document() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("a.json");
    let o = run(&[
        "make",
        "burnside",
        "--prime",
        "3",
        "--json",
        s(&path),
        "--name",
        "A",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).is_empty());
    let doc: MackeyDocument =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc.name.as_deref(), Some("A"));
    let m = doc.to_functor().unwrap();
    assert_eq!(m, cpmackey::mackey::burnside(3).unwrap());
}

#[test]
fn random_make_is_deterministic() {
    let dir = TempDir::new().unwrap();
    let files: Vec<String> = ["x.json", "y.json"]
        .iter()
        .map(|f| {
            let path = dir.path().join(f);
            let o = run(&[
                "make",
                "random",
                "--prime",
                "5",
                "--seed",
                "42",
                "--json",
                s(&path),
            ]);
            assert_eq!(o.status.code(), Some(0));
            std::fs::read_to_string(path).unwrap()
        })
        .collect();
    assert_eq!(files[0], files[1]);
    let doc: MackeyDocument = serde_json::from_str(&files[0]).unwrap();
    assert_eq!(doc.to_functor().unwrap(), random_functor(5, 42));
}

#[test]
fn user_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    assert_eq!(
        run(&["make", "zero", "--prime", "4"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["make", "orbit", "--prime", "2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let missing = dir.path().join("missing.json");
    let o = run(&["box", "--m", s(&missing), "--n", s(&missing)]);
    assert_eq!(o.status.code(), Some(2));

    let a = save(&dir, "a.json", &cpmackey::mackey::burnside(2).unwrap());
    let o = run(&["compute", "extcoh", "--i", "1", "--m", s(&a), "--n", s(&a)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));

    let bad = dir.path().join("bad.json");
    let text =
        to_json_pretty(&MackeyDocument::from_functor(&basic(), None)).replace("\"tr\"", "\"tr_\"");
    std::fs::write(&bad, text).unwrap();
    assert_eq!(
        run(&["box", "--m", s(&bad), "--n", s(&a)]).status.code(),
        Some(2)
    );

    let o = run(&[
        "periodicity",
        "--prime",
        "2",
        "--samples",
        "1",
        "--from",
        "1",
        "--to",
        "3",
        "--seed",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invalid_structure_maps_are_rejected() {
    let dir = TempDir::new().unwrap();
    let doc = MackeyDocument::from_functor(&basic(), None);
    let mut value = serde_json::to_value(&doc).unwrap();
    // tr = 3 breaks res ∘ tr = 1 + conj
    value["tr"]["entries"] = serde_json::json!([[3]]);
    let path = dir.path().join("broken.json");
    std::fs::write(&path, value.to_string()).unwrap();
    let o = run(&["box", "--m", s(&path), "--n", s(&path)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));
}

#[test]
fn invariants_line_format() {
    let dir = TempDir::new().unwrap();
    let m = save(&dir, "m.json", &basic());
    let line = invariants_of(&[
        "compute",
        "tor",
        "--i",
        "1",
        "--m",
        s(&m),
        "--n",
        s(&m),
        "--prune",
        "--invariants",
    ]);
    assert_eq!(line, "fixed: 2 / underlying: ");
    let line = invariants_of(&[
        "compute",
        "ext",
        "--i",
        "0",
        "--m",
        s(&m),
        "--n",
        s(&m),
        "--prune",
        "--invariants",
    ]);
    assert_eq!(line, "fixed: 0 / underlying: 0");
}

#[test]
fn degree_zero_matches_box_and_ihom() {
    let dir = TempDir::new().unwrap();
    let m = save(&dir, "m.json", &random_functor(3, 11));
    let n = save(&dir, "n.json", &random_functor(3, 12));
    let a = save(&dir, "a.json", &cpmackey::mackey::burnside(3).unwrap());
    let flags = ["--prune", "--invariants"];
    let with = |cmd: &[&str]| invariants_of(&[cmd, &flags].concat());
    assert_eq!(
        with(&["compute", "tor", "--i", "0", "--m", s(&m), "--n", s(&n)]),
        with(&["box", "--m", s(&m), "--n", s(&n)])
    );
    assert_eq!(
        with(&["compute", "ext", "--i", "0", "--m", s(&m), "--n", s(&n)]),
        with(&["ihom", "--m", s(&m), "--n", s(&n)])
    );
    let own = with(&["box", "--m", s(&m), "--n", s(&m)]);
    assert!(own.starts_with("fixed: "));
    let unit = with(&["box", "--m", s(&a), "--n", s(&m)]);
    let inner = with(&["ihom", "--m", s(&a), "--n", s(&m)]);
    let pruned = cpmackey::mackey::prune(&random_functor(3, 11)).functor;
    let (f, u) = pruned.level_invariants();
    let join = |v: &[num_bigint::BigInt]| {
        v.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    let expected = format!("fixed: {} / underlying: {}", join(&f), join(&u));
    assert_eq!(unit, expected);
    assert_eq!(inner, expected);
}

#[test]
fn unpruned_resolution_ranks() {
    let dir = TempDir::new().unwrap();
    let m = save(&dir, "m.json", &basic());
    let out_json = dir.path().join("res.json");
    let o = run(&[
        "res",
        "--m",
        s(&m),
        "--n",
        "2",
        "--no-prune",
        "--json",
        s(&out_json),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for expected in [
        "d0: P0 -> M   P0 ranks (fixed 3, underlying 3)",
        "d1: P1 -> P0   P1 ranks (fixed 3, underlying 3)",
        "d2: P2 -> P1   P2 ranks (fixed 1, underlying 2)",
    ] {
        assert!(text.contains(expected), "missing {expected:?} in\n{text}");
    }
    let docs: Vec<serde_json::Value> =
        serde_json::from_str(&std::fs::read_to_string(out_json).unwrap()).unwrap();
    assert_eq!(docs.len(), 3);
}
