//! End-to-end CLI tests: golden transcripts and the exit-code contract
//! (0 = true/success, 1 = false/witness, 2 = usage or budget error).

use actgeo::rep;
use actgeo::repfile::RepFile;
use std::path::PathBuf;
use std::process::{Command, Output};

struct Fixtures {
    _dir: tempfile::TempDir,
    c2: PathBuf,
    triv: PathBuf,
}

fn fixtures() -> Fixtures {
    let dir = tempfile::tempdir().unwrap();
    let c2 = dir.path().join("c2.json");
    RepFile::from_rep(&rep::c2_negation(3)).save(&c2).unwrap();
    let triv = dir.path().join("triv.json");
    RepFile::from_rep(&rep::c2_trivial_action(3)).save(&triv).unwrap();
    Fixtures { _dir: dir, c2, triv }
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_actgeo"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn fox_and_truncate_transcripts() {
    let out = run(&["fox", "--var", "1", "y1*y2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "result: 1\n");

    let out = run(&["fox", "--var", "2", "y1*y2^-1"]);
    assert_eq!(stdout(&out), "result: -y1*y2^-1\n");

    let out = run(&["truncate", "y1*y2", "--bound", "3", "--gens", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "dimension: 7\ncoordinates: 1 + 1*[1] + 1*[1,2] + 1*[2]\n"
    );
}

#[test]
fn qcheck_exit_codes() {
    let f = fixtures();
    let c2 = f.c2.to_str().unwrap();

    let out = run(&[
        "qcheck", c2, "--premise", "x1 o (y1-1)", "--conclusion", "x1 o (y1^2-1)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "result: HOLDS\n");

    let out = run(&["qcheck", c2, "--conclusion", "x1 o (y1-1)"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(stdout(&out), "result: FAILS\n");
}

#[test]
fn equiv_witness_and_agreement() {
    let f = fixtures();
    let c2 = f.c2.to_str().unwrap();
    let triv = f.triv.to_str().unwrap();

    // a 1-dimensional faithful C2 action is separated from the trivial one
    let out = run(&["equiv", triv, c2, "--max-len", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("result: WITNESS"), "{text}");
    assert!(text.contains("witness: x1 o (2 + y1)"), "{text}");
    assert!(text.contains("witness_premises: []"), "{text}");

    // a representation is equivalent to itself within any bounds
    let out = run(&["equiv", c2, c2, "--max-len", "2", "--group-side"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("result: NONE"), "{text}");
    assert!(text.contains("group_witness: NONE"), "{text}");
}

#[test]
fn vset_closure_ann_stab_transcripts() {
    let f = fixtures();
    let c2 = f.c2.to_str().unwrap();

    let out = run(&["vset", c2, "--eq", "x1 o (y1-1)", "--format", "records"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "points=4\npoints_enumerated=6\npoint=[0]|[0]\npoint=[0]|[1]\npoint=[1]|[0]\npoint=[2]|[0]\n"
    );

    let out = run(&[
        "closure", c2, "--eq", "x1 o (y1-1)", "--target", "x1 o (y1^-1-1)",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "result: HOLDS\n");

    let out = run(&["ann", c2, "--vectors", "1"]);
    assert_eq!(stdout(&out), "rank: 1\ntwo_sided: true\nbasis: 1,1\n");

    let out = run(&["stab", c2, "--vectors", "1"]);
    assert_eq!(
        stdout(&out),
        "ann_rank: 1\nann_basis: 1,1\ngroup_members: 0\n"
    );

    let out = run(&[
        "eval", c2, "--expr", "x1 o (y1-1)", "--alpha", "1", "--beta", "1",
    ]);
    assert_eq!(stdout(&out), "result: 1\n");
}

#[test]
fn usage_and_budget_errors_exit_2() {
    let out = run(&["fox", "--var", "1", "bad**"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("syntax error"));

    let f = fixtures();
    let c2 = f.c2.to_str().unwrap();
    let out = run(&["vset", c2, "--eq", "x1 o (1)", "--max-points", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["qcheck", "/nonexistent.json", "--conclusion", "x1 o (1)"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn deterministic_across_runs_and_workers() {
    let f = fixtures();
    let c2 = f.c2.to_str().unwrap();
    let triv = f.triv.to_str().unwrap();
    let argsets: Vec<Vec<&str>> = vec![
        vec!["equiv", triv, c2, "--max-len", "3", "--seed", "5", "--format", "records"],
        vec!["chain", c2, "--set", "", "--set", "x1 o (y1-1)", "--max-len", "2"],
    ];
    for args in &argsets {
        let base = run(args);
        for workers in ["1", "4"] {
            let mut a: Vec<&str> = args.clone();
            a.extend(["--workers", workers]);
            let out = run(&a);
            assert_eq!(out.stdout, base.stdout, "args {args:?} workers {workers}");
        }
    }
}
