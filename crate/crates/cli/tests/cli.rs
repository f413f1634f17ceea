use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn hyperstab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperstab"))
        .args(args)
        .env_remove("HYPERSTAB_BUDGET")
        .output()
        .unwrap()
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn edges_of(path: &Path) -> Vec<Vec<usize>> {
    let v: Value = serde_json::from_str(&fs::read_to_string(path).unwrap()).unwrap();
    serde_json::from_value(v["edges"].clone()).unwrap()
}

fn write_graph(path: &Path, sizes: &[usize], edges: &[[usize; 3]]) {
    let v = serde_json::json!({"k": 3, "sizes": sizes, "edges": edges});
    fs::write(path, v.to_string()).unwrap();
}

#[test]
fn gen_writes_expected_sizes() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    let out = hyperstab(&[
        "gen",
        "extremal",
        "--k",
        "3",
        "--n",
        "5",
        "--m",
        "2",
        "-o",
        h.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(edges_of(&h).len(), 37);
    let c = dir.path().join("c.json");
    assert!(
        hyperstab(&["gen", "complete", "--k", "3", "--n", "2", "-o", c.to_str().unwrap()])
            .status
            .success()
    );
    assert_eq!(edges_of(&c).len(), 8);
}

#[test]
fn gen_random_is_seeded() {
    let args = [
        "gen", "random", "--k", "3", "--sizes", "3,3,3", "--edges", "10", "--seed", "7",
    ];
    let a = hyperstab(&args);
    let b = hyperstab(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(stdout_json(&a)["edges"].as_array().unwrap().len(), 10);
    let other = hyperstab(&[
        "gen", "random", "--k", "3", "--sizes", "3,3,3", "--edges", "10", "--seed", "8",
    ]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn gen_bad_args_exit_2() {
    assert_eq!(
        hyperstab(&["gen", "extremal", "--n", "3", "--m", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(hyperstab(&["gen", "extremal", "--n", "3"]).status.code(), Some(2));
    assert_eq!(
        hyperstab(&["gen", "random", "--sizes", "2,2,2", "--edges", "9"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn solve_reports_nu_and_tau() {
    let dir = tempfile::tempdir().unwrap();
    let h = dir.path().join("h.json");
    hyperstab(&["gen", "extremal", "--n", "5", "--m", "2", "-o", h.to_str().unwrap()]);
    let out = hyperstab(&["solve", "--nu", "--tau", h.to_str().unwrap()]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["nu"], 2);
    assert_eq!(v["tau"], 3);
    assert_eq!(v["matching"].as_array().unwrap().len(), 2);
    assert_eq!(v["cover"].as_array().unwrap().len(), 3);
}

#[test]
fn solve_perfect_matching_and_empty() {
    let dir = tempfile::tempdir().unwrap();
    let c = dir.path().join("c.json");
    hyperstab(&["gen", "complete", "--n", "2", "-o", c.to_str().unwrap()]);
    let v = stdout_json(&hyperstab(&["solve", "--pm", c.to_str().unwrap()]));
    assert_eq!(v["perfect_matching"].as_array().unwrap().len(), 2);
    let e = dir.path().join("e.json");
    write_graph(&e, &[3, 3, 3], &[]);
    let v = stdout_json(&hyperstab(&["solve", "--nu", e.to_str().unwrap()]));
    assert_eq!(v["nu"], 0);
    assert!(v.get("tau").is_none());
}

#[test]
fn solve_error_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    fs::write(&bad, "{\"k\": 3, \"sizes\": [2,2,2], \"edges\": [[0,0,5]]}").unwrap();
    assert_eq!(hyperstab(&["solve", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(hyperstab(&["solve", "/nonexistent/file.json"]).status.code(), Some(2));
    let h = dir.path().join("h.json");
    hyperstab(&["gen", "extremal", "--n", "6", "--m", "3", "-o", h.to_str().unwrap()]);
    let out = Command::new(env!("CARGO_BIN_EXE_hyperstab"))
        .args(["solve", "--tau", h.to_str().unwrap()])
        .env("HYPERSTAB_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn shift_commands() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.json");
    write_graph(&g, &[2, 2, 2], &[[1, 1, 1]]);
    let s = dir.path().join("s.json");
    assert!(
        hyperstab(&["shift", g.to_str().unwrap(), "--closure", "-o", s.to_str().unwrap()])
            .status
            .success()
    );
    assert_eq!(edges_of(&s), vec![vec![0, 0, 0]]);
    let s2 = dir.path().join("s2.json");
    hyperstab(&["shift", s.to_str().unwrap(), "--closure", "-o", s2.to_str().unwrap()]);
    assert_eq!(fs::read(&s).unwrap(), fs::read(&s2).unwrap());

    let p = dir.path().join("p.json");
    write_graph(&p, &[2, 2, 2], &[[1, 0, 0]]);
    let v = stdout_json(&hyperstab(&["shift", p.to_str().unwrap(), "--pair", "0,0,1"]));
    assert_eq!(v["edges"], serde_json::json!([[0, 0, 0]]));
    assert_eq!(
        hyperstab(&["shift", p.to_str().unwrap(), "--pair", "0,1,0"])
            .status
            .code(),
        Some(2)
    );

    let t = dir.path().join("t.json");
    assert!(hyperstab(&[
        "shift",
        g.to_str().unwrap(),
        "--closure",
        "--trace",
        t.to_str().unwrap()
    ])
    .status
    .success());
    let trace: Value = serde_json::from_str(&fs::read_to_string(&t).unwrap()).unwrap();
    let graphs = trace["graphs"].as_array().unwrap();
    assert_eq!(graphs.len(), trace["steps"].as_array().unwrap().len() + 1);
    assert_eq!(graphs[0]["edges"], serde_json::json!([[1, 1, 1]]));
    assert_eq!(graphs.last().unwrap()["edges"], serde_json::json!([[0, 0, 0]]));
}

#[test]
fn links_census_has_64_rows() {
    let out = hyperstab(&["links", "census"]);
    assert!(out.status.success());
    let rows = stdout_json(&out);
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 64);
    assert!(rows
        .iter()
        .filter(|r| r["total"].as_u64().unwrap() >= 5)
        .all(|r| r["rainbow"] == true));
}

#[test]
fn verify_exit_codes() {
    let out = hyperstab(&["verify", "lem-2.5", "--n", "3", "--exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["status"], "PASS");
    assert_eq!(r["claim_id"], "lem-2.5");
    let r = stdout_json(&hyperstab(&["verify", "thm-1.1", "--k", "3", "--n", "3"]));
    assert_eq!(r["status"], "PASS");
    assert_eq!(hyperstab(&["verify", "thm-9.9"]).status.code(), Some(2));
    assert_eq!(hyperstab(&["verify", "thm-1.2", "--n", "3"]).status.code(), Some(2));
}

#[test]
fn verify_exploratory_archives() {
    let dir = tempfile::tempdir().unwrap();
    let out = hyperstab(&[
        "verify",
        "lem-3.3",
        "--n",
        "3",
        "--trials",
        "300",
        "--seed",
        "42",
        "--jobs",
        "2",
        "--archive",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = stdout_json(&out);
    assert_eq!(r["status"], "EXPLORATORY");
    let files = fs::read_dir(dir.path()).unwrap().count();
    assert!(files > 0);
}

#[test]
fn search_conjecture() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let run = |d: &Path, budget: &str| {
        hyperstab(&[
            "search",
            "conjecture",
            "--n",
            "3",
            "--m",
            "2",
            "--budget",
            budget,
            "--seed",
            "1",
            "--archive",
            d.to_str().unwrap(),
        ])
    };
    let out = run(&a, "400");
    assert!(out.status.success());
    let summary = stdout_json(&out);
    assert_eq!(summary["status"], "EXPLORATORY");
    assert!(run(&b, "400").status.success());
    let list = |d: &Path| {
        let mut v: Vec<_> = fs::read_dir(d).unwrap().map(|e| e.unwrap().file_name()).collect();
        v.sort();
        v
    };
    assert_eq!(list(&a), list(&b));
    for name in list(&a) {
        assert_eq!(fs::read(a.join(&name)).unwrap(), fs::read(b.join(&name)).unwrap());
    }
    let z = dir.path().join("z");
    let out = run(&z, "0");
    assert!(out.status.success());
    assert!(list(&z).is_empty());
    assert_eq!(stdout_json(&out)["instances_tested"], 0);
    assert_eq!(
        hyperstab(&["search", "conjecture", "--n", "3", "--m", "3"])
            .status
            .code(),
        Some(2)
    );
}
