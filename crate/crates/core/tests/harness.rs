use hyperstab::constructions::{extremal_hknm, stability_threshold};
use hyperstab::harness::*;
use hyperstab::shifting::shift_closure;
use hyperstab::solvers::Budget;
use serde_json::json;

fn opts() -> Options {
    Options::default()
}

#[test]
fn berge_reports() {
    assert_eq!(verify_berge(3, 3).unwrap().status, Status::Pass);
    assert_eq!(verify_berge(3, 1).unwrap().status, Status::Pass);
    let r = verify_berge(4, 3).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.findings["matchings"], json!(27));
    assert!(verify_berge(3, 101).is_err());
}

#[test]
fn tightness_table() {
    let r = verify_construction_tightness(6).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.instances_tested, 15);
    let row = r.findings["table"]
        .as_array()
        .unwrap()
        .iter()
        .find(|row| row["n"] == 5 && row["m"] == 2)
        .unwrap()
        .clone();
    assert_eq!(
        row,
        json!({"n": 5, "m": 2, "e": 37, "threshold": 38, "nu": 2, "tau": 3})
    );
}

#[test]
fn max_intersecting_small() {
    // the 8 tuples of [2]^3 split into 4 complementary (disjoint) pairs
    assert_eq!(max_intersecting_family(2).unwrap(), 4);
    // the star at one vertex has n^2 edges, and 10 edges already force ν ≥ 2
    assert_eq!(max_intersecting_family(3).unwrap(), 9);
}

#[test]
fn aharoni_howard_runs() {
    let r = verify_aharoni_howard(2, 2, Sampling::Exhaustive, 0, opts()).unwrap();
    assert_eq!(r.status, Status::Pass);
    // graphs on the 8 tuples of [2]^3 with at least 5 edges
    let expected: u64 = (5..=8u64).map(|e| binom(8, e)).sum();
    assert_eq!(r.instances_tested, expected);
    assert_eq!(r.instances_tested + r.instances_skipped, 256);
    let r = verify_aharoni_howard(3, 2, Sampling::Trials(200), 3, opts()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.instances_tested, 200);
    assert_eq!(r.findings["max_intersecting_edges"], json!(9));
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn lemma25_exhaustive_n2_count() {
    let r = verify_lemma25(2, Sampling::Exhaustive, 0).unwrap();
    assert_eq!(r.status, Status::Pass);
    let counts: Vec<u64> = (0u64..16).map(|m| m.count_ones() as u64).collect();
    let expected = counts
        .iter()
        .flat_map(|&a| counts.iter().map(move |&b| (a, b)))
        .filter(|&(a, b)| a >= 1 && b >= 1 && a + b > 4)
        .count() as u64;
    assert_eq!(r.instances_tested, expected);
    assert_eq!(r.findings["star_blocked_pair_blocked"], json!(true));
    assert_eq!(r.findings["star_blocked_pair_sum"], json!(4));
}

#[test]
fn rainbow_theorem_with_control() {
    let r = verify_rainbow_theorem(3, 2, 300, 1).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.instances_tested, 300);
    assert_eq!(r.findings["tight_family_blocked"], json!(true));
}

#[test]
fn intersecting_regimes() {
    let r = verify_intersecting_stability(5, 5, 5, 300, 2, opts()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.instances_tested > 0);
    assert_eq!(
        r.findings["tight_family"],
        json!({"e": 13, "nu": 1, "tau": 2, "sum_minus_two": 13})
    );
    let r = verify_intersecting_stability(3, 3, 3, 100, 2, opts()).unwrap();
    assert_eq!(r.status, Status::Exploratory);
}

#[test]
fn shift_and_shifted_stability() {
    assert_eq!(
        verify_shift_monotone(3, 12, 300, 5, opts()).unwrap().status,
        Status::Pass
    );
    let r = verify_shifted_stability(4, 2, 500, 5, opts()).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert!(r.instances_tested > 0);
    assert!(verify_shifted_stability(4, 3, 10, 0, opts()).is_err());
    // the shifted construction sits one edge below the threshold
    let h = shift_closure(&extremal_hknm(3, 5, 2).unwrap());
    assert_eq!(h.edge_count() + 1, stability_threshold(5, 2));
    assert_eq!(
        check_stability(&h, 2, true, Budget::UNLIMITED).unwrap(),
        Verdict::OutOfHypothesis
    );
}

#[test]
fn exploratory_suites() {
    let r = verify_main_stability(5, 2, 100, 0, opts()).unwrap();
    assert_eq!(r.status, Status::Exploratory);
    assert_eq!(r.findings["tightness"], json!({"e": 37, "nu": 2, "tau": 3, "ok": true}));
    assert_eq!(
        verify_small_matching_stability(4, 2, 50, 0, opts()).unwrap().status,
        Status::Exploratory
    );
    assert_eq!(
        verify_near_perfect_stability(3, 50, 0, opts()).unwrap().status,
        Status::Exploratory
    );
}

#[test]
fn daykin_haggkvist_thresholds() {
    let r = verify_daykin_haggkvist(3, 200, 0).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.findings["delta_threshold"], json!(6));
    assert_eq!(r.findings["complete_graph_has_pm"], json!(true));
    assert_eq!(
        verify_daykin_haggkvist(4, 50, 0).unwrap().findings["delta_threshold"],
        json!(11)
    );
}

#[test]
fn conjecture_search_behaviour() {
    let r = conjecture_search(4, 3, 2, 0, 1, opts()).unwrap();
    assert_eq!(r.status, Status::Exploratory);
    assert_eq!(r.instances_tested, 0);
    assert!(r.counterexamples.is_empty());
    assert_eq!(r.findings["start"], json!({"e": 47, "nu": 2, "tau": 3}));
    assert_eq!(r.findings["target_edges"], json!(48));
    let a = conjecture_search(4, 3, 2, 300, 9, opts()).unwrap();
    let b = conjecture_search(4, 3, 2, 300, 9, opts()).unwrap();
    assert_eq!(a.to_json_line_untimed(), b.to_json_line_untimed());
    for rec in &a.counterexamples {
        assert_eq!(recheck(rec).unwrap(), Verdict::Violates);
    }
}

#[test]
fn solver_cross_check_exhaustive() {
    let r = solver_cross_check(2, None, Sampling::Exhaustive, 0).unwrap();
    assert_eq!(r.status, Status::Pass);
    assert_eq!(r.instances_tested, 256);
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| {
                verify_shifted_stability(5, 2, 300, 11, opts())
                    .unwrap()
                    .to_json_line_untimed()
            })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn same_seed_same_report() {
    let a = verify_shift_monotone(3, 12, 50, 1, opts()).unwrap();
    let b = verify_shift_monotone(3, 12, 50, 1, opts()).unwrap();
    assert_eq!(a.to_json_line_untimed(), b.to_json_line_untimed());
    assert_eq!(a.seed, 1);
}

#[test]
fn archive_round_trip() {
    let r = verify_near_perfect_stability(3, 300, 42, opts()).unwrap();
    assert!(!r.counterexamples.is_empty(), "expected small-n findings at n = 3");
    let dir = tempfile::tempdir().unwrap();
    let paths = archive::archive_report(dir.path(), &r).unwrap();
    assert_eq!(paths.len(), r.counterexamples.len());
    for p in &paths {
        let name = p.file_name().unwrap().to_str().unwrap();
        assert!(name.starts_with("lem-3.3-") && name.ends_with(".json"));
    }
    let mut distinct = paths.clone();
    distinct.sort();
    distinct.dedup();
    let loaded = archive::load_archive(dir.path()).unwrap();
    assert_eq!(loaded.len(), distinct.len());
    for (_, rec) in loaded {
        assert!(r.counterexamples.contains(&rec));
        assert_eq!(recheck(&rec).unwrap(), Verdict::Violates);
    }
}

#[test]
fn recheck_rejects_garbage() {
    assert!(recheck(&json!({"claim_id": "nope"})).is_err());
    assert!(recheck(&json!({"graph": {}})).is_err());
    let h = extremal_hknm(3, 5, 2).unwrap();
    let rec = json!({"claim_id": "thm-1.3", "m": 2, "graph": serde_json::from_str::<serde_json::Value>(&h.to_json()).unwrap()});
    assert_eq!(recheck(&rec).unwrap(), Verdict::OutOfHypothesis);
    let rec = json!({"claim_id": "hknm-tight", "m": 2, "graph": serde_json::from_str::<serde_json::Value>(&h.to_json()).unwrap()});
    assert_eq!(recheck(&rec).unwrap(), Verdict::Holds);
}

#[test]
fn claim_table() {
    for id in [
        "thm-1.1",
        "thm-1.2",
        "lem-2.1",
        "lem-3.1",
        "solver-xcheck",
        "hknm-tight",
    ] {
        assert!(matches!(claim(id).unwrap().regime, Regime::Asserted), "{id}");
    }
    for id in ["thm-1.3", "conj-1.4", "lem-2.6", "lem-3.3"] {
        assert!(matches!(claim(id).unwrap().regime, Regime::Exploratory(_)), "{id}");
    }
    assert!(claim("thm-9.9").is_none());
    assert!(run_claim("thm-9.9", &RunParams::default(), 0, opts()).is_err());
}
