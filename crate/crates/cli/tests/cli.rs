use std::process::Command;

use liftcount::query::{run_document, RunOptions};
use liftcount::report::Outcome;
use liftcount::{builtin_spec, engine_config, parse_spec};
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_liftcount"));
    c.env_remove(liftcount::SEED_ENV);
    c
}

fn json_of(args: &[&str]) -> (i32, Value) {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = bin().args(args).arg("--json").arg(&path).output().unwrap();
    let text =
        std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("no report; stderr: {}", String::from_utf8_lossy(&out.stderr)));
    (out.status.code().unwrap(), serde_json::from_str(&text).unwrap())
}

#[test]
fn classes_of_q8() {
    let (code, v) = json_of(&["classes", "Q8"]);
    assert_eq!(code, 0);
    let classes = v["records"][0]["outcome"]["classes"].as_array().unwrap();
    assert_eq!(classes.len(), 5);
    let sizes: Vec<u64> = classes.iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes.iter().sum::<u64>(), 8);
}

#[test]
fn count_lifts_on_builtin_fixture() {
    let (code, v) = json_of(&["count-lifts", "n40", "alpha", "beta"]);
    assert_eq!(code, 0);
    let o = &v["records"][0]["outcome"];
    assert_eq!(o["kind"], "lifts");
    assert_eq!(o["brute_count"], 40);
    assert_eq!(o["formula_count"], 40);
    assert_eq!(o["q8_value_set"], true);
    let roots: Vec<&Value> = o["terms"].as_array().unwrap().iter().map(|t| &t["root"]).collect();
    assert!(roots.iter().all(|r| *r == &serde_json::json!([0, 1])));
    assert!(v["seed"].is_u64());
    assert_eq!(v["tolerance"]["snap_eps"], 1e-6);
}

#[test]
fn witnesses_flag_lists_lift_pairs() {
    let (code, v) = json_of(&["count-lifts", "n8", "alpha", "beta", "--witnesses"]);
    assert_eq!(code, 0);
    let w = v["records"][0]["outcome"]["witnesses"].as_array().unwrap();
    assert_eq!(w.len(), 8);
    assert!(w.contains(&serde_json::json!(["a*b", "a^2*b*z"])));
}

#[test]
fn obstruction_vanishes_without_lifts() {
    let (code, v) = json_of(&["obstruction", "n0", "alpha", "beta"]);
    assert_eq!(code, 0);
    let o = &v["records"][0]["outcome"];
    assert_eq!(o["quotient_order"], 1);
    assert!(o["verdict"].as_str().unwrap().contains("vanishes"));
    assert_eq!(o["lift_count"], 0);
}

#[test]
fn genus_two_from_command_line() {
    let (code, v) = json_of(&["count-homs", "n24", "alpha", "beta", "alpha", "beta"]);
    assert_eq!(code, 0);
    let o = &v["records"][0]["outcome"];
    assert_eq!(o["brute_count"], o["formula_count"]);
    assert_eq!(o["q8_shape"], serde_json::json!([4, 1]));
}

#[test]
fn human_table_shows_report_numbers() {
    let out = bin().args(["count-lifts", "n24", "alpha", "beta"]).output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("brute 24  formula 24  agree"), "{text}");
    assert!(text.contains("e^(2pi i 1/2)"));
}

#[test]
fn spec_file_run() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("s.spec");
    std::fs::write(
        &spec,
        "group Q8 = catalog Q8\ngroup A = cyclic 2 alpha\ngroup B = cyclic 2 beta\ngroup V = product A B\n\
         group T = product Q8 V\nsequence t : T -> V project\nquery lifts t alpha beta\nquery irreps Q8\n",
    )
    .unwrap();
    let out = bin().arg("run").arg("--spec").arg(&spec).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("brute 40  formula 40"));
    assert!(text.contains("dims [1, 1, 1, 1, 2]"));
}

#[test]
fn bad_spec_exits_nonzero_with_line() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("bad.spec");
    std::fs::write(&spec, "group Q8 = catalog Q8\ngroup Z = cyclic 2 z\ngroup G = semidirect Q8 Z\n  act z : i -> j, j -> j\n")
        .unwrap();
    let out = bin().arg("run").arg("--spec").arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("line 3") && err.contains("invalid action"), "{err}");
}

#[test]
fn unknown_element_is_a_failure() {
    let out = bin().args(["count-lifts", "n40", "alpha", "gamma"]).output().unwrap();
    assert!(!out.status.success());
}

#[test]
fn non_commuting_pair_fails() {
    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("s3.spec");
    std::fs::write(&spec, "group S3 = catalog S3\ngroup Z = cyclic 2\ngroup T = product Z S3\nsequence t : T -> S3 project\n")
        .unwrap();
    let out = bin().arg("count-lifts").arg("t").arg("(12)").arg("(123)").arg("--spec").arg(&spec).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8(out.stdout).unwrap().contains("do not commute"));
}

#[test]
fn seed_from_environment_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = bin().env(liftcount::SEED_ENV, "77").args(["classes", "S3", "--json"]).arg(&path).output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["seed"], 77);
    let (_, v) = json_of(&["classes", "S3", "--seed", "5"]);
    assert_eq!(v["seed"], 5);
}

#[test]
fn counts_do_not_depend_on_the_seed() {
    let doc = builtin_spec().unwrap();
    let counts = |seed| {
        let cfg = engine_config(Some(seed), None).unwrap();
        let r = run_document(&doc, &cfg, RunOptions::default()).unwrap();
        assert!(r.success);
        r.records
            .iter()
            .filter_map(|rec| match &rec.outcome {
                Some(Outcome::Lifts(l)) => Some((l.brute_count, l.formula_count)),
                Some(Outcome::Homs(h)) => Some((h.brute_count.unwrap_or(0), h.formula_count)),
                _ => None,
            })
            .collect::<Vec<_>>()
    };
    let base = counts(1);
    assert!(!base.is_empty());
    for seed in [2, 99, 123_456_789] {
        assert_eq!(counts(seed), base);
    }
}

#[test]
fn tight_tolerance_never_reports_wrong_counts() {
    let doc = parse_spec(liftcount::BUILTIN_FIXTURES[3].1).unwrap();
    let cfg = engine_config(None, Some(1e-12)).unwrap();
    let r = run_document(&doc, &cfg, RunOptions::default()).unwrap();
    for rec in &r.records {
        if let Some(Outcome::Lifts(l)) = &rec.outcome {
            assert!(!rec.ok || (l.brute_count == 24 && l.formula_count == 24));
        }
        if !rec.ok {
            assert!(rec.error.is_some() || matches!(rec.outcome, Some(Outcome::Lifts(_)) | Some(Outcome::Homs(_))));
        }
    }
}

#[test]
fn invalid_tolerance_is_rejected() {
    assert!(engine_config(None, Some(0.5)).is_err());
    let out = bin().args(["classes", "Q8", "--tol", "-1"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn explore_genus_labels_shapes() {
    let (code, v) = json_of(&["explore-genus", "--max-genus", "3"]);
    assert_eq!(code, 0);
    let rows = v["records"][0]["outcome"]["rows"].as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        let n = r["shape"][0].as_u64().unwrap();
        assert!([1, 2, 4].contains(&n), "{r}");
        assert!(r["count"].as_i64().unwrap() > 0);
    }
}

#[test]
fn verify_paper_is_seed_independent() {
    for seed in [1, 2] {
        let o = liftcount::golden::verify_paper(&liftcount_core::EngineConfig::with_seed(seed));
        assert!(o.passed, "seed {seed}");
    }
}
