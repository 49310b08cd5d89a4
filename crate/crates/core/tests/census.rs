use std::fs;

use cosmetic_core::census::{run, run_csv, Report, RunConfig};
use cosmetic_core::knot::bundled_csv;
use cosmetic_core::obstruction::{Conclusion, Filter, Stage};
use serde_json::Value;

const SCHEMA: &str = include_str!("../schema/report.schema.json");

fn validate(report: &Report) {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).expect("schema compiles");
    let instance: Value = serde_json::from_str(&report.to_json().unwrap()).unwrap();
    let msgs: Vec<String> = match compiled.validate(&instance) {
        Ok(()) => Vec::new(),
        Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
    };
    assert!(msgs.is_empty(), "report violates schema:\n{}", msgs.join("\n"));
}

fn small_census() -> String {
    let mut lines: Vec<&str> = bundled_csv().lines().take(16).collect();
    lines.push("U,,0,,,");
    lines.push("broken,\"[[1,2,3,4]]\",1,,,");
    lines.join("\n")
}

#[test]
fn parallelism_does_not_change_the_report() {
    let base = RunConfig { levels: vec![5, 7], ..Default::default() };
    let one = run(&RunConfig { jobs: 1, ..base.clone() }).unwrap();
    let eight = run(&RunConfig { jobs: 8, ..base }).unwrap();
    assert_eq!(one.to_json().unwrap(), eight.to_json().unwrap());
}

#[test]
fn reports_follow_the_schema() {
    let configs = [
        RunConfig::default(),
        RunConfig { levels: vec![5, 7], filters: vec![Filter::Zeta5, Filter::Fr], ..Default::default() },
        RunConfig { filters: vec![Filter::Slopes], max_crossings: Some(7), ..Default::default() },
    ];
    for c in &configs {
        validate(&run(c).unwrap());
    }
    let mixed = run_csv(small_census().as_bytes(), &RunConfig::default()).unwrap();
    assert_eq!(mixed.summary.malformed, 1);
    validate(&mixed);
    let timed = RunConfig { timeout: Some(std::time::Duration::ZERO), max_crossings: Some(5), ..Default::default() };
    let skipped = run(&timed).unwrap();
    assert!(!skipped.summary.skipped.is_empty());
    validate(&skipped);
}

#[test]
fn warm_cache_matches_cold_run() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cables.json");
    let base = RunConfig { levels: vec![5, 7], max_crossings: Some(8), ..Default::default() };
    let cold = run(&base).unwrap();
    let filling = run(&RunConfig { cache: Some(cache.clone()), ..base.clone() }).unwrap();
    assert!(fs::metadata(&cache).unwrap().len() > 0);
    let warm = run(&RunConfig { cache: Some(cache), jobs: 4, ..base }).unwrap();
    assert_eq!(cold, filling);
    assert_eq!(cold, warm);
}

#[test]
fn bundled_census_counts() {
    let report = run(&RunConfig::default()).unwrap();
    let s = &report.summary;
    assert_eq!(s.total, 84);
    assert_eq!(s.zeta5_trivial, 2);
    assert_eq!(s.finite_type_vanishing, 1);
    assert_eq!(s.zeta5_and_finite_type, 0);
    assert_eq!(s.excluded, 84);
    assert!(s.residual.is_empty());
    let survivors: Vec<&str> = report
        .verdicts
        .iter()
        .filter(|v| v.zeta5_trivial == Some(true))
        .map(|v| v.name.as_str())
        .collect();
    assert_eq!(survivors, ["8_19", "9_1"]);
}

#[test]
fn zeta5_failure_means_no_level_five_hits() {
    let config = RunConfig { filters: vec![Filter::Zeta5, Filter::Fr], ..Default::default() };
    for v in run(&config).unwrap().verdicts {
        if v.zeta5_trivial == Some(false) {
            assert!(v.fr_orthogonal_hits[0].labels.is_empty(), "{}", v.name);
        }
    }
}

#[test]
fn output_file_is_written() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let report = run(&RunConfig { output: Some(out.clone()), max_crossings: Some(6), ..Default::default() }).unwrap();
    assert_eq!(fs::read_to_string(out).unwrap(), report.to_json().unwrap());
    let v = &report.verdicts[0];
    assert_eq!(v.name, "3_1");
    assert_eq!(v.conclusion, Conclusion::Excluded { by: Stage::Delta2 });
}

#[test]
fn schema_rejects_tampered_reports() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let report = run(&RunConfig { max_crossings: Some(4), ..Default::default() }).unwrap();
    let good: Value = serde_json::from_str(&report.to_json().unwrap()).unwrap();
    assert!(compiled.is_valid(&good));
    let mut bad = good.clone();
    bad["verdicts"][0]["conclusion"]["status"] = Value::from("maybe");
    assert!(!compiled.is_valid(&bad));
    let mut bad = good.clone();
    bad["settings"]["levels"] = Value::from(vec![3]);
    assert!(!compiled.is_valid(&bad));
    let mut bad = good;
    bad["verdicts"][0]["candidate_slopes"] = Value::from(vec!["±3"]);
    assert!(!compiled.is_valid(&bad));
}

#[test]
fn galois_twist_keeps_conclusions() {
    let base = RunConfig { levels: vec![5, 7], filters: vec![Filter::Zeta5, Filter::Fr], ..Default::default() };
    let plain = run(&base).unwrap();
    for twist in [3i64, -1] {
        let twisted = run(&RunConfig { twist, ..base.clone() }).unwrap();
        for (a, b) in plain.verdicts.iter().zip(&twisted.verdicts) {
            assert_eq!(a.conclusion, b.conclusion, "{} twist {twist}", a.name);
            assert_eq!(a.fr_orthogonal_hits, b.fr_orthogonal_hits, "{} twist {twist}", a.name);
        }
    }
}
