use autkum_core::curvelattice::kummer_config;
use autkum_core::verifier::{
    emit_report, run_pipeline, run_pipeline_with, OutputFormat, PipelineParams, Status, REPORT_SCHEMA,
};

fn quick() -> PipelineParams {
    PipelineParams {
        depth: 8,
        nmax: 4,
        ..Default::default()
    }
}

fn schema() -> jsonschema::JSONSchema {
    let value: serde_json::Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    jsonschema::JSONSchema::compile(&value).unwrap()
}

#[test]
fn json_report_matches_schema() {
    let report = run_pipeline(&quick()).unwrap();
    let text = emit_report(&report, OutputFormat::Json);
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let compiled = schema();
    assert!(compiled.is_valid(&value));
    assert_eq!(value["overall"], "pass");
    assert_eq!(value["checks"].as_array().unwrap().len(), 13);
    assert!(value["axioms"][0].as_str().unwrap().contains("canonical representation"));
}

#[test]
fn schema_rejects_missing_version() {
    let report = run_pipeline(&quick()).unwrap();
    let mut value = serde_json::to_value(&report).unwrap();
    value.as_object_mut().unwrap().remove("version");
    assert!(!schema().is_valid(&value));
}

#[test]
fn byte_identical_reruns() {
    for format in [OutputFormat::Json, OutputFormat::Text] {
        let a = emit_report(&run_pipeline(&quick()).unwrap(), format);
        let b = emit_report(&run_pipeline(&quick()).unwrap(), format);
        assert_eq!(a, b);
    }
}

#[test]
fn seed_is_recorded() {
    let params = PipelineParams { seed: 99, ..quick() };
    let report = run_pipeline(&params).unwrap();
    assert_eq!(report.check("escape_witnesses").unwrap().witness["seed"], 99);
    assert!(report.passed());
}

#[test]
fn corrupted_gram_entry_fails_rank_check() {
    let cfg = kummer_config().with_gram_entry("E1", "C11", 0).unwrap();
    let report = run_pipeline_with(&quick(), &cfg).unwrap();
    assert_eq!(report.overall, Status::Fail);
    let rank = report.check("gram_rank").unwrap();
    assert_eq!(rank.status, Status::Fail);
    assert_ne!(rank.witness["rank"], 18);
    assert_eq!(report.check("fibers").unwrap().status, Status::Fail);
    let mw = report.check("mw_action").unwrap();
    assert_eq!(mw.status, Status::Error);
    let text = emit_report(&report, OutputFormat::Json);
    assert!(text.contains("\"overall\": \"fail\""));
}

#[test]
fn every_small_prime_passes() {
    for p in [3, 5, 7, 11, 13] {
        let report = run_pipeline(&PipelineParams { p, ..quick() }).unwrap();
        for c in &report.checks {
            assert_eq!(c.status, Status::Pass, "p={p} {}: {}", c.id, c.witness);
        }
    }
}

#[test]
fn text_order_matches_execution() {
    let report = run_pipeline(&quick()).unwrap();
    let text = emit_report(&report, OutputFormat::Text);
    let ids: Vec<&str> = text
        .lines()
        .filter(|l| l.starts_with('['))
        .map(|l| l.split_whitespace().nth(1).unwrap().trim_end_matches(':'))
        .collect();
    let expected: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
    assert_eq!(ids, expected);
    assert_eq!(
        expected,
        [
            "field_sanity",
            "non_isogeny",
            "gram_rank",
            "fibers",
            "theta_action",
            "riemann_roch",
            "blowups",
            "mw_action",
            "conjugation",
            "non_fg",
            "escape_witnesses",
            "schreier",
            "pair_calculus"
        ]
    );
}
