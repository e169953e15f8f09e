use std::fs;

use astopo::generators::BaConfig;
use astopo::harness::{
    analyze, emit_report, read_comparison, run_comparison, AnalyzeOptions, CompareRequest, Metric, ReportFormat,
    RunStatus,
};
use astopo::{ConfigError, Graph, HarnessError, ModelConfig, ModelKind, Seed};

fn k4() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

fn small_request(models: Vec<ModelConfig>, seeds: usize) -> CompareRequest {
    CompareRequest {
        models,
        seeds_per_model: seeds,
        master_seed: Seed(42),
        analyze: AnalyzeOptions::default(),
        jobs: None,
    }
}

#[test]
fn k4_against_ba_matches_size() {
    let ba = ModelConfig::Ba(BaConfig { n: 0, m: 1, m0: 3 });
    let run = run_comparison(&k4(), "k4", &small_request(vec![ba], 3)).unwrap();
    assert_eq!(run.models.len(), 1);
    let model = &run.models[0];
    assert_eq!(model.status, RunStatus::Applicable);
    assert_eq!(model.runs.len(), 3);
    assert!(model.runs.iter().all(|r| r.report.n == 4 && r.report.m == 4));
    assert_eq!(model.summary["avg_degree"].count, 3);
    assert!(model.runs.iter().all(|r| r.ks.contains_key("p_k")));
}

#[test]
fn inet_marked_inapplicable_below_minimum() {
    let target = ModelConfig::default_for(ModelKind::Pfp, 84).generate(Seed(1)).unwrap();
    let req = CompareRequest::from_names(&["inet"], 2, Seed(1)).unwrap();
    let run = run_comparison(&target, "as84", &req).unwrap();
    match &run.models[0].status {
        RunStatus::Inapplicable { reason } => assert!(reason.contains("3037")),
        other => panic!("{other:?}"),
    }
    assert!(run.models[0].runs.is_empty());
    assert_eq!(run.target.n, 84);
}

#[test]
fn unknown_model_is_a_config_error() {
    assert!(matches!(
        CompareRequest::from_names(&["nosuch"], 1, Seed(0)),
        Err(ConfigError::UnknownModel(_))
    ));
}

#[test]
fn invalid_parameters_are_errors_not_inapplicable() {
    let bad = ModelConfig::Ba(BaConfig { n: 0, m: 0, m0: 3 });
    let err = run_comparison(&k4(), "k4", &small_request(vec![bad], 1)).unwrap_err();
    assert!(matches!(err, HarnessError::Config(_)));
    let zero = small_request(vec![ModelConfig::default_for(ModelKind::Ba, 0)], 0);
    assert!(run_comparison(&k4(), "k4", &zero).is_err());
}

#[test]
fn comparison_is_deterministic_and_independent_of_jobs() {
    let target = ModelConfig::default_for(ModelKind::Glp, 120).generate(Seed(3)).unwrap();
    let mut req = CompareRequest::from_names(&["ba", "pfp", "waxman"], 2, Seed(7)).unwrap();
    let a = serde_json::to_string(&run_comparison(&target, "t", &req).unwrap()).unwrap();
    let b = serde_json::to_string(&run_comparison(&target, "t", &req).unwrap()).unwrap();
    req.jobs = Some(1);
    let c = serde_json::to_string(&run_comparison(&target, "t", &req).unwrap()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn json_round_trip_and_stable_csv() {
    let target = ModelConfig::default_for(ModelKind::Ba, 60).generate(Seed(9)).unwrap();
    let req = CompareRequest::from_names(&["ba", "glp", "inet"], 2, Seed(9)).unwrap();
    let run = run_comparison(&target, "t", &req).unwrap();
    let dir = tempfile::tempdir().unwrap();
    for format in ReportFormat::ALL {
        emit_report(&run, format, dir.path()).unwrap();
    }
    let back = read_comparison(&dir.path().join("comparison.json")).unwrap();
    assert_eq!(back, run);

    let csv = fs::read_to_string(dir.path().join("scalars.csv")).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("graph_id,model,seed,metric,value"));
    assert!(lines.all(|l| l.split(',').count() == 5));

    let again = tempfile::tempdir().unwrap();
    emit_report(&run, ReportFormat::Csv, again.path()).unwrap();
    assert_eq!(csv, fs::read_to_string(again.path().join("scalars.csv")).unwrap());

    let p_k = fs::read_to_string(dir.path().join("plotdata/t/p_k.dat")).unwrap();
    assert!(p_k.lines().all(|l| l.split(' ').count() == 2));
}

#[test]
fn analyze_selection_and_failures() {
    let only = AnalyzeOptions::only([Metric::Degree, Metric::Spectrum]);
    let r = analyze(&k4(), "k4", &only);
    assert!(r.scalars.avg_degree.is_some());
    assert!(r.distributions.eigenvalues.is_some());
    assert!(r.scalars.gamma.is_none() && r.scalars.mean_path.is_none());
    assert!(r.notes.is_empty());

    let lone = Graph::from_edges_labeled(vec!["1".into()], []);
    let r = analyze(&lone, "lone", &AnalyzeOptions::default());
    assert!(r.notes.contains_key("paths"));
    assert!(r.notes.contains_key("spectrum"));
    assert_eq!(r.scalars.avg_degree, Some(0.0));
}

#[test]
fn clustering_discrepancy_is_recorded() {
    let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2)]);
    let r = analyze(&g, "k3+1", &AnalyzeOptions::only([Metric::Clustering]));
    assert_eq!(r.scalars.gamma, Some(1.0));
    assert_eq!(r.scalars.gamma_literal, Some(0.75));
    assert!(r.notes.contains_key("clustering"));
}
