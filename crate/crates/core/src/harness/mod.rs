//! Measured-vs-synthetic comparison runs and their report files.

mod compare;
mod emit;
mod report;

pub use compare::{
    ks_discrete, ks_samples, run_comparison, run_seed, CompareRequest, ComparisonRun, ModelRun,
    RunStatus, SummaryStat, SyntheticRun,
};
pub use emit::{emit_metric_report, emit_report, read_comparison, ReportFormat, SCALARS_HEADER};
pub use report::{analyze, AnalyzeOptions, Distributions, Metric, MetricReport, Scalars};
