use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::report::{analyze, AnalyzeOptions, MetricReport};
use crate::error::{ConfigError, HarnessError};
use crate::generators::{ModelConfig, ModelKind, Seed};
use crate::graph::Graph;

/// Size used to check model parameters independently of the target size.
const PARAMETER_PROBE_N: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq)]
pub struct CompareRequest {
    /// Parameter templates; `n` is overwritten with the target's size.
    pub models: Vec<ModelConfig>,
    pub seeds_per_model: usize,
    pub master_seed: Seed,
    pub analyze: AnalyzeOptions,
    /// Worker cap; `None` uses every core. Output does not depend on it.
    pub jobs: Option<usize>,
}

impl CompareRequest {
    /// Default parameters for each named model.
    pub fn from_names<S: AsRef<str>>(names: &[S], seeds_per_model: usize, master_seed: Seed) -> Result<Self, ConfigError> {
        let models = names
            .iter()
            .map(|s| s.as_ref().parse::<ModelKind>().map(|k| ModelConfig::default_for(k, 0)))
            .collect::<Result<_, _>>()?;
        Ok(CompareRequest {
            models,
            seeds_per_model,
            master_seed,
            analyze: AnalyzeOptions::default(),
            jobs: None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SummaryStat {
    pub mean: f64,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum RunStatus {
    Applicable,
    Inapplicable { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticRun {
    pub seed: u64,
    pub report: MetricReport,
    /// Two-sample Kolmogorov-Smirnov statistic against the target, per
    /// distribution. A comparison convenience, not a model property.
    pub ks: BTreeMap<String, f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelRun {
    pub model: ModelKind,
    pub config: ModelConfig,
    #[serde(flatten)]
    pub status: RunStatus,
    pub runs: Vec<SyntheticRun>,
    /// Mean, min and max of each scalar across runs.
    pub summary: BTreeMap<String, SummaryStat>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRun {
    pub master_seed: u64,
    pub seeds_per_model: usize,
    pub target: MetricReport,
    pub models: Vec<ModelRun>,
}

/// Seed of run `run` of the `position`-th requested model.
pub fn run_seed(master: Seed, position: usize, run: usize) -> Seed {
    master.child(((position as u64) << 32) | run as u64)
}

pub fn run_comparison(
    target: &Graph,
    target_id: &str,
    request: &CompareRequest,
) -> Result<ComparisonRun, HarnessError> {
    if request.seeds_per_model == 0 {
        return Err(ConfigError::invalid("compare", "seeds_per_model must be at least 1").into());
    }
    let n = target.node_count();
    let mut configs = Vec::with_capacity(request.models.len());
    let mut tasks = Vec::new();
    for (position, template) in request.models.iter().enumerate() {
        template.with_n(PARAMETER_PROBE_N).validate()?;
        let cfg = template.with_n(n);
        let status = match cfg.validate() {
            Ok(()) => {
                for run in 0..request.seeds_per_model {
                    tasks.push((position, run));
                }
                RunStatus::Applicable
            }
            Err(e) => RunStatus::Inapplicable { reason: e.to_string() },
        };
        configs.push((cfg, status));
    }

    let target_report = analyze(target, target_id, &request.analyze);
    let execute = |&(position, run): &(usize, usize)| -> Result<SyntheticRun, HarnessError> {
        let cfg: &ModelConfig = &configs[position].0;
        let seed = run_seed(request.master_seed, position, run);
        let graph = cfg.generate(seed)?;
        let id = format!("{}-{}", cfg.kind(), run);
        let report = analyze(&graph, id, &request.analyze);
        let ks = ks_against(&target_report, &report);
        Ok(SyntheticRun {
            seed: seed.0,
            report,
            ks,
        })
    };
    let results: Vec<Result<SyntheticRun, HarnessError>> = run_tasks(&tasks, request.jobs, execute);

    let mut per_model: Vec<Vec<SyntheticRun>> = vec![Vec::new(); configs.len()];
    for (&(position, _), result) in tasks.iter().zip(results) {
        per_model[position].push(result?);
    }
    let models = configs
        .into_iter()
        .zip(per_model)
        .map(|((config, status), runs)| ModelRun {
            model: config.kind(),
            summary: summarize(&runs),
            config,
            status,
            runs,
        })
        .collect();

    Ok(ComparisonRun {
        master_seed: request.master_seed.0,
        seeds_per_model: request.seeds_per_model,
        target: target_report,
        models,
    })
}

#[cfg(feature = "parallel")]
fn run_tasks<T, F>(tasks: &[(usize, usize)], jobs: Option<usize>, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(&(usize, usize)) -> T + Sync,
{
    use rayon::prelude::*;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .expect("thread pool");
    pool.install(|| tasks.par_iter().map(&f).collect())
}

#[cfg(not(feature = "parallel"))]
fn run_tasks<T, F>(tasks: &[(usize, usize)], _jobs: Option<usize>, f: F) -> Vec<T>
where
    F: Fn(&(usize, usize)) -> T,
{
    tasks.iter().map(f).collect()
}

fn summarize(runs: &[SyntheticRun]) -> BTreeMap<String, SummaryStat> {
    let mut values: BTreeMap<&'static str, Vec<f64>> = BTreeMap::new();
    for run in runs {
        for (name, v) in run.report.scalars.entries() {
            values.entry(name).or_default().push(v);
        }
    }
    values
        .into_iter()
        .map(|(name, vs)| {
            let stat = SummaryStat {
                mean: vs.iter().sum::<f64>() / vs.len() as f64,
                min: vs.iter().copied().fold(f64::INFINITY, f64::min),
                max: vs.iter().copied().fold(f64::NEG_INFINITY, f64::max),
                count: vs.len(),
            };
            (name.to_owned(), stat)
        })
        .collect()
}

/// Largest CDF gap between two distributions over integer keys.
pub fn ks_discrete(a: &BTreeMap<usize, f64>, b: &BTreeMap<usize, f64>) -> f64 {
    let mut keys: Vec<usize> = a.keys().chain(b.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    let (mut ca, mut cb, mut worst) = (0.0, 0.0, 0.0f64);
    for k in keys {
        ca += a.get(&k).copied().unwrap_or(0.0);
        cb += b.get(&k).copied().unwrap_or(0.0);
        worst = worst.max((ca - cb).abs());
    }
    worst
}

/// Two-sample KS statistic between sorted samples.
pub fn ks_samples(a: &[f64], b: &[f64]) -> f64 {
    let (mut i, mut j, mut worst) = (0, 0, 0.0f64);
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        worst = worst.max((i as f64 / a.len() as f64 - j as f64 / b.len() as f64).abs());
    }
    worst
}

fn ks_against(target: &MetricReport, other: &MetricReport) -> BTreeMap<String, f64> {
    let mut out = BTreeMap::new();
    let (t, o) = (&target.distributions, &other.distributions);
    for (name, a, b) in [
        ("p_k", &t.p_k, &o.p_k),
        ("p_h", &t.p_h, &o.p_h),
        ("coreness", &t.coreness, &o.coreness),
    ] {
        if let (Some(a), Some(b)) = (a, b) {
            out.insert(name.to_owned(), ks_discrete(a, b));
        }
    }
    let both_complete = target.spectrum_complete == Some(true) && other.spectrum_complete == Some(true);
    if let (Some(a), Some(b), true) = (&t.eigenvalues, &o.eigenvalues, both_complete) {
        if !a.is_empty() && !b.is_empty() {
            out.insert("eigenvalues".to_owned(), ks_samples(a, b));
        }
    }
    out
}
