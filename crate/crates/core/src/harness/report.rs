use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};

use crate::error::ConfigError;
use crate::graph::Graph;
use crate::metrics::{self, SpectrumMode, DEFAULT_CLIQUE_BUDGET, DEFAULT_EXTREMES, FULL_SPECTRUM_LIMIT};

/// One metric family, the unit of selection for `analyze`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    Degree,
    Assortativity,
    Clustering,
    RichClub,
    Paths,
    Centrality,
    Coreness,
    Clique,
    Spectrum,
}

impl Metric {
    pub const ALL: [Metric; 9] = [
        Metric::Degree,
        Metric::Assortativity,
        Metric::Clustering,
        Metric::RichClub,
        Metric::Paths,
        Metric::Centrality,
        Metric::Coreness,
        Metric::Clique,
        Metric::Spectrum,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Degree => "degree",
            Metric::Assortativity => "assortativity",
            Metric::Clustering => "clustering",
            Metric::RichClub => "rich_club",
            Metric::Paths => "paths",
            Metric::Centrality => "centrality",
            Metric::Coreness => "coreness",
            Metric::Clique => "clique",
            Metric::Spectrum => "spectrum",
        }
    }

    /// Parses `all` or a comma-separated list of metric names.
    pub fn parse_list(s: &str) -> Result<BTreeSet<Metric>, ConfigError> {
        if s.trim().eq_ignore_ascii_case("all") {
            return Ok(Metric::ALL.into_iter().collect());
        }
        s.split(',')
            .filter(|t| !t.trim().is_empty())
            .map(str::parse)
            .collect()
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().replace('-', "_");
        Metric::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(&s))
            .ok_or_else(|| ConfigError::invalid("analyze", format!("unknown metric `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalyzeOptions {
    pub metrics: BTreeSet<Metric>,
    /// `None` searches without a time limit.
    pub clique_budget: Option<Duration>,
    /// `None` picks full below `full_spectrum_limit` nodes and
    /// `Extremes(DEFAULT_EXTREMES)` above.
    pub spectrum_mode: Option<SpectrumMode>,
    pub full_spectrum_limit: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        AnalyzeOptions {
            metrics: Metric::ALL.into_iter().collect(),
            clique_budget: Some(DEFAULT_CLIQUE_BUDGET),
            spectrum_mode: None,
            full_spectrum_limit: FULL_SPECTRUM_LIMIT,
        }
    }
}

impl AnalyzeOptions {
    pub fn only(metrics: impl IntoIterator<Item = Metric>) -> Self {
        AnalyzeOptions {
            metrics: metrics.into_iter().collect(),
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Scalars {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub avg_degree: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub assortativity: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma_literal: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mean_path: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diameter: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unreachable_pairs: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub avg_betweenness: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub avg_closeness: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_core: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top_clique: Option<usize>,
    /// Second-smallest normalized Laplacian eigenvalue.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_2: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda_max: Option<f64>,
}

impl Scalars {
    /// `(name, value)` for every present scalar, in fixed order.
    pub fn entries(&self) -> Vec<(&'static str, f64)> {
        let as_f = |v: Option<usize>| v.map(|x| x as f64);
        [
            ("avg_degree", self.avg_degree),
            ("assortativity", self.assortativity),
            ("gamma", self.gamma),
            ("gamma_literal", self.gamma_literal),
            ("mean_path", self.mean_path),
            ("diameter", as_f(self.diameter)),
            ("unreachable_pairs", self.unreachable_pairs.map(|x| x as f64)),
            ("avg_betweenness", self.avg_betweenness),
            ("avg_closeness", self.avg_closeness),
            ("max_core", as_f(self.max_core)),
            ("top_clique", as_f(self.top_clique)),
            ("lambda_2", self.lambda_2),
            ("lambda_max", self.lambda_max),
        ]
        .into_iter()
        .filter_map(|(name, v)| v.map(|v| (name, v)))
        .collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Distributions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_k: Option<BTreeMap<usize, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub knn_norm: Option<BTreeMap<usize, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c_of_k: Option<BTreeMap<usize, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<BTreeMap<usize, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_h: Option<BTreeMap<usize, f64>>,
    /// Fraction of nodes per core layer.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coreness: Option<BTreeMap<usize, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<f64>>,
}

impl Distributions {
    /// Keyed distributions in fixed order, for plot files.
    pub fn keyed(&self) -> Vec<(&'static str, &BTreeMap<usize, f64>)> {
        [
            ("p_k", &self.p_k),
            ("knn_norm", &self.knn_norm),
            ("c_of_k", &self.c_of_k),
            ("phi", &self.phi),
            ("p_h", &self.p_h),
            ("coreness", &self.coreness),
        ]
        .into_iter()
        .filter_map(|(name, d)| d.as_ref().map(|d| (name, d)))
        .collect()
    }
}

/// Every computed quantity for one graph. Metrics that were not requested
/// are absent; requested ones that could not be computed are absent with
/// a reason in `notes`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MetricReport {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub scalars: Scalars,
    pub distributions: Distributions,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum_complete: Option<bool>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub notes: BTreeMap<String, String>,
}

pub fn analyze(g: &Graph, graph_id: impl Into<String>, options: &AnalyzeOptions) -> MetricReport {
    let mut report = MetricReport {
        graph_id: graph_id.into(),
        n: g.node_count(),
        m: g.edge_count(),
        scalars: Scalars::default(),
        distributions: Distributions::default(),
        spectrum_complete: None,
        notes: BTreeMap::new(),
    };
    let s = &mut report.scalars;
    let d = &mut report.distributions;
    let notes = &mut report.notes;
    let wants = |m: Metric| options.metrics.contains(&m);

    if wants(Metric::Degree) {
        let p = metrics::degree_profile(g);
        s.avg_degree = Some(p.avg_degree);
        d.p_k = Some(p.p_k);
        d.knn_norm = Some(p.knn_norm);
    }
    if wants(Metric::Assortativity) {
        match metrics::assortativity(g) {
            Ok(r) => s.assortativity = Some(r),
            Err(e) => {
                notes.insert(Metric::Assortativity.to_string(), e.to_string());
            }
        }
    }
    if wants(Metric::Clustering) {
        let c = metrics::clustering(g);
        s.gamma = Some(c.gamma);
        s.gamma_literal = Some(c.gamma_literal);
        d.c_of_k = Some(c.c_of_k);
        if c.gamma != c.gamma_literal {
            notes.insert(
                Metric::Clustering.to_string(),
                "gamma averages over nodes with degree >= 2; gamma_literal divides by N".into(),
            );
        }
    }
    if wants(Metric::RichClub) {
        if g.node_count() >= 2 {
            d.phi = Some(metrics::rich_club(g).phi);
        } else {
            notes.insert(Metric::RichClub.to_string(), "needs at least 2 nodes".into());
        }
    }
    if wants(Metric::Paths) {
        match metrics::path_stats(g) {
            Ok(p) => {
                if p.reachable_pairs > 0 {
                    s.mean_path = Some(p.mean);
                    s.diameter = Some(p.diameter);
                }
                s.unreachable_pairs = Some(p.unreachable_pairs);
                d.p_h = Some(p.p_h);
            }
            Err(e) => {
                notes.insert(Metric::Paths.to_string(), e.to_string());
            }
        }
    }
    if wants(Metric::Centrality) {
        match metrics::centrality(g) {
            Ok(c) => {
                s.avg_betweenness = Some(c.avg_betweenness);
                let present: Vec<f64> = c.closeness.iter().flatten().copied().collect();
                if !present.is_empty() {
                    s.avg_closeness = Some(present.iter().sum::<f64>() / present.len() as f64);
                }
            }
            Err(e) => {
                notes.insert(Metric::Centrality.to_string(), e.to_string());
            }
        }
    }
    if wants(Metric::Coreness) {
        let c = metrics::coreness(g);
        s.max_core = Some(c.max_core);
        let n = g.node_count() as f64;
        d.coreness = Some(
            c.histogram()
                .into_iter()
                .map(|(k, count)| (k, count as f64 / n))
                .collect(),
        );
    }
    if wants(Metric::Clique) {
        match metrics::top_clique_size(g, options.clique_budget) {
            Ok(size) => s.top_clique = Some(size),
            Err(e) => {
                notes.insert(Metric::Clique.to_string(), e.to_string());
            }
        }
    }
    if wants(Metric::Spectrum) {
        let mode = options.spectrum_mode.unwrap_or(if g.node_count() <= options.full_spectrum_limit {
            SpectrumMode::Full
        } else {
            SpectrumMode::Extremes(DEFAULT_EXTREMES)
        });
        match metrics::normalized_laplacian_spectrum_with_limit(g, mode, options.full_spectrum_limit) {
            Ok(spec) => {
                s.lambda_2 = spec.eigenvalues.get(1).copied();
                s.lambda_max = spec.eigenvalues.last().copied();
                report.spectrum_complete = Some(spec.complete);
                if !spec.converged {
                    notes.insert(
                        Metric::Spectrum.to_string(),
                        "Lanczos stopped before all requested extremes converged".into(),
                    );
                }
                d.eigenvalues = Some(spec.eigenvalues);
            }
            Err(e) => {
                notes.insert(Metric::Spectrum.to_string(), e.to_string());
            }
        }
    }
    report
}
