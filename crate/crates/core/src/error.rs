use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("no edges in input")]
    EmptyInput,
    #[error("duplicate edge {0} - {1}")]
    DuplicateEdge(String, String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ConfigError {
    #[error("{model}: {message}")]
    Invalid { model: &'static str, message: String },
    #[error("inet requires at least {minimum} nodes, got {n}")]
    InetTooSmall { n: usize, minimum: usize },
    #[error("unknown model `{0}` (expected one of waxman, ba, glp, inet, pfp)")]
    UnknownModel(String),
}

impl ConfigError {
    pub(crate) fn invalid(model: &'static str, message: impl Into<String>) -> Self {
        ConfigError::Invalid {
            model,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("assortativity undefined: all edge endpoints have the same degree")]
    ZeroDegreeVariance,
    #[error("metric needs at least one edge")]
    NoEdges,
    #[error("metric needs at least {0} nodes")]
    TooFewNodes(usize),
    #[error("clique search exceeded its time budget (best lower bound {lower_bound})")]
    Timeout { lower_bound: usize },
    #[error("full spectrum limited to {limit} nodes, graph has {n}; use extremes mode")]
    SizeLimit { n: usize, limit: usize },
}

#[derive(Debug, Error)]
pub enum DatasetError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("window must be positive, got {0} s")]
    BadWindow(i64),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
