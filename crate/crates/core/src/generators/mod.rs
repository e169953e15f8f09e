//! Seeded synthetic AS-topology models.
//!
//! Every generator is a pure function of `(config, seed)`: the same pair
//! yields the same edge set on every platform. All randomness comes from a
//! single ChaCha8 stream per run.

mod ba;
mod glp;
mod inet;
mod pfp;
mod rng;
mod sampler;
mod waxman;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use ba::{generate_ba, BaConfig};
pub use glp::{generate_glp, GlpConfig, GLP_DEFAULT_BETA, GLP_DEFAULT_P_ADD};
pub use inet::{generate_inet, generate_inet_with_core, InetConfig, InetGraph, INET_MIN_NODES};
pub use pfp::{generate_pfp, pfp_kernel, PfpConfig, PFP_SEED_RING};
pub use rng::Seed;
pub use waxman::{generate_waxman, waxman_probability, WaxmanConfig};

use crate::error::ConfigError;
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ModelKind {
    Waxman,
    Ba,
    Glp,
    Inet,
    Pfp,
}

impl ModelKind {
    pub const ALL: [ModelKind; 5] = [
        ModelKind::Waxman,
        ModelKind::Ba,
        ModelKind::Glp,
        ModelKind::Inet,
        ModelKind::Pfp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Waxman => "waxman",
            ModelKind::Ba => "ba",
            ModelKind::Glp => "glp",
            ModelKind::Inet => "inet",
            ModelKind::Pfp => "pfp",
        }
    }
}

impl fmt::Display for ModelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ModelKind {
    type Err = ConfigError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ModelKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ConfigError::UnknownModel(s.to_owned()))
    }
}

/// Parameters for one model; `n` inside is the target node count.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum ModelConfig {
    Waxman(WaxmanConfig),
    Ba(BaConfig),
    Glp(GlpConfig),
    Inet(InetConfig),
    Pfp(PfpConfig),
}

impl ModelConfig {
    /// Default parameters for `kind` at size `n`.
    pub fn default_for(kind: ModelKind, n: usize) -> Self {
        match kind {
            ModelKind::Waxman => ModelConfig::Waxman(WaxmanConfig::new(n)),
            ModelKind::Ba => ModelConfig::Ba(BaConfig::new(n)),
            ModelKind::Glp => ModelConfig::Glp(GlpConfig::new(n)),
            ModelKind::Inet => ModelConfig::Inet(InetConfig::new(n)),
            ModelKind::Pfp => ModelConfig::Pfp(PfpConfig::new(n)),
        }
    }

    pub fn kind(&self) -> ModelKind {
        match self {
            ModelConfig::Waxman(_) => ModelKind::Waxman,
            ModelConfig::Ba(_) => ModelKind::Ba,
            ModelConfig::Glp(_) => ModelKind::Glp,
            ModelConfig::Inet(_) => ModelKind::Inet,
            ModelConfig::Pfp(_) => ModelKind::Pfp,
        }
    }

    pub fn n(&self) -> usize {
        match self {
            ModelConfig::Waxman(c) => c.n,
            ModelConfig::Ba(c) => c.n,
            ModelConfig::Glp(c) => c.n,
            ModelConfig::Inet(c) => c.n,
            ModelConfig::Pfp(c) => c.n,
        }
    }

    /// Same parameters at a different size.
    pub fn with_n(&self, n: usize) -> Self {
        let mut out = self.clone();
        match &mut out {
            ModelConfig::Waxman(c) => c.n = n,
            ModelConfig::Ba(c) => c.n = n,
            ModelConfig::Glp(c) => c.n = n,
            ModelConfig::Inet(c) => c.n = n,
            ModelConfig::Pfp(c) => c.n = n,
        }
        out
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        match self {
            ModelConfig::Waxman(c) => c.validate(),
            ModelConfig::Ba(c) => c.validate(),
            ModelConfig::Glp(c) => c.validate(),
            ModelConfig::Inet(c) => c.validate(),
            ModelConfig::Pfp(c) => c.validate(),
        }
    }

    pub fn generate(&self, seed: Seed) -> Result<Graph, ConfigError> {
        match self {
            ModelConfig::Waxman(c) => generate_waxman(c, seed),
            ModelConfig::Ba(c) => generate_ba(c, seed),
            ModelConfig::Glp(c) => generate_glp(c, seed),
            ModelConfig::Inet(c) => generate_inet(c, seed),
            ModelConfig::Pfp(c) => generate_pfp(c, seed),
        }
    }
}
