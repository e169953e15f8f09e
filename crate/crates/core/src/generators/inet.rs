//! Inet-style degree-driven generator.
//!
//! 1. Assign target degrees: a fixed fraction of nodes get degree 1, the
//!    rest draw from a power-law frequency `P(k) ~ k^-exponent`, `k >= 2`.
//! 2. Connect the `core_size` highest-degree nodes as a full mesh.
//! 3. Grow a spanning tree over the remaining degree >= 2 nodes, each
//!    joining a tree node chosen with linear weight on its target degree.
//! 4. Hang the degree-1 nodes off the tree the same way.
//! 5. Match the remaining free stubs, highest-degree nodes first.
//!
//! Node indices are ordered by non-increasing target degree, so the core
//! is always `0..core_size`.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use super::sampler::WeightedSampler;
use super::Seed;
use crate::error::ConfigError;
use crate::graph::{Graph, GraphBuilder};

/// Smallest topology the model accepts.
pub const INET_MIN_NODES: usize = 3037;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InetConfig {
    pub n: usize,
    pub frac_degree_one: f64,
    /// Exponent of the degree-frequency power law for degrees >= 2.
    pub exponent: f64,
    pub core_size: usize,
}

impl InetConfig {
    /// `frac_degree_one` defaults to 0.3; `exponent` and `core_size` are
    /// calibration inputs, not measured constants.
    pub fn new(n: usize) -> Self {
        InetConfig {
            n,
            frac_degree_one: 0.3,
            exponent: 2.2,
            core_size: 10,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n < INET_MIN_NODES {
            return Err(ConfigError::InetTooSmall {
                n: self.n,
                minimum: INET_MIN_NODES,
            });
        }
        if !(self.frac_degree_one > 0.0 && self.frac_degree_one < 1.0) {
            return Err(ConfigError::invalid(
                "inet",
                format!("frac_degree_one={} must lie in (0, 1)", self.frac_degree_one),
            ));
        }
        if !(self.exponent > 1.0) || !self.exponent.is_finite() {
            return Err(ConfigError::invalid("inet", format!("exponent={} must exceed 1", self.exponent)));
        }
        let degree_one = (self.frac_degree_one * self.n as f64).round() as usize;
        if self.core_size < 2 || self.core_size > self.n - degree_one {
            return Err(ConfigError::invalid(
                "inet",
                format!("core_size={} out of range", self.core_size),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct InetGraph {
    pub graph: Graph,
    /// Nodes connected as a full mesh.
    pub core: Vec<usize>,
}

pub fn generate_inet(cfg: &InetConfig, seed: Seed) -> Result<Graph, ConfigError> {
    generate_inet_with_core(cfg, seed).map(|out| out.graph)
}

pub fn generate_inet_with_core(cfg: &InetConfig, seed: Seed) -> Result<InetGraph, ConfigError> {
    cfg.validate()?;
    let mut rng = seed.rng();
    let n = cfg.n;
    let degrees = target_degrees(cfg, &mut rng);
    let core_size = cfg.core_size;
    let first_leaf = degrees.iter().position(|&d| d == 1).unwrap_or(n);

    let mut g = GraphBuilder::with_nodes(n);
    let mut free: Vec<usize> = degrees.clone();
    let link = |g: &mut GraphBuilder, free: &mut [usize], u: usize, v: usize| {
        if g.add_edge(u, v) {
            free[u] = free[u].saturating_sub(1);
            free[v] = free[v].saturating_sub(1);
        }
    };

    for u in 0..core_size {
        for v in u + 1..core_size {
            link(&mut g, &mut free, u, v);
        }
    }

    // Tree nodes with free stubs carry their target degree as weight.
    let mut open = WeightedSampler::new();
    let mut tree = WeightedSampler::new();
    for v in 0..n {
        let in_tree = v < core_size;
        open.push(if in_tree && free[v] > 0 { degrees[v] as f64 } else { 0.0 });
        tree.push(if in_tree { degrees[v] as f64 } else { 0.0 });
    }
    let refresh = |open: &mut WeightedSampler, free: &[usize], v: usize| {
        if free[v] == 0 {
            open.set(v, 0.0);
        }
    };
    let attach = |g: &mut GraphBuilder,
                  free: &mut Vec<usize>,
                  open: &mut WeightedSampler,
                  tree: &WeightedSampler,
                  rng: &mut rand_chacha::ChaCha8Rng,
                  v: usize| {
        let host = open
            .sample(rng)
            .or_else(|| tree.sample(rng))
            .expect("core is never empty");
        link(g, free, v, host);
        refresh(open, free, host);
    };

    let mut joiners: Vec<usize> = (core_size..first_leaf).collect();
    joiners.shuffle(&mut rng);
    for v in joiners {
        attach(&mut g, &mut free, &mut open, &tree, &mut rng, v);
        tree.set(v, degrees[v] as f64);
        if free[v] > 0 {
            open.set(v, degrees[v] as f64);
        }
    }
    for v in first_leaf..n {
        attach(&mut g, &mut free, &mut open, &tree, &mut rng, v);
    }

    for u in 0..first_leaf {
        while free[u] > 0 {
            let peer = open.sample_where(&mut rng, |v| v != u && !g.has_edge(u, v));
            match peer {
                Some(v) => {
                    link(&mut g, &mut free, u, v);
                    refresh(&mut open, &free, v);
                }
                None => free[u] = 0,
            }
        }
        open.set(u, 0.0);
    }

    Ok(InetGraph {
        graph: g.build(),
        core: (0..core_size).collect(),
    })
}

/// Target degrees sorted non-increasing; the last `round(frac * n)` are 1.
fn target_degrees<R: Rng>(cfg: &InetConfig, rng: &mut R) -> Vec<usize> {
    let n = cfg.n;
    let degree_one = (cfg.frac_degree_one * n as f64).round() as usize;
    let max_degree = n - 1;
    // Inverse-CDF table over k = 2..=max_degree.
    let mut cdf = Vec::with_capacity(max_degree - 1);
    let mut acc = 0.0;
    for k in 2..=max_degree {
        acc += (k as f64).powf(-cfg.exponent);
        cdf.push(acc);
    }
    let mut degrees: Vec<usize> = (0..n - degree_one)
        .map(|_| {
            let u = rng.gen::<f64>() * acc;
            let idx = cdf.partition_point(|&c| c <= u).min(cdf.len() - 1);
            idx + 2
        })
        .collect();
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    // Core members need room for the mesh plus at least one outside link.
    for d in degrees.iter_mut().take(cfg.core_size) {
        *d = (*d).max(cfg.core_size);
    }
    degrees.extend(std::iter::repeat_n(1, degree_one));
    degrees
}
