//! Spectrum of the normalized Laplacian `L = I - D^-1/2 A D^-1/2`.
//!
//! Rows of isolated nodes are zero, so each isolated node contributes one
//! zero eigenvalue and the zero multiplicity always equals the number of
//! connected components.
//!
//! Full mode runs a dense symmetric eigensolver. Extremes mode runs Lanczos
//! with full reorthogonalization on the sparse operator and returns the `k`
//! smallest and `k` largest Ritz values. Lanczos resolves one vector per
//! eigenspace, so repeated eigenvalues are reported once unless they come
//! from different components (a breakdown restarts the iteration).

use nalgebra::{DMatrix, SymmetricEigen};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::MetricError;
use crate::graph::Graph;

pub const FULL_SPECTRUM_LIMIT: usize = 3000;
pub const DEFAULT_EXTREMES: usize = 50;

const RESIDUAL_TOL: f64 = 1e-8;
const CHECK_EVERY: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumMode {
    Full,
    Extremes(usize),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumProfile {
    /// Ascending.
    pub eigenvalues: Vec<f64>,
    /// `true` when every eigenvalue (with multiplicity) is present.
    pub complete: bool,
    /// `false` if Lanczos hit its iteration cap before the requested
    /// extremes met the residual tolerance.
    pub converged: bool,
}

pub fn normalized_laplacian_spectrum(
    g: &Graph,
    mode: SpectrumMode,
) -> Result<SpectrumProfile, MetricError> {
    normalized_laplacian_spectrum_with_limit(g, mode, FULL_SPECTRUM_LIMIT)
}

pub fn normalized_laplacian_spectrum_with_limit(
    g: &Graph,
    mode: SpectrumMode,
    full_limit: usize,
) -> Result<SpectrumProfile, MetricError> {
    let n = g.node_count();
    if n < 2 {
        return Err(MetricError::TooFewNodes(2));
    }
    match mode {
        SpectrumMode::Full if n > full_limit => Err(MetricError::SizeLimit { n, limit: full_limit }),
        SpectrumMode::Full => Ok(full(g)),
        SpectrumMode::Extremes(k) if 2 * k >= n && n <= full_limit => Ok(full(g)),
        SpectrumMode::Extremes(k) => Ok(extremes(g, k.max(1))),
    }
}

fn inv_sqrt_degrees(g: &Graph) -> Vec<f64> {
    (0..g.node_count())
        .map(|v| match g.degree(v) {
            0 => 0.0,
            d => 1.0 / (d as f64).sqrt(),
        })
        .collect()
}

fn full(g: &Graph) -> SpectrumProfile {
    let n = g.node_count();
    let scale = inv_sqrt_degrees(g);
    let mut m = DMatrix::<f64>::zeros(n, n);
    for v in 0..n {
        if g.degree(v) > 0 {
            m[(v, v)] = 1.0;
        }
    }
    for (u, v) in g.edges() {
        let w = -scale[u] * scale[v];
        m[(u, v)] = w;
        m[(v, u)] = w;
    }
    let mut eigenvalues: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    eigenvalues.sort_by(f64::total_cmp);
    SpectrumProfile {
        eigenvalues,
        complete: true,
        converged: true,
    }
}

struct Operator<'a> {
    g: &'a Graph,
    scale: Vec<f64>,
}

impl Operator<'_> {
    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for v in 0..x.len() {
            if self.scale[v] == 0.0 {
                y[v] = 0.0;
                continue;
            }
            let s: f64 = self.g.neighbors(v).iter().map(|&w| self.scale[w] * x[w]).sum();
            y[v] = x[v] - self.scale[v] * s;
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn orthogonalize(w: &mut [f64], basis: &[Vec<f64>]) {
    // Two passes of classical Gram-Schmidt.
    for _ in 0..2 {
        for q in basis {
            let c = dot(q, w);
            for (wi, qi) in w.iter_mut().zip(q) {
                *wi -= c * qi;
            }
        }
    }
}

fn random_unit(n: usize, rng: &mut ChaCha8Rng, basis: &[Vec<f64>]) -> Option<Vec<f64>> {
    for _ in 0..4 {
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen::<f64>() - 0.5).collect();
        orthogonalize(&mut v, basis);
        let norm = dot(&v, &v).sqrt();
        if norm > 1e-8 {
            v.iter_mut().for_each(|x| *x /= norm);
            return Some(v);
        }
    }
    None
}

fn extremes(g: &Graph, k: usize) -> SpectrumProfile {
    let n = g.node_count();
    let op = Operator {
        g,
        scale: inv_sqrt_degrees(g),
    };
    let max_steps = n.min(10 * k + 300);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1a9c);

    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(max_steps);
    let mut alpha: Vec<f64> = Vec::with_capacity(max_steps);
    // beta[j] couples basis[j] and basis[j + 1]; zero after a restart.
    let mut beta: Vec<f64> = Vec::with_capacity(max_steps);
    let mut q = random_unit(n, &mut rng, &[]).expect("n >= 2");
    let mut w = vec![0.0; n];
    let mut ritz: Vec<f64> = Vec::new();
    let mut converged = false;

    while basis.len() < max_steps {
        op.apply(&q, &mut w);
        let a = dot(&q, &w);
        alpha.push(a);
        basis.push(q);
        orthogonalize(&mut w, &basis);
        let b = dot(&w, &w).sqrt();

        let steps = basis.len();
        let restart = b < 1e-10;
        if steps == max_steps || (steps >= 2 * k && steps.is_multiple_of(CHECK_EVERY)) || restart {
            let (values, last_row) = tridiagonal_eigen(&alpha, &beta);
            converged = extremes_converged(&values, &last_row, if restart { 0.0 } else { b }, k);
            ritz = values;
            if converged && !restart {
                break;
            }
        }
        if steps == max_steps {
            break;
        }
        if restart {
            match random_unit(n, &mut rng, &basis) {
                Some(next) => {
                    beta.push(0.0);
                    q = next;
                }
                None => break,
            }
        } else {
            beta.push(b);
            q = w.iter().map(|x| x / b).collect();
        }
    }
    if ritz.is_empty() {
        let (values, _) = tridiagonal_eigen(&alpha, &beta);
        ritz = values;
    }

    let complete = basis.len() == n;
    let eigenvalues = if complete || ritz.len() <= 2 * k {
        ritz
    } else {
        let mut out: Vec<f64> = ritz[..k].to_vec();
        out.extend_from_slice(&ritz[ritz.len() - k..]);
        out
    };
    SpectrumProfile {
        eigenvalues,
        complete,
        converged: converged || complete,
    }
}

/// Eigenvalues (ascending) of the Lanczos tridiagonal and the last
/// component of each eigenvector, in matching order.
fn tridiagonal_eigen(alpha: &[f64], beta: &[f64]) -> (Vec<f64>, Vec<f64>) {
    let m = alpha.len();
    let mut t = DMatrix::<f64>::zeros(m, m);
    for i in 0..m {
        t[(i, i)] = alpha[i];
        if i + 1 < m {
            t[(i, i + 1)] = beta[i];
            t[(i + 1, i)] = beta[i];
        }
    }
    let eig = SymmetricEigen::new(t);
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = idx.iter().map(|&i| eig.eigenvalues[i]).collect();
    let last = idx.iter().map(|&i| eig.eigenvectors[(m - 1, i)]).collect();
    (values, last)
}

fn extremes_converged(values: &[f64], last_row: &[f64], b: f64, k: usize) -> bool {
    let m = values.len();
    if m < 2 * k {
        return false;
    }
    (0..k)
        .chain(m - k..m)
        .all(|i| (b * last_row[i]).abs() < RESIDUAL_TOL)
}
