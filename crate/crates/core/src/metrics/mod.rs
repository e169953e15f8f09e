//! Topological metrics over an immutable [`Graph`](crate::graph::Graph).
//!
//! Every function here is pure. The all-pairs sweeps (paths, betweenness,
//! closeness) split sources into fixed-size chunks and reduce chunk results
//! in chunk order, so output is bit-identical for any worker count.

mod assortativity;
mod centrality;
mod clique;
mod clustering;
mod coreness;
mod degree;
mod paths;
mod rich_club;
mod spectrum;

pub use assortativity::assortativity;
pub use centrality::{centrality, CentralityProfile};
pub use clique::{top_clique_size, DEFAULT_CLIQUE_BUDGET};
pub use clustering::{clustering, local_clustering, ClusteringProfile};
pub use coreness::{coreness, CorenessProfile};
pub use degree::{degree_profile, DegreeProfile};
pub use paths::{path_stats, PathStats};
pub use rich_club::{rich_club, RichClubProfile};
pub use spectrum::{
    normalized_laplacian_spectrum, normalized_laplacian_spectrum_with_limit, SpectrumMode,
    SpectrumProfile, DEFAULT_EXTREMES, FULL_SPECTRUM_LIMIT,
};

/// Sources handled per work item in the all-pairs sweeps.
const SOURCE_CHUNK: usize = 64;

/// Maps `f` over `0..n` in fixed chunks and returns chunk results in order.
fn map_source_chunks<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(std::ops::Range<usize>) -> T + Sync,
{
    let chunks: Vec<std::ops::Range<usize>> = (0..n)
        .step_by(SOURCE_CHUNK)
        .map(|start| start..(start + SOURCE_CHUNK).min(n))
        .collect();
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        chunks.into_par_iter().map(&f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        chunks.into_iter().map(f).collect()
    }
}
