use crate::error::MetricError;
use crate::graph::Graph;

/// Newman's degree assortativity coefficient: the Pearson correlation of
/// the degrees at either end of an edge, each edge counted in both
/// orientations.
///
/// Regular graphs (every edge end has the same degree) have zero variance
/// and yield [`MetricError::ZeroDegreeVariance`] rather than a number.
pub fn assortativity(g: &Graph) -> Result<f64, MetricError> {
    let m = g.edge_count();
    if m == 0 {
        return Err(MetricError::NoEdges);
    }
    let mut first = None;
    let mut varied = false;
    let (mut sum, mut sum_sq, mut sum_prod) = (0.0, 0.0, 0.0);
    for (u, v) in g.edges() {
        let (j, k) = (g.degree(u), g.degree(v));
        let first = *first.get_or_insert(j);
        varied |= j != first || k != first;
        let (j, k) = (j as f64, k as f64);
        sum += j + k;
        sum_sq += j * j + k * k;
        sum_prod += j * k;
    }
    if !varied {
        return Err(MetricError::ZeroDegreeVariance);
    }
    let m = m as f64;
    let mean = sum / (2.0 * m);
    let num = sum_prod / m - mean * mean;
    let den = sum_sq / (2.0 * m) - mean * mean;
    Ok((num / den).clamp(-1.0, 1.0))
}
