//! Brute-force reference implementations. Deliberately naive: dense
//! matrices, all-pairs loops, exhaustive enumeration. Nothing here shares
//! code with the library beyond reading `Graph` adjacency.

#![allow(dead_code)]

use std::collections::BTreeMap;

use astopo::Graph;
use rand::Rng;

pub const UNREACHABLE: usize = usize::MAX;

/// Random graph with `n` nodes and edge probability `p`, made connected by
/// linking consecutive components' first nodes.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges.iter().copied());
    let parts = g.connected_components();
    let mut first = vec![usize::MAX; parts.count()];
    for v in (0..n).rev() {
        first[parts.component_id[v]] = v;
    }
    for w in first.windows(2) {
        edges.push((w[0], w[1]));
    }
    Graph::from_edges(n, edges)
}

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.node_count();
    let mut a = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

pub fn degrees(g: &Graph) -> Vec<usize> {
    adjacency(g).iter().map(|row| row.iter().filter(|&&x| x).count()).collect()
}

/// Floyd-Warshall hop distances.
pub fn distances(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let a = adjacency(g);
    let mut d = vec![vec![UNREACHABLE; n]; n];
    for i in 0..n {
        d[i][i] = 0;
        for j in 0..n {
            if a[i][j] {
                d[i][j] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] != UNREACHABLE && d[k][j] != UNREACHABLE && d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// Number of shortest paths between every pair: the count of walks of
/// length `d(s,t)` from `s` to `t`, built from matrix powers of the
/// adjacency matrix keeping only entries whose walk length equals the
/// distance.
pub fn shortest_path_counts(g: &Graph, dist: &[Vec<usize>]) -> Vec<Vec<f64>> {
    let n = g.node_count();
    let a = adjacency(g);
    let mut sigma = vec![vec![0.0; n]; n];
    let mut power: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    for i in 0..n {
        sigma[i][i] = 1.0;
    }
    for len in 1..n {
        let mut next = vec![vec![0.0; n]; n];
        for i in 0..n {
            for k in 0..n {
                if power[i][k] == 0.0 {
                    continue;
                }
                for j in 0..n {
                    if a[k][j] {
                        next[i][j] += power[i][k];
                    }
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if dist[i][j] != len {
                    next[i][j] = 0.0;
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                if dist[i][j] == len {
                    sigma[i][j] = next[i][j];
                }
            }
        }
        power = next;
    }
    sigma
}

/// Betweenness over unordered pairs: for every pair `s < t` and every
/// other node `v` on some shortest path, add `sigma_sv * sigma_vt / sigma_st`.
pub fn betweenness(g: &Graph) -> Vec<f64> {
    let n = g.node_count();
    let d = distances(g);
    let sigma = shortest_path_counts(g, &d);
    let mut b = vec![0.0; n];
    for s in 0..n {
        for t in s + 1..n {
            if d[s][t] == UNREACHABLE {
                continue;
            }
            for v in 0..n {
                if v == s || v == t || d[s][v] == UNREACHABLE || d[v][t] == UNREACHABLE {
                    continue;
                }
                if d[s][v] + d[v][t] == d[s][t] {
                    b[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
                }
            }
        }
    }
    b
}

pub fn closeness(g: &Graph) -> Vec<Option<f64>> {
    distances(g)
        .iter()
        .map(|row| {
            let total: usize = row.iter().filter(|&&x| x != UNREACHABLE).sum();
            (total > 0).then(|| 1.0 / total as f64)
        })
        .collect()
}

pub struct Paths {
    pub p_h: BTreeMap<usize, f64>,
    pub mean: f64,
    pub diameter: usize,
    pub unreachable: u64,
}

pub fn paths(g: &Graph) -> Paths {
    let n = g.node_count();
    let d = distances(g);
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    let mut unreachable = 0;
    for s in 0..n {
        for t in s + 1..n {
            if d[s][t] == UNREACHABLE {
                unreachable += 1;
            } else {
                *counts.entry(d[s][t]).or_default() += 1;
            }
        }
    }
    let reachable: u64 = counts.values().sum();
    let p_h: BTreeMap<usize, f64> = counts.iter().map(|(&h, &c)| (h, c as f64 / reachable as f64)).collect();
    let mean = counts.iter().map(|(&h, &c)| (h as u64 * c) as f64).sum::<f64>() / reachable as f64;
    Paths {
        p_h,
        mean,
        diameter: counts.keys().copied().max().unwrap_or(0),
        unreachable,
    }
}

pub fn p_k(g: &Graph) -> BTreeMap<usize, f64> {
    let deg = degrees(g);
    let mut out: BTreeMap<usize, f64> = BTreeMap::new();
    for &k in &deg {
        *out.entry(k).or_default() += 1.0;
    }
    out.values_mut().for_each(|c| *c /= deg.len() as f64);
    out
}

/// Mean over degree-k nodes of their mean neighbour degree, over N-1.
pub fn knn_norm(g: &Graph) -> BTreeMap<usize, f64> {
    let n = g.node_count();
    let a = adjacency(g);
    let deg = degrees(g);
    let mut sums: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    if n < 2 {
        return BTreeMap::new();
    }
    for v in 0..n {
        if deg[v] == 0 {
            continue;
        }
        let neighbour_total: usize = (0..n).filter(|&w| a[v][w]).map(|w| deg[w]).sum();
        let entry = sums.entry(deg[v]).or_default();
        entry.0 += neighbour_total as f64 / deg[v] as f64;
        entry.1 += 1;
    }
    sums.into_iter()
        .map(|(k, (total, count))| (k, total / count as f64 / (n - 1) as f64))
        .collect()
}

/// Pearson correlation over both orientations of every edge.
pub fn assortativity(g: &Graph) -> Option<f64> {
    let deg = degrees(g);
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for (u, v) in g.edges() {
        xs.push(deg[u] as f64);
        ys.push(deg[v] as f64);
        xs.push(deg[v] as f64);
        ys.push(deg[u] as f64);
    }
    let len = xs.len() as f64;
    if xs.is_empty() {
        return None;
    }
    let mx = xs.iter().sum::<f64>() / len;
    let my = ys.iter().sum::<f64>() / len;
    let cov: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let vx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let vy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    if vx == 0.0 || vy == 0.0 {
        return None;
    }
    Some(cov / (vx * vy).sqrt())
}

/// Local coefficient by triple loop; `None` below degree 2.
pub fn local_clustering(g: &Graph) -> Vec<Option<f64>> {
    let n = g.node_count();
    let a = adjacency(g);
    let deg = degrees(g);
    (0..n)
        .map(|i| {
            if deg[i] < 2 {
                return None;
            }
            let mut triangles = 0usize;
            for j in 0..n {
                for k in j + 1..n {
                    if a[i][j] && a[i][k] && a[j][k] {
                        triangles += 1;
                    }
                }
            }
            Some(triangles as f64 / (deg[i] * (deg[i] - 1) / 2) as f64)
        })
        .collect()
}

pub struct Clustering {
    pub gamma: f64,
    pub gamma_literal: f64,
    pub c_of_k: BTreeMap<usize, f64>,
}

pub fn clustering(g: &Graph) -> Clustering {
    let local = local_clustering(g);
    let deg = degrees(g);
    let present: Vec<f64> = local.iter().flatten().copied().collect();
    let total: f64 = present.iter().sum();
    let mut bins: BTreeMap<usize, (f64, usize)> = BTreeMap::new();
    for (v, c) in local.iter().enumerate() {
        if let Some(c) = c {
            let e = bins.entry(deg[v]).or_default();
            e.0 += c;
            e.1 += 1;
        }
    }
    Clustering {
        gamma: if present.is_empty() { 0.0 } else { total / present.len() as f64 },
        gamma_literal: total / g.node_count() as f64,
        c_of_k: bins.into_iter().map(|(k, (s, c))| (k, s / c as f64)).collect(),
    }
}

/// Edge density among the top-rho nodes by (degree desc, index asc).
pub fn rich_club(g: &Graph) -> BTreeMap<usize, f64> {
    let n = g.node_count();
    let a = adjacency(g);
    let deg = degrees(g);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| deg[y].cmp(&deg[x]).then(x.cmp(&y)));
    (2..=n)
        .map(|rho| {
            let top = &order[..rho];
            let mut links = 0usize;
            for i in 0..rho {
                for j in i + 1..rho {
                    if a[top[i]][top[j]] {
                        links += 1;
                    }
                }
            }
            (rho, links as f64 / (rho * (rho - 1) / 2) as f64)
        })
        .collect()
}

/// For each l = 1, 2, ..., repeatedly delete nodes of degree < l; a node's
/// coreness is the largest l it survives.
pub fn coreness(g: &Graph) -> Vec<usize> {
    let n = g.node_count();
    let a = adjacency(g);
    let mut core = vec![0; n];
    for l in 1..n {
        let mut alive = vec![true; n];
        loop {
            let mut removed = false;
            for v in 0..n {
                if alive[v] && (0..n).filter(|&w| alive[w] && a[v][w]).count() < l {
                    alive[v] = false;
                    removed = true;
                }
            }
            if !removed {
                break;
            }
        }
        if !alive.iter().any(|&x| x) {
            break;
        }
        for v in 0..n {
            if alive[v] {
                core[v] = l;
            }
        }
    }
    core
}

/// Largest clique by enumerating every clique (each grown in increasing
/// node order from every smaller one).
pub fn max_clique(g: &Graph) -> usize {
    fn grow(a: &[Vec<bool>], clique: &mut Vec<usize>, best: &mut usize) {
        *best = (*best).max(clique.len());
        let start = clique.last().map_or(0, |&v| v + 1);
        for v in start..a.len() {
            if clique.iter().all(|&u| a[u][v]) {
                clique.push(v);
                grow(a, clique, best);
                clique.pop();
            }
        }
    }
    let a = adjacency(g);
    let mut best = 0;
    grow(&a, &mut Vec::new(), &mut best);
    best
}

/// Dense normalized Laplacian; isolated nodes give zero rows.
pub fn normalized_laplacian(g: &Graph) -> Vec<Vec<f64>> {
    let n = g.node_count();
    let a = adjacency(g);
    let deg = degrees(g);
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        if deg[i] > 0 {
            l[i][i] = 1.0;
        }
        for j in 0..n {
            if a[i][j] {
                l[i][j] = -1.0 / ((deg[i] * deg[j]) as f64).sqrt();
            }
        }
    }
    l
}

/// Cyclic Jacobi eigenvalues of a symmetric matrix, ascending.
pub fn jacobi_eigenvalues(mut m: Vec<Vec<f64>>) -> Vec<f64> {
    let n = m.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| m[i][j] * m[i][j])
            .sum();
        if off < 1e-24 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
            }
        }
    }
    let mut eig: Vec<f64> = (0..n).map(|i| m[i][i]).collect();
    eig.sort_by(f64::total_cmp);
    eig
}

pub fn spectrum(g: &Graph) -> Vec<f64> {
    jacobi_eigenvalues(normalized_laplacian(g))
}
