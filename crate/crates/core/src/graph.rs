//! Immutable undirected simple graph.
//!
//! Nodes are dense indices `0..N`; every node carries an external label
//! (an AS number for measured topologies, the decimal index for generated
//! ones). Adjacency lists are sorted, symmetric, and free of self-loops and
//! duplicates.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::GraphError;

/// What to do when the same unordered pair appears twice in the input.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DedupPolicy {
    Reject,
    SilentlyMerge,
}

/// Counters collected while building a graph from raw labelled pairs.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildStats {
    pub self_loops_dropped: usize,
    pub duplicates_merged: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
    labels: Vec<String>,
}

impl Graph {
    /// Builds a graph on `n` nodes labelled `"0".."n-1"`.
    ///
    /// Self-loops and repeated pairs are ignored; callers that need them
    /// counted go through [`Graph::from_labeled_edges`].
    ///
    /// # Panics
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_edges_labeled(labels, edges)
    }

    /// Same as [`Graph::from_edges`] with caller-provided labels.
    pub fn from_edges_labeled<I>(labels: Vec<String>, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) out of range for {n} nodes");
            if u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        Graph {
            adj,
            edge_count: twice / 2,
            labels,
        }
    }

    /// Builds a graph from labelled pairs, assigning dense indices in
    /// first-appearance order.
    pub fn from_labeled_edges<S: AsRef<str>>(
        pairs: &[(S, S)],
        policy: DedupPolicy,
    ) -> Result<(Graph, BuildStats), GraphError> {
        if pairs.is_empty() {
            return Err(GraphError::EmptyInput);
        }
        let mut index: HashMap<&str, usize> = HashMap::new();
        let mut labels: Vec<String> = Vec::new();
        // Resolve indices for every pair first so self-loop-only nodes still
        // receive an index.
        let mut resolved: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            let mut ends = [0usize; 2];
            for (slot, label) in ends.iter_mut().zip([a.as_ref(), b.as_ref()]) {
                *slot = *index.entry(label).or_insert_with(|| {
                    labels.push(label.to_owned());
                    labels.len() - 1
                });
            }
            resolved.push((ends[0], ends[1]));
        }

        let mut stats = BuildStats::default();
        let mut seen: HashSet<(usize, usize)> = HashSet::with_capacity(resolved.len());
        let mut edges = Vec::with_capacity(resolved.len());
        for (u, v) in resolved {
            if u == v {
                stats.self_loops_dropped += 1;
                continue;
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                match policy {
                    DedupPolicy::Reject => {
                        return Err(GraphError::DuplicateEdge(
                            labels[key.0].clone(),
                            labels[key.1].clone(),
                        ))
                    }
                    DedupPolicy::SilentlyMerge => {
                        stats.duplicates_merged += 1;
                        continue;
                    }
                }
            }
            edges.push(key);
        }
        Ok((Graph::from_edges_labeled(labels, edges), stats))
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Degree of every node, indexed by node.
    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn connected_components(&self) -> ComponentPartition {
        partition(&self.adj)
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().count() == 1
    }

    /// Induced subgraph on the largest component. Ties go to the component
    /// holding the smallest node index. Relative node order and labels are
    /// preserved.
    pub fn largest_component(&self) -> Graph {
        let parts = self.connected_components();
        if parts.count() <= 1 {
            return self.clone();
        }
        let keep: Vec<usize> = (0..self.node_count())
            .filter(|&v| parts.component_id[v] == 0)
            .collect();
        self.induced_subgraph(&keep)
    }

    /// Induced subgraph on `nodes` (which must be strictly increasing).
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Graph {
        let mut new_index = vec![usize::MAX; self.node_count()];
        for (i, &v) in nodes.iter().enumerate() {
            new_index[v] = i;
        }
        let adj: Vec<Vec<usize>> = nodes
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (new_index[w] != usize::MAX).then_some(new_index[w]))
                    .collect()
            })
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adj,
            edge_count,
            labels: nodes.iter().map(|&v| self.labels[v].clone()).collect(),
        }
    }
}

fn partition(adj: &[Vec<usize>]) -> ComponentPartition {
    let n = adj.len();
    let mut raw_id = vec![usize::MAX; n];
    let mut raw_sizes = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if raw_id[start] != usize::MAX {
            continue;
        }
        let id = raw_sizes.len();
        raw_id[start] = id;
        queue.push_back(start);
        let mut size = 0;
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &w in &adj[u] {
                if raw_id[w] == usize::MAX {
                    raw_id[w] = id;
                    queue.push_back(w);
                }
            }
        }
        raw_sizes.push(size);
    }

    // Components were discovered in order of their minimum node index;
    // a stable sort by size keeps that as the tie-break.
    let mut order: Vec<usize> = (0..raw_sizes.len()).collect();
    order.sort_by(|&a, &b| raw_sizes[b].cmp(&raw_sizes[a]));
    let mut remap = vec![0; order.len()];
    for (new, &old) in order.iter().enumerate() {
        remap[old] = new;
    }
    ComponentPartition {
        component_id: raw_id.into_iter().map(|c| remap[c]).collect(),
        sizes: order.iter().map(|&c| raw_sizes[c]).collect(),
    }
}

/// Connected components, numbered so that component 0 is the largest.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub component_id: Vec<usize>,
    /// Non-increasing.
    pub sizes: Vec<usize>,
}

impl ComponentPartition {
    pub fn count(&self) -> usize {
        self.sizes.len()
    }
}

/// Incrementally built simple graph used by the generators.
#[derive(Debug, Clone, Default)]
pub(crate) struct GraphBuilder {
    adj: Vec<Vec<usize>>,
    edges: HashSet<(usize, usize)>,
}

impl GraphBuilder {
    pub fn with_nodes(n: usize) -> Self {
        GraphBuilder {
            adj: vec![Vec::new(); n],
            edges: HashSet::new(),
        }
    }

    pub fn add_node(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Returns `false` (and changes nothing) for self-loops and existing edges.
    pub fn add_edge(&mut self, u: usize, v: usize) -> bool {
        if u == v || !self.edges.insert((u.min(v), u.max(v))) {
            return false;
        }
        self.adj[u].push(v);
        self.adj[v].push(u);
        true
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        if !self.edges.remove(&(u.min(v), u.max(v))) {
            return false;
        }
        self.adj[u].retain(|&w| w != v);
        self.adj[v].retain(|&w| w != u);
        true
    }

    /// Adds a ring over the first `k` nodes (`k >= 3`).
    pub fn add_ring(&mut self, k: usize) {
        for i in 0..k {
            self.add_edge(i, (i + 1) % k);
        }
    }

    pub fn connected_components(&self) -> ComponentPartition {
        partition(&self.adj)
    }

    pub fn build(self) -> Graph {
        let n = self.adj.len();
        Graph::from_edges(n, self.edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Graph {
        Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)])
    }

    #[test]
    fn build_path_from_labels() {
        let (g, stats) =
            Graph::from_labeled_edges(&[("1", "2"), ("2", "3")], DedupPolicy::Reject).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (3, 2));
        assert_eq!(g.labels(), &["1", "2", "3"]);
        assert_eq!(stats, BuildStats::default());
    }

    #[test]
    fn reversed_pair_merges() {
        let (g, stats) =
            Graph::from_labeled_edges(&[("1", "2"), ("2", "1")], DedupPolicy::SilentlyMerge)
                .unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (2, 1));
        assert_eq!(stats.duplicates_merged, 1);
    }

    #[test]
    fn reversed_pair_rejected() {
        let err = Graph::from_labeled_edges(&[("1", "2"), ("2", "1")], DedupPolicy::Reject)
            .unwrap_err();
        assert!(matches!(err, GraphError::DuplicateEdge(_, _)));
    }

    #[test]
    fn self_loop_dropped_and_counted() {
        let (g, stats) =
            Graph::from_labeled_edges(&[("5", "5"), ("5", "6")], DedupPolicy::Reject).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (2, 1));
        assert_eq!(stats.self_loops_dropped, 1);
    }

    #[test]
    fn empty_input_rejected() {
        let pairs: [(&str, &str); 0] = [];
        assert_eq!(
            Graph::from_labeled_edges(&pairs, DedupPolicy::Reject).unwrap_err(),
            GraphError::EmptyInput
        );
    }

    #[test]
    fn degree_sequences() {
        assert_eq!(k3().degree_sequence(), vec![2, 2, 2]);
        let star = Graph::from_edges(5, (1..5).map(|i| (0, i)));
        assert_eq!(star.degree_sequence(), vec![4, 1, 1, 1, 1]);
        let path = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(path.degree_sequence(), vec![1, 2, 2, 1]);
    }

    #[test]
    fn components() {
        assert_eq!(k3().connected_components().sizes, vec![3]);
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)]);
        let parts = g.connected_components();
        assert_eq!(parts.sizes, vec![3, 2]);
        assert_eq!(parts.component_id, vec![1, 1, 0, 0, 0]);
        let single = Graph::from_edges(1, []);
        assert_eq!(single.connected_components().sizes, vec![1]);
    }

    #[test]
    fn largest_component_cases() {
        let g = k3();
        assert_eq!(g.largest_component(), g);

        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4), (2, 4)]);
        let lc = g.largest_component();
        assert_eq!((lc.node_count(), lc.edge_count()), (3, 3));
        assert_eq!(lc.labels(), &["2", "3", "4"]);

        // Two K2s: the one containing node 0 wins.
        let g = Graph::from_edges(4, [(2, 3), (0, 1)]);
        assert_eq!(g.largest_component().labels(), &["0", "1"]);
        let g = Graph::from_edges(4, [(1, 3), (0, 2)]);
        assert_eq!(g.largest_component().labels(), &["0", "2"]);
    }

    #[test]
    fn largest_component_idempotent() {
        let g = Graph::from_edges(7, [(0, 1), (2, 3), (3, 4), (5, 6), (4, 5)]);
        let once = g.largest_component();
        assert_eq!(once.largest_component(), once);
    }

    #[test]
    fn builder_rejects_loops_and_duplicates() {
        let mut b = GraphBuilder::with_nodes(3);
        assert!(b.add_edge(0, 1));
        assert!(!b.add_edge(1, 0));
        assert!(!b.add_edge(2, 2));
        assert!(b.remove_edge(1, 0));
        assert_eq!(b.edge_count(), 0);
    }
}
